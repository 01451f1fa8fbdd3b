#pragma once

// Run configuration and the end-to-end stages behind the command-line tool:
// corpus -> tokenizer -> model training -> generation -> evaluation.
//

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "arfoley/classifier.hpp"
#include "arfoley/corpus.hpp"
#include "arfoley/features.hpp"
#include "arfoley/model.hpp"
#include "arfoley/rvq.hpp"
#include "arfoley/sampler.hpp"
#include "arfoley/train.hpp"

namespace arfoley::pipeline {

struct CorpusSection {
    std::size_t n = 2000;
    std::uint64_t seed = 1;
    corpus::ScriptOptions script;
    corpus::FilterOptions filter;
};

struct TrainSection {
    std::size_t steps = 5000;
    std::size_t batch = 16;
    std::uint64_t seed = 1;
    std::size_t checkpoint_every = 500;
    std::size_t val_clips = 64;
};

struct EvalSection {
    std::size_t clips = 200;
    std::uint64_t seed = 1;
    eval::ClassifierOptions classifier;
    double min_classifier_accuracy = 0.95;
};

struct RunConfig {
    CorpusSection corpus;
    features::SyncOptions features;
    rvq::TrainOptions tokenizer;
    model::ModelConfig model;  // K and D always mirror the tokenizer section
    train::AdamWConfig optim;
    TrainSection train;
    sampler::SamplerConfig sampler;
    EvalSection eval;

    void validate() const;
};

nlohmann::json to_json(const RunConfig& c);
// Unknown keys are rejected at every level; missing keys keep defaults.
RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& p);
// Applies "section.key=value" (value parsed as JSON, else taken as a string).
void apply_override(nlohmann::json& j, const std::string& assignment);
// Hash of the whole configuration, recorded in every output.
std::string config_hash(const RunConfig& c);

// Hash of the sections an artifact depends on. Consumers compare these, so
// e.g. changing sampler settings or the step budget keeps checkpoints usable.
enum class Stage { corpus, tokenizer, model };
std::string stage_hash(const RunConfig& c, Stage s);

// ---- corpus ----

enum class Split { train, val, test };
const char* split_name(Split s);
Split split_of(std::size_t index);  // index mod 10: 0-7 train, 8 val, 9 test

struct ClipRecord {
    std::string id;
    std::size_t index = 0;
    Split split = Split::train;
    std::string script_path, wav_path;  // relative to the corpus directory
    double duration_s = 0.0;
    std::string status = "pending";     // pending | accepted | rejected
    std::string reason;
    double silence = 0.0, clipping = 0.0;
};

nlohmann::json to_json(const ClipRecord& r, const std::string& stage, const std::string& full);
ClipRecord clip_record_from_json(const nlohmann::json& j);

// Writes clips/<id>.wav, clips/<id>.json and manifest.jsonl.
void corpus_gen(const RunConfig& c, const std::filesystem::path& dir);
// Recomputes filter verdicts and rewrites manifest.jsonl in place.
void corpus_filter(const RunConfig& c, const std::filesystem::path& dir);

std::vector<ClipRecord> read_manifest(const std::filesystem::path& dir);
// Stage hash shared by every record.
std::string manifest_hash(const std::filesystem::path& dir);

struct Clip {
    ClipRecord record;
    corpus::EventScript script;
    std::vector<float> wave;
};

// Accepted clips of one split, in index order; at most `limit` when nonzero.
std::vector<Clip> load_clips(const std::filesystem::path& dir, Split split, std::size_t limit = 0);

// ---- tokenizer ----

// Trains codebooks on the accepted training clips; writes `out` and `out`.json.
rvq::TrainReport tokenizer_train(const RunConfig& c, const std::filesystem::path& corpus_dir,
                                 const std::filesystem::path& out);

// ---- model ----

std::uint64_t feature_seed(const std::string& clip_id);
FTensor clip_features(const RunConfig& c, const corpus::EventScript& s, const std::string& clip_id);
model::Sequence make_sequence(const RunConfig& c, const Clip& clip, const rvq::CodebookSet& books);
std::vector<int> tokenize_caption(const std::string& text);

struct TrainRun {
    double init_val_loss = 0.0;
    double final_val_loss = 0.0;
    std::size_t steps = 0;
};

// Checkpoints go to out/step-NNNNNN and out/final; logs to out/train_log.jsonl
// and out/val_log.jsonl; wall time to out/timing.json (not reproducible).
// With `resume`, training continues from that checkpoint.
TrainRun train_model(const RunConfig& c, const std::filesystem::path& corpus_dir,
                     const std::filesystem::path& codebooks, const std::filesystem::path& out,
                     const std::optional<std::filesystem::path>& resume = std::nullopt);

// ---- generation ----

struct GenerateRequest {
    std::optional<corpus::EventScript> script;  // drives caption and video features
    std::string caption;                        // used when no script is given
    std::string clip_id = "prompt";             // feature noise seed
    bool debug = false;                         // record per-step logit norms
};

struct GenerateResult {
    sampler::Generation gen;
    std::vector<float> wave;
};

GenerateResult generate_clip(const RunConfig& c, const train::TrainState& model, const rvq::CodebookSet& books,
                             const GenerateRequest& req, const sampler::SamplerConfig& sc);
// Writes the WAV and <wav>.json sidecar.
void write_generation(const std::filesystem::path& wav, const RunConfig& c, const sampler::SamplerConfig& sc,
                      const GenerateResult& r, const nlohmann::json& extra);

// ---- evaluation ----

enum class Source { generated, reference, reconstruction };

struct EvalOptions {
    Source source = Source::generated;
    double gamma = 3.0;
    std::size_t layers = 0;  // reconstruction layers; 0 means all
    bool allow_mixed_hash = false;
};

struct EvalReport {
    double fd = 0, kl = 0, is = 0, onset_f1 = 0, class_match = 0;
    std::size_t n = 0;
    nlohmann::json to_json() const;
};

// Trains (or loads from `cache` when present) the metrics classifier and checks its accuracy.
eval::Classifier obtain_classifier(const RunConfig& c, const std::optional<std::filesystem::path>& cache);

struct EvalInputs {
    std::filesystem::path corpus_dir, codebooks, checkpoint;
};

EvalReport evaluate(const RunConfig& c, const EvalInputs& in, const eval::Classifier& clf, const EvalOptions& opt);

// Rows for the gamma sweep and the RVQ-layer sweep.
std::string format_table(const std::string& key, const std::vector<std::pair<std::string, EvalReport>>& rows);

}  // namespace arfoley::pipeline
