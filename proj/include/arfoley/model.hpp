#pragma once

// Decoder-only transformer over the conditioning prefix and the delayed audio
// stream, with one output head per codebook layer.
//
// Sequence layout (rows of the model input):
//   BOS_text, text tokens | null_text, SEP, video frames | null_video, SEP,
//   BOS_audio, H_a(0), ..., H_a(S-2)
// where S = L + K - 1 delayed steps and H_a(s) = sum_j AudioEmbed_j(delayed(j, s)).
// The row holding BOS_audio or H_a(s-1) predicts step s, so the S audio rows
// predict steps 0..S-1.
//
// Rotary position ids are time-aligned: video frame i has id i, the audio row
// predicting step s has id s, SEP after video has id L, and the text prefix
// uses negative ids ending at -1.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "arfoley/autograd.hpp"
#include "arfoley/grid.hpp"
#include "json.hpp"

namespace arfoley::model {

struct ModelConfig {
    std::size_t d_model = 128;
    std::size_t n_layers = 4;
    std::size_t n_heads = 4;
    std::size_t ffn_mult = 4;
    std::size_t K = 8;
    std::size_t D = 256;
    std::size_t text_vocab = 16;
    std::size_t max_seq_len = 640;
    std::size_t fused_dim = 80;
    // 0: linear heads; otherwise one hidden GELU layer of this width per head.
    std::size_t head_hidden = 0;
    double cond_dropout = 0.10;
    double init_std = 0.02;
    double rope_base = 10000.0;
    std::vector<double> loss_weights;  // empty means default_loss_weights(K)

    std::int32_t pad() const { return std::int32_t(D); }
    std::int32_t bos() const { return std::int32_t(D + 1); }
    std::size_t out_vocab() const { return D + 2; }
    std::vector<double> weights() const;
    void validate() const;
};

// Progressively decaying per-layer weights; for K = 8 the fixed reference vector.
std::vector<double> default_loss_weights(std::size_t K);

nlohmann::json to_json(const ModelConfig& c);
// Rejects unknown keys; missing keys keep their defaults.
ModelConfig model_config_from_json(const nlohmann::json& j);

enum Special : std::size_t { kBosText, kSep, kBosAudio, kNullText, kNullVideo, kNumSpecial };

// Positions of every named tensor inside a ParamSet.
struct ParamIndex {
    struct Block {
        std::size_t ln1_g, ln1_b, wqkv, bqkv, wo, bo, ln2_g, ln2_b, w1, b1, w2, b2;
    };
    std::size_t word, specials, seg_video, seg_audio;
    std::size_t vid_w1, vid_b1, vid_w2, vid_b2;
    std::vector<std::size_t> audio;
    std::vector<Block> blocks;
    std::size_t lnf_g, lnf_b;
    std::vector<std::size_t> head_hw, head_hb, head_w, head_b;  // hidden entries unused for linear heads
};

template <typename T>
struct ParamSet {
    std::vector<std::string> names;
    std::vector<Tensor<T>> tensors;
    std::vector<char> decay;  // weight decay applies (linear weight matrices only)

    std::size_t find(const std::string& name) const;
    std::size_t count() const;  // total scalar parameters
    template <typename U>
    ParamSet<U> cast() const {
        ParamSet<U> out{names, {}, decay};
        for (const auto& t : tensors) out.tensors.push_back(t.template cast<U>());
        return out;
    }
};

ParamIndex param_index(const ModelConfig& c);
// Names, shapes and decay flags in canonical order.
ParamSet<float> init_params(const ModelConfig& c, std::uint64_t seed);

struct Sequence {
    std::vector<int> text;  // caption tokens
    FTensor video;          // L x fused_dim
    DelayedGrid audio;      // K x S; may have zero columns for a generation prefix
    bool null_text = false;
    bool null_video = false;
};

enum class Segment : std::uint8_t { bos_text, text, sep, video, bos_audio, audio };

struct Layout {
    std::vector<Segment> tags;
    std::vector<int> positions;
    std::size_t audio_start = 0;  // row of BOS_audio
    std::size_t audio_rows = 0;   // BOS_audio plus fed steps
};

// Training layout feeds steps 0..S-2; `fed_steps` overrides the count.
Layout layout(const Sequence& s, std::size_t fed_steps);
std::size_t training_fed_steps(const Sequence& s);

// Independently replaces the text and video segments by their null rows with
// probability p each.
Sequence drop_conditions(const Sequence& s, std::mt19937_64& rng, double p);

// Sum over layers of the audio embeddings of one delayed step.
template <typename T>
Var audio_step_embedding(Tape<T>& t, const ParamIndex& ix, std::span<const Var> w, std::span<const std::int32_t> tokens);

// Per-layer attention caches for incremental decoding.
struct KvCache {
    std::vector<std::vector<FTensor>> k, v;  // [layer][head] rows x head_dim
    std::size_t rows = 0;
};

// Input rows of a sequence (with `fed_steps` audio steps after BOS_audio).
template <typename T>
Var embed(Tape<T>& t, const ModelConfig& c, const ParamIndex& ix, std::span<const Var> w, const Sequence& s,
          const Layout& lay);

// Transformer blocks and final norm. With a cache, new rows attend to cached
// rows first and their keys/values are appended.
template <typename T>
Var backbone(Tape<T>& t, const ModelConfig& c, const ParamIndex& ix, std::span<const Var> w, Var x,
             std::span<const int> positions, KvCache* cache = nullptr);

// One logits Var (rows x (D + 2)) per head.
template <typename T>
std::vector<Var> heads(Tape<T>& t, const ModelConfig& c, const ParamIndex& ix, std::span<const Var> w, Var h);

// Targets for head j at audio row s: delayed(j, s), or -1 where padding is mandated.
std::vector<std::vector<int>> head_targets(const DelayedGrid& delayed, std::size_t rows);

// sum_j weights_j * CE_j, each CE a mean over valid rows. per_head receives CE_j.
template <typename T>
Var weighted_ce(Tape<T>& t, std::span<const Var> logits, const std::vector<std::vector<int>>& targets,
                std::span<const double> weights, std::vector<double>* per_head = nullptr);

struct LossResult {
    Var loss;
    std::vector<double> per_head;
    std::size_t frames = 0;  // L, the per-head valid target count
};

// Full training forward for one sequence, on leaves already bound to `w`.
template <typename T>
LossResult sequence_loss(Tape<T>& t, const ModelConfig& c, const ParamIndex& ix, std::span<const Var> w,
                         const Sequence& s, std::span<const double> weights);

template <typename T>
std::vector<Var> bind(Tape<T>& t, const ParamSet<T>& p, bool requires_grad);

// Logits of every audio row of a full (non-cached) forward: [head] -> rows x (D + 2).
std::vector<FTensor> full_logits(const ModelConfig& c, const ParamSet<float>& p, const Sequence& s, std::size_t fed_steps);

}  // namespace arfoley::model
