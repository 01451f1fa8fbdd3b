#pragma once

// Autoregressive generation with classifier-free guidance over the delayed
// token stream, using per-branch attention caches.

#include <random>
#include <span>
#include <vector>

#include "arfoley/model.hpp"
#include "arfoley/rvq.hpp"

namespace arfoley::sampler {

struct SamplerConfig {
    double gamma = 3.0;
    double temperature = 1.0;
    double top_p = 0.9;
    std::size_t top_k = 25;
    std::uint64_t seed = 0;
    double duration_s = 4.0;
    // Run the unconditional branch even when gamma == 1 (its logits are then unused).
    bool force_two_branches = false;
    bool record_norms = false;

    void validate() const;
};

nlohmann::json to_json(const SamplerConfig& c);
SamplerConfig sampler_config_from_json(const nlohmann::json& j);

// Per head: uncond + gamma * (cond - uncond); gamma == 1 returns cond exactly.
FTensor cfg_combine(const FTensor& cond, const FTensor& uncond, double gamma);

struct Candidates {
    std::vector<int> ids;       // by descending logit, ties by ascending id
    std::vector<double> probs;  // renormalised, sums to 1
};

// temperature -> top_k -> top_p. The nucleus is the shortest prefix of the
// top_k set whose mass, renormalised over that set, reaches top_p.
Candidates filter_candidates(std::span<const float> logits, double temperature, std::size_t top_k, double top_p);

// Samples from filter_candidates; a single candidate consumes no randomness.
int filter_and_sample(std::span<const float> logits, const SamplerConfig& c, std::mt19937_64& rng);

// Incremental decoder for one branch. logits() are the K x (D + 2) logits
// predicting the next delayed step.
class Decoder {
public:
    Decoder(const model::ModelConfig& c, const model::ParamSet<float>& p, const model::Sequence& prefix);
    const FTensor& logits() const { return logits_; }
    std::size_t steps_fed() const { return fed_; }
    void feed(std::span<const std::int32_t> tokens);

private:
    void run(Tape<float>& t, std::span<const Var> w, Var x, std::span<const int> positions);

    const model::ModelConfig& c_;
    const model::ParamSet<float>& p_;
    model::ParamIndex ix_;
    model::KvCache cache_;
    FTensor logits_;
    std::size_t fed_ = 0;
};

struct Generation {
    DelayedGrid delayed;
    TokenGrid tokens;
    std::vector<double> cond_norms, uncond_norms;  // per step, when recorded
    double step_seconds = 0.0;                     // wall time of the step loop, prefixes excluded
};

// Frames for a duration on the 25/s token grid.
std::size_t frames_for(double duration_s);

// `cond` supplies text and video (rows = frames_for(duration)); its audio is ignored.
Generation generate(const model::ModelConfig& c, const model::ParamSet<float>& p, const model::Sequence& cond,
                    const SamplerConfig& sc);

// Decodes tokens with the first `layers` codebooks back to samples at 8 kHz.
std::vector<float> tokens_to_wave(const TokenGrid& tokens, const rvq::CodebookSet& books, std::size_t layers);

}  // namespace arfoley::sampler
