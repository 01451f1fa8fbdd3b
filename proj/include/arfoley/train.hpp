#pragma once

// AdamW training of the decoder and the checkpoint container.

#include <filesystem>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arfoley/model.hpp"

namespace arfoley::train {

struct AdamWConfig {
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 0.01;  // decoupled, on tensors flagged `decay`
    double clip_norm = 0.0;      // global gradient norm clip; 0 disables
};

nlohmann::json to_json(const AdamWConfig& c);
AdamWConfig adamw_config_from_json(const nlohmann::json& j);

struct TrainState {
    model::ModelConfig config;
    model::ParamSet<float> params;
    std::vector<FTensor> m, v;  // Adam moments, one per parameter tensor
    std::uint64_t step = 0;
    std::mt19937_64 rng;        // batch sampling and condition dropout
};

TrainState init_state(const model::ModelConfig& c, std::uint64_t seed);

class NonFiniteLoss : public std::runtime_error {
public:
    NonFiniteLoss(std::size_t batch_id, const std::string& what) : std::runtime_error(what), batch_id(batch_id) {}
    std::size_t batch_id;
};

struct StepResult {
    double loss = 0.0;              // frame-weighted mean of the sequence losses
    std::vector<double> per_head;   // frame-weighted per-head CE
    double grad_norm = 0.0;         // before clipping
};

// Gradient of the frame-weighted batch loss sum_b (L_b / sum L) * loss_b.
// Sequences are taken as given; condition dropout is the caller's job.
StepResult batch_gradient(const model::ModelConfig& c, const model::ParamSet<float>& p,
                          std::span<const model::Sequence> batch, std::vector<FTensor>& grads);

// One AdamW update. On a non-finite loss or gradient the state is left
// untouched and NonFiniteLoss carries `batch_id`.
StepResult train_step(TrainState& s, std::span<const model::Sequence> batch, const AdamWConfig& opt,
                      std::size_t batch_id = 0);

// Draws `size` training sequences with replacement from `data` using the
// state rng, then applies condition dropout with probability `p_drop`.
// `picked` receives the drawn indices.
std::vector<model::Sequence> sample_batch(TrainState& s, std::span<const model::Sequence> data, std::size_t size,
                                          double p_drop, std::vector<std::size_t>* picked = nullptr);

// Frame-weighted validation loss without dropout or gradients.
StepResult evaluate_loss(const model::ModelConfig& c, const model::ParamSet<float>& p,
                         std::span<const model::Sequence> data);

// Directory holding manifest.json and tensors.bin (concatenated FARY blocks of
// parameters, then first and second moments). `extra` is stored verbatim.
void save_checkpoint(const std::filesystem::path& dir, const TrainState& s, const nlohmann::json& extra = {});
TrainState load_checkpoint(const std::filesystem::path& dir, nlohmann::json* extra = nullptr);

}  // namespace arfoley::train
