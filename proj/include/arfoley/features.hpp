#pragma once

// Conditioning streams derived from an event script: a 25 Hz timing stream, a
// 4 Hz scene stream, and their fusion onto the 25 Hz audio token grid.

#include <cstdint>

#include "arfoley/corpus.hpp"
#include "arfoley/tensor.hpp"

namespace arfoley::features {

inline constexpr double kSyncRate = 25.0;
inline constexpr double kSemanticRate = 4.0;
inline constexpr std::size_t kSyncDim = 32;
inline constexpr std::size_t kSemanticDim = 48;
inline constexpr std::size_t kFusedDim = kSyncDim + kSemanticDim;
// ceil(kSyncRate / kSemanticRate)
inline constexpr std::size_t kUpsample = 7;

struct FeatureTimeline {
    double rate = kSyncRate;
    FTensor vectors;  // N x width
    std::size_t frames() const { return vectors.rows(); }
};

// ceil(duration * rate), tolerant to the decimal representation of duration.
std::size_t frame_count(double duration_s, double rate);

struct SyncOptions {
    double decay_s = 0.12;
    double noise_sigma = 0.01;
};

// Fixed unit-norm key per class (kNumClasses x kSyncDim).
const FTensor& sync_keys();
// Fixed class embedding for the scene stream (kNumClasses x kSemanticDim).
const FTensor& semantic_basis();

// Frame i = sum over events of key(class) * amp * exp(-(i - onset_frame) / (25 * decay)),
// for i >= onset_frame, plus N(0, sigma^2) noise drawn from `seed`.
FeatureTimeline synth_sync_features(const corpus::EventScript& s, std::uint64_t seed, const SyncOptions& opt = {});

// Window w covers [w/4, (w+1)/4) s; its vector is the mean one-hot of classes
// sounding in the window, times `basis` (zero when nothing sounds).
FeatureTimeline synth_semantic_features(const corpus::EventScript& s, const FTensor& basis = semantic_basis());

// Repeats each scene frame kUpsample times, truncates to the timing stream's
// length, and concatenates per frame: [sync | scene].
FTensor fuse(const FeatureTimeline& sync, const FeatureTimeline& semantic);

// Convenience: fused conditioning for a script.
FTensor fused_features(const corpus::EventScript& s, std::uint64_t seed);

}  // namespace arfoley::features
