#pragma once

// Local event classifier used as the embedding model for evaluation, and the
// onset and class alignment scores between a script and a waveform.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "arfoley/corpus.hpp"
#include "arfoley/tensor.hpp"

namespace arfoley::eval {

inline constexpr std::size_t kWindowFrames = 10;  // 400 ms of 40 ms latent frames
inline constexpr std::size_t kBands = 32;
inline constexpr std::size_t kInputDim = kWindowFrames * kBands;
inline constexpr std::size_t kHiddenDim = 64;
inline constexpr std::size_t kEmbedDim = 32;

// Log band energies of every latent frame (rows x kBands). Samples are clamped to [-1, 1].
FTensor band_energies(std::span<const float> wave);

// Window of kWindowFrames rows starting at `frame` (zero energy past the end),
// shifted so its largest entry is 0.
std::vector<float> window_features(const FTensor& bands, std::size_t frame);

struct ClassifierOptions {
    std::size_t train_scripts = 1500;
    std::size_t epochs = 25;
    std::size_t batch = 64;
    double lr = 2e-3;
    std::uint64_t seed = 0xc1a55;
};

struct Classification {
    FTensor posteriors;  // n x kNumClasses
    FTensor embeddings;  // n x kEmbedDim
};

class Classifier {
public:
    Classifier();  // untrained; every use throws

    // Trains on event windows of synthesized random scripts plus isolated events.
    static Classifier train(const ClassifierOptions& opt = {});
    bool trained() const { return trained_; }

    Classification classify(const FTensor& features) const;  // rows of kInputDim
    // Posterior and embedding of one clip: window outputs averaged with window energy weights.
    Classification clip(std::span<const float> wave) const;

    // Fraction correct on held-out isolated events (one per class and seed).
    double single_event_accuracy(std::uint64_t seed, std::size_t per_class) const;

    void save(const std::filesystem::path& p) const;
    static Classifier load(const std::filesystem::path& p);
    std::string encode() const;

private:
    void check() const;
    std::vector<FTensor> w_;  // w1, b1, w2, b2, w3, b3
    bool trained_ = false;
};

// Energy onsets: 20 ms frames whose level exceeds -50 dBFS and is more than
// 6 dB above every frame of the preceding 100 ms.
std::vector<double> detect_onsets(std::span<const float> wave, std::uint32_t rate = 8000);

// One-to-one matching within +-tol; F1 = 2 matches / (detected + reference).
double onset_f1(std::span<const double> detected, std::span<const double> reference, double tol = 0.080);

struct Alignment {
    double onset_f1 = 0.0;
    double class_match = 0.0;
};

Alignment alignment_scores(const corpus::EventScript& script, std::span<const float> wave, const Classifier& clf);

}  // namespace arfoley::eval
