#pragma once

// Waveform <-> latent frames via a blockwise orthonormal DCT-II, and residual
// vector quantisation of those frames.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "arfoley/grid.hpp"
#include "arfoley/tensor.hpp"

namespace arfoley::rvq {

inline constexpr std::uint32_t kSampleRate = 8000;
inline constexpr std::size_t kHop = 320;
inline constexpr std::size_t kFrameRate = kSampleRate / kHop;  // 25

struct LatentFrames {
    FTensor frames;              // L x kHop
    std::size_t pad_samples = 0; // zeros appended to reach a multiple of kHop
};

// Rejects empty input and samples outside [-1, 1] by more than 1e-3.
LatentFrames frame_transform(std::span<const float> wave);
// Length rows * kHop; the caller trims pad_samples if it wants the original length.
std::vector<float> inverse_frame_transform(const FTensor& frames);

// Row k of the orthonormal DCT-II matrix is basis function k.
const FTensor& dct_basis();

struct CodebookSet {
    std::vector<FTensor> books;  // K entries, each D x d

    std::size_t K() const { return books.size(); }
    std::size_t D() const { return books.empty() ? 0 : books[0].shape()[0]; }
    std::size_t d() const { return books.empty() ? 0 : books[0].shape()[1]; }
};

std::string encode_codebooks(const CodebookSet& set);
CodebookSet decode_codebooks(const std::string& bytes);
void save_codebooks(const std::filesystem::path& p, const CodebookSet& set);
CodebookSet load_codebooks(const std::filesystem::path& p);

struct TrainOptions {
    std::size_t K = 8;
    std::size_t D = 256;
    std::size_t iters = 50;
    std::uint64_t seed = 0;
    // Codeword 0 of every book is held at the zero vector, so a layer can
    // always leave the residual unchanged.
    bool pin_zero = true;
    // Frames beyond this count are subsampled (seeded) before fitting.
    std::size_t max_frames = 32768;
};

struct TrainReport {
    // Mean squared residual norm on the fitting set: entry 0 before any
    // layer, entry j after layer j.
    std::vector<double> residual_energy;
    std::size_t frames_used = 0;
};

// frames: N x d. Throws if N < D or inputs are non-finite. Layers whose
// residuals hold fewer than D distinct points get random spare codewords.
CodebookSet train_codebooks(const FTensor& frames, const TrainOptions& opt, TrainReport* report = nullptr);

// Nearest codeword by exact squared distance; ties go to the lowest index.
std::size_t nearest(const FTensor& book, const float* x);

// Returns the K x L grid. When `residual` is given it receives the final
// residual frames (L x d).
TokenGrid encode(const FTensor& frames, const CodebookSet& set, FTensor* residual = nullptr);
// Sum of the first `layers` codewords per frame. Rejects indices >= D.
FTensor decode(const TokenGrid& grid, const CodebookSet& set, std::size_t layers);

}  // namespace arfoley::rvq
