#pragma once

// Binary containers shared by every stage: FARY float arrays, PCM16 WAV, and
// small little-endian helpers. All writers are byte-deterministic.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "arfoley/tensor.hpp"

namespace arfoley::io {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void put_u32(std::ostream& os, std::uint32_t v);
void put_u16(std::ostream& os, std::uint16_t v);
void put_f32(std::ostream& os, float v);
std::uint32_t get_u32(std::istream& is);
std::uint16_t get_u16(std::istream& is);
float get_f32(std::istream& is);
void expect_magic(std::istream& is, const char (&magic)[5], const std::string& what);

// "FARY", u32 rank, u32 extents..., float32 data. Returns bytes written.
std::size_t write_fary(std::ostream& os, const FTensor& t);
FTensor read_fary(std::istream& is);

std::string read_file(const std::filesystem::path& p);
// Writes through a temporary file and renames, so readers never see partial output.
void write_file(const std::filesystem::path& p, const std::string& bytes);

struct Wave {
    std::vector<float> samples;
    std::uint32_t rate = 8000;
};

// PCM16 mono. Samples are clamped to [-1, 1] and rounded to nearest.
std::string encode_wav(const Wave& w);
void write_wav(const std::filesystem::path& p, const Wave& w);
// Accepts PCM16 with any channel count (channels are averaged). When
// `target_rate` differs from the file rate the signal is resampled by
// nearest-neighbour index mapping and `*resampled` is set.
Wave read_wav(const std::filesystem::path& p, std::uint32_t target_rate = 8000, bool* resampled = nullptr);
Wave decode_wav(const std::string& bytes, std::uint32_t target_rate = 8000, bool* resampled = nullptr);

// 64-bit FNV-1a, hex encoded; used for config hashes.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

}  // namespace arfoley::io
