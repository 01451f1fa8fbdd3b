#pragma once

// Synthetic Foley corpus: event scripts, their waveforms and captions, and the
// objective quality filters applied before tokenisation.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace arfoley::corpus {

inline constexpr std::size_t kNumClasses = 8;
inline constexpr std::array<std::string_view, kNumClasses> kClasses = {"thud",  "chirp", "bell",   "scrape",
                                                                       "splash", "knock", "whoosh", "click"};
inline constexpr std::size_t kMaxEvents = 12;
inline constexpr double kMinDuration = 2.0;
inline constexpr double kMaxDuration = 10.0;

// Throws ContractError for names outside kClasses.
std::size_t class_index(std::string_view name);

struct Event {
    std::string cls;
    double onset_s = 0.0;
    double amp = 1.0;
    double pitch_hz = 440.0;
};

struct EventScript {
    double duration_s = 2.0;
    std::vector<Event> events;  // sorted by (onset, class name)
};

// Checks every EventScript invariant; throws ContractError naming the first violation.
void validate(const EventScript& s);
nlohmann::json to_json(const EventScript& s);
EventScript script_from_json(const nlohmann::json& j);

// Length of a class template in seconds (60 to 400 ms).
double template_seconds(std::size_t cls);
// Pitches a class is drawn from.
std::span<const double> class_pitches(std::size_t cls);
// One event rendered at unit amplitude scale `amp`, starting at sample 0.
std::vector<float> render_template(std::size_t cls, double pitch_hz, double amp, std::uint64_t seed);

struct ScriptOptions {
    double events_per_second = 2.2;
    double min_gap_s = 0.30;  // onset spacing lower bound
    double tail_gap_s = 0.1;  // silence kept after each template
};

EventScript random_script(std::mt19937_64& rng, const ScriptOptions& opt = {});

// Sum of rendered templates, before normalisation.
std::vector<float> render_events(const EventScript& s, std::uint64_t seed);
// render_events peak-normalised to 0.9 (silence stays silence).
std::vector<float> synth_wave(const EventScript& s, std::uint64_t seed);

// Fixed caption vocabulary; id 0 is never produced.
const std::vector<std::string>& vocabulary();
std::vector<int> make_caption(const EventScript& s);
std::string caption_text(std::span<const int> tokens);

struct FilterOptions {
    double silence_dbfs = -50.0;
    double frame_seconds = 0.02;
    double clip_level = 0.999;
    double max_silence = 0.80;
    double max_clipping = 0.10;
};

double silence_ratio(std::span<const float> wave, std::uint32_t rate = 8000, const FilterOptions& opt = {});
double clipping_ratio(std::span<const float> wave, const FilterOptions& opt = {});

struct Verdict {
    bool accept = true;
    std::string reason;  // empty when accepted
    double silence = 0.0;
    double clipping = 0.0;
};

Verdict filter_clip(std::span<const float> wave, std::uint32_t rate = 8000, const FilterOptions& opt = {});

}  // namespace arfoley::corpus
