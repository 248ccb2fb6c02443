/**
 * @file composer.hpp
 * @brief Compiles an integer sequence into a two-voice duet.
 *
 * Each term a of the sequence drives all three mappings of its beat:
 *
 *   melody   a mod (k+1)  -> scale degree 1..k, or a rest on residue 0
 *   harmony  a mod (n+1)  -> the r-th smallest harmonic interval, which is
 *                            subtracted from the melody pitch; the result
 *                            sounds only if its pitch class lies in the
 *                            rooted scale, otherwise the beat is a rest
 *   rhythm   a mod (m+1)  -> an entry of the duration palette
 *
 * where k is the mode size, n the number of harmonic intervals, and m the
 * palette size. Pitches live on the unbounded pitch line, so a harmony
 * note may fall below 1 (the octave repeats downward forever).
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "modus/harmony.hpp"
#include "modus/theory.hpp"

namespace modus {

/// First n primes, ascending.
std::vector<std::uint64_t> primes(std::size_t n);

/// Where the integer sequence comes from: computed primes, a text file of
/// whitespace-separated positive integers, or an explicit list.
class SequenceSource {
 public:
  enum class Kind { kPrimes, kFile, kValues };

  static SequenceSource primes(std::size_t count);
  /// Reads whitespace-separated positive integers, in order. count == 0
  /// means every term in the file; otherwise exactly count terms are
  /// consumed and the file must hold at least that many.
  static SequenceSource from_file(std::filesystem::path path, std::size_t count = 0);
  static SequenceSource from_values(std::vector<std::uint64_t> values);

  Kind kind() const { return kind_; }
  std::size_t count() const { return count_; }

  /// Produces the terms. Throws std::runtime_error on I/O failure and
  /// std::invalid_argument on malformed or non-positive file terms.
  std::vector<std::uint64_t> materialize() const;

 private:
  SequenceSource() = default;

  Kind kind_ = Kind::kValues;
  std::size_t count_ = 0;
  std::filesystem::path path_;
  std::vector<std::uint64_t> values_;
};

/// Musical parameters of a composition.
struct ComposerConfig {
  Mode mode;
  Tone root;                      // tone the mode is rooted on
  Pitch base_pitch;               // where scale degree 1 sounds
  HarmonicSystem system;
  std::vector<int> rhythm_palette;  // durations in ticks, 1..12 entries

  /// Mirrors the worked default: 7-toned major mode rooted on A, degree 1
  /// at pitch 1, standard intervals, a single quarter-note duration.
  static ComposerConfig defaults();

  /// Throws std::invalid_argument when the palette is empty, longer than
  /// 12, holds a non-positive duration, or base_pitch is not congruent to
  /// root (degree 1 must sound on the root's pitch class, or the voices
  /// would leave the rooted scale).
  void validate() const;
};

/// One beat of the duet. A harmony note is only ever present under a
/// melody note, and its pitch class always lies in the rooted scale.
struct Beat {
  std::uint64_t source_term;
  std::optional<Pitch> melody;
  std::optional<Pitch> harmony;
  int duration;  // ticks
};

/// The finished two-voice piece, with the configuration that produced it.
struct Duet {
  ComposerConfig config;
  std::vector<Beat> beats;
};

/// Maps a term to a scale degree: r = term mod (mode_size+1), rest on
/// r == 0, degree r otherwise.
std::optional<int> melody_degree(std::uint64_t term, int mode_size);

/// Pitch of a scale degree: base_pitch plus the degree's offset from the
/// first tone of the canonical scale.
Pitch realize_melody(int degree, const ComposerConfig& cfg);

/// Maps a term to a harmonic interval: r = term mod (|intervals|+1), rest
/// on r == 0, the r-th smallest interval otherwise.
std::optional<Interval> harmony_interval_for(std::uint64_t term, const HarmonicSystem& sys);

/// Candidate harmony pitch melody - interval, kept only when its pitch
/// class is a tone of the rooted scale.
std::optional<Pitch> derive_harmony(Pitch melody, Interval harmonic_interval,
                                    const ComposerConfig& cfg);

/// Duration for a term: r = term mod (palette_size+1); entry r, with
/// residue 0 falling back to entry 1 (a rest still needs a length).
int rhythm_duration(std::uint64_t term, std::span<const int> palette);

/// Builds the duet: one beat per term, the same term driving melody,
/// harmony, and rhythm. Deterministic in (sequence, config).
Duet compose(const SequenceSource& source, const ComposerConfig& cfg);

}  // namespace modus
