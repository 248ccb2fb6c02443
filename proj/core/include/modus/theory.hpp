/**
 * @file theory.hpp
 * @brief Pitch-class arithmetic: tones, intervals, scales, and modes.
 *
 * The twelve pitch classes of the octave are numbered A=1, A#=2, B=3, C=4,
 * C#=5, D=6, D#=7, E=8, F=9, F#=10, G=11, G#=12. A scale is a strictly
 * increasing selection of those numbers; a mode is the family of scales
 * that share the same spacing, represented canonically by the member that
 * starts on 1.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace modus {

/// Number of pitch classes per octave.
inline constexpr int kTonesPerOctave = 12;

/// A position on the unbounded pitch line. Values extend the 1..12 octave
/// in both directions: 13 is one octave above 1, 0 is one step below 1.
using Pitch = int;

/// Size of an interval in semitones (always non-negative).
using Interval = int;

/// One of the twelve pitch classes, numbered 1..12.
class Tone {
 public:
  explicit Tone(int value);

  int value() const { return value_; }

  friend bool operator==(const Tone&, const Tone&) = default;
  friend auto operator<=>(const Tone&, const Tone&) = default;

 private:
  int value_;
};

/// A strictly increasing sequence of 1..12 tone values.
class Scale {
 public:
  explicit Scale(std::vector<int> tones);
  Scale(std::initializer_list<int> tones);

  const std::vector<int>& tones() const { return tones_; }
  int size() const { return static_cast<int>(tones_.size()); }

  friend bool operator==(const Scale&, const Scale&) = default;
  friend auto operator<=>(const Scale&, const Scale&) = default;

 private:
  std::vector<int> tones_;
};

/// An equivalence class of scales under uniform shift, held as the
/// canonical representative whose first tone is 1.
class Mode {
 public:
  explicit Mode(Scale canonical);
  Mode(std::initializer_list<int> tones);

  const Scale& canonical() const { return canonical_; }
  int size() const { return canonical_.size(); }

  friend bool operator==(const Mode&, const Mode&) = default;
  friend auto operator<=>(const Mode&, const Mode&) = default;

 private:
  Scale canonical_;
};

/// Absolute difference between two pitch values.
Interval interval(Pitch a, Pitch b);

/// Folds a pitch onto the 1..12 octave. pitch_class(13) == 1,
/// pitch_class(0) == 12, pitch_class(-1) == 11.
Tone pitch_class(Pitch p);

/// Shifts a scale so that its first tone is 1.
Mode canonicalize(const Scale& s);

/// True iff the scales have the same length and the same spacing, i.e.
/// one is a uniform shift of the other.
bool is_equivalent(const Scale& s1, const Scale& s2);

/// Realizes a mode starting on the given root tone. Throws
/// std::out_of_range when the top tone would leave the 1..12 octave;
/// octave-wrapped realization is the composer's job, not the scale's.
Scale transpose(const Mode& m, Tone root);

/// All k-toned modes in lexicographic order: first tone 1, the remaining
/// k-1 tones chosen from 2..12. Throws std::invalid_argument unless
/// 1 <= k <= 12.
std::vector<Mode> enumerate_modes(int k);

/// Number of k-toned modes, C(11, k-1), computed exactly.
std::uint64_t count_modes(int k);

}  // namespace modus
