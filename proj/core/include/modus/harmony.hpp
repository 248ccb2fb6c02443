/**
 * @file harmony.hpp
 * @brief Harmonic intervals, chords, step patterns, and the musicality of
 *        a mode.
 *
 * An interval is harmonic when its size belongs to the governing
 * HarmonicSystem. The default system admits {3, 4, 5, 7, 8, 9}; the
 * extended system adds 6, which lets diminished and seventh stacks in and
 * raises the largest possible harmonic subset from three tones to four.
 *
 * Note that a stack of two minor thirds such as {1, 4, 7} is *not*
 * harmonic under the default system: its outer interval is 6. Every chord
 * must have all three pairwise intervals in the system, outer included.
 */
#pragma once

#include <compare>
#include <span>
#include <vector>

#include "modus/theory.hpp"

namespace modus {

/// The set of interval sizes considered harmonic, plus the derived
/// maximum harmonic-subset size.
class HarmonicSystem {
 public:
  /// Intervals {3, 4, 5, 7, 8, 9}.
  static const HarmonicSystem& standard();
  /// Intervals {3, 4, 5, 6, 7, 8, 9}.
  static const HarmonicSystem& extended();

  /// A custom interval set. Sizes must lie in 1..11; input is sorted and
  /// deduplicated. An empty set is allowed (only singletons are harmonic).
  explicit HarmonicSystem(std::vector<int> intervals);

  const std::vector<int>& intervals() const { return intervals_; }
  bool contains(Interval semitones) const;

  /// Largest harmonic subset of {1..12} under this system, found by
  /// exhaustive search at construction. 3 for the standard system, 4 for
  /// the extended one, 1 for an empty interval set.
  int max_chord_size() const { return max_chord_size_; }

  friend bool operator==(const HarmonicSystem&, const HarmonicSystem&) = default;

 private:
  std::vector<int> intervals_;
  int max_chord_size_;
};

/// A harmonic subset of a scale: 3 tones (or 4 under systems that admit
/// four-tone subsets), strictly increasing, every pairwise interval
/// harmonic in the governing system.
class Chord {
 public:
  explicit Chord(std::vector<int> tones);
  Chord(std::initializer_list<int> tones);

  const std::vector<int>& tones() const { return tones_; }
  int size() const { return static_cast<int>(tones_.size()); }

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;

 private:
  std::vector<int> tones_;
};

/// Consecutive step sizes of a chord's sorted tones, e.g. {1,4,8} -> (3,4).
struct StepPattern {
  std::vector<int> steps;

  friend bool operator==(const StepPattern&, const StepPattern&) = default;
  friend auto operator<=>(const StepPattern&, const StepPattern&) = default;
};

/// One mode's chord inventory: the 3-tone chords of its canonical scale
/// and their count.
struct MusicalityReport {
  Mode mode;
  int musicality;
  std::vector<Chord> chords;
};

/// True iff every pairwise interval between the tones is harmonic.
/// Singletons (and the empty set) are vacuously harmonic. Tones must be
/// distinct values in 1..12.
bool is_harmonic_subset(std::span<const int> tones, const HarmonicSystem& sys);

/// Every harmonic subset of the scale of size 3, plus size 4 when the
/// system admits four-tone subsets. Sorted lexicographically.
std::vector<Chord> enumerate_chords(const Scale& s, const HarmonicSystem& sys);

/// Step pattern of a chord. Throws std::invalid_argument when the tones
/// do not form a chord under the given system.
StepPattern classify(const Chord& c, const HarmonicSystem& sys);

/// Number of 3-tone chords of the mode's canonical scale. Equal for every
/// scale of the mode, so it is a property of the mode itself. Four-tone
/// subsets never count toward musicality.
int musicality(const Mode& m, const HarmonicSystem& sys);

/// Maximum size of a harmonic subset of {1..12}, by exhaustive search
/// over all 4096 subsets.
int max_harmonic_subset_size(const HarmonicSystem& sys);

/// All k-toned modes ranked by musicality, highest first, ties broken by
/// lexicographic tone order. Throws std::invalid_argument unless
/// 1 <= k <= 12.
std::vector<MusicalityReport> rank_modes(int k, const HarmonicSystem& sys);

}  // namespace modus
