/**
 * @file harmony.cpp
 */
#include "modus/harmony.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace modus {

namespace {

bool all_pairs_harmonic(std::span<const int> tones, const std::vector<int>& intervals) {
  for (std::size_t i = 0; i < tones.size(); ++i) {
    for (std::size_t j = i + 1; j < tones.size(); ++j) {
      const int iv = std::abs(tones[i] - tones[j]);
      if (!std::binary_search(intervals.begin(), intervals.end(), iv)) return false;
    }
  }
  return true;
}

// Exhaustive scan of all 4096 subsets of {1..12}.
int exhaustive_max_subset_size(const std::vector<int>& intervals) {
  int best = 0;
  for (unsigned mask = 0; mask < (1u << kTonesPerOctave); ++mask) {
    std::array<int, kTonesPerOctave> tones{};
    int n = 0;
    for (int t = 0; t < kTonesPerOctave; ++t) {
      if (mask & (1u << t)) tones[static_cast<std::size_t>(n++)] = t + 1;
    }
    if (n <= best) continue;
    if (all_pairs_harmonic(std::span<const int>(tones.data(), static_cast<std::size_t>(n)),
                           intervals)) {
      best = n;
    }
  }
  return best;
}

// 3-tone chords of a scale, sorted lexicographically.
std::vector<Chord> three_tone_chords(const Scale& s, const HarmonicSystem& sys) {
  std::vector<Chord> chords;
  const auto& t = s.tones();
  const int k = s.size();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!sys.contains(t[static_cast<std::size_t>(j)] - t[static_cast<std::size_t>(i)])) {
        continue;
      }
      for (int l = j + 1; l < k; ++l) {
        const int a = t[static_cast<std::size_t>(i)];
        const int b = t[static_cast<std::size_t>(j)];
        const int c = t[static_cast<std::size_t>(l)];
        if (sys.contains(c - b) && sys.contains(c - a)) {
          chords.push_back(Chord{a, b, c});
        }
      }
    }
  }
  return chords;  // loop order is already lexicographic
}

std::vector<Chord> four_tone_subsets(const Scale& s, const HarmonicSystem& sys) {
  std::vector<Chord> subsets;
  const auto& t = s.tones();
  const int k = s.size();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      for (int l = j + 1; l < k; ++l) {
        for (int m = l + 1; m < k; ++m) {
          const std::array<int, 4> tones = {
              t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)],
              t[static_cast<std::size_t>(l)], t[static_cast<std::size_t>(m)]};
          if (all_pairs_harmonic(tones, sys.intervals())) {
            subsets.push_back(Chord(std::vector<int>(tones.begin(), tones.end())));
          }
        }
      }
    }
  }
  return subsets;
}

}  // namespace

HarmonicSystem::HarmonicSystem(std::vector<int> intervals)
    : intervals_(std::move(intervals)) {
  for (int iv : intervals_) {
    if (iv < 1 || iv > kTonesPerOctave - 1) {
      throw std::invalid_argument("harmonic interval " + std::to_string(iv) +
                                  " outside 1..11");
    }
  }
  std::sort(intervals_.begin(), intervals_.end());
  intervals_.erase(std::unique(intervals_.begin(), intervals_.end()), intervals_.end());
  max_chord_size_ = exhaustive_max_subset_size(intervals_);
}

const HarmonicSystem& HarmonicSystem::standard() {
  static const HarmonicSystem sys(std::vector<int>{3, 4, 5, 7, 8, 9});
  return sys;
}

const HarmonicSystem& HarmonicSystem::extended() {
  static const HarmonicSystem sys(std::vector<int>{3, 4, 5, 6, 7, 8, 9});
  return sys;
}

bool HarmonicSystem::contains(Interval semitones) const {
  return std::binary_search(intervals_.begin(), intervals_.end(), semitones);
}

Chord::Chord(std::vector<int> tones) : tones_(std::move(tones)) {
  if (tones_.size() != 3 && tones_.size() != 4) {
    throw std::invalid_argument("a chord holds 3 or 4 tones, got " +
                                std::to_string(tones_.size()));
  }
  for (std::size_t i = 0; i < tones_.size(); ++i) {
    if (tones_[i] < 1 || tones_[i] > kTonesPerOctave) {
      throw std::invalid_argument("chord tone " + std::to_string(tones_[i]) +
                                  " outside 1..12");
    }
    if (i > 0 && tones_[i] <= tones_[i - 1]) {
      throw std::invalid_argument("chord tones must be strictly increasing");
    }
  }
}

Chord::Chord(std::initializer_list<int> tones) : Chord(std::vector<int>(tones)) {}

bool is_harmonic_subset(std::span<const int> tones, const HarmonicSystem& sys) {
  for (std::size_t i = 0; i < tones.size(); ++i) {
    if (tones[i] < 1 || tones[i] > kTonesPerOctave) {
      throw std::invalid_argument("tone " + std::to_string(tones[i]) + " outside 1..12");
    }
    for (std::size_t j = i + 1; j < tones.size(); ++j) {
      if (tones[i] == tones[j]) {
        throw std::invalid_argument("tones of a subset must be distinct");
      }
    }
  }
  return all_pairs_harmonic(tones, sys.intervals());
}

std::vector<Chord> enumerate_chords(const Scale& s, const HarmonicSystem& sys) {
  std::vector<Chord> chords = three_tone_chords(s, sys);
  if (sys.max_chord_size() >= 4 && s.size() >= 4) {
    std::vector<Chord> quads = four_tone_subsets(s, sys);
    chords.insert(chords.end(), quads.begin(), quads.end());
  }
  std::sort(chords.begin(), chords.end());
  return chords;
}

StepPattern classify(const Chord& c, const HarmonicSystem& sys) {
  if (!is_harmonic_subset(c.tones(), sys)) {
    throw std::invalid_argument("tones do not form a chord under this system");
  }
  StepPattern pattern;
  pattern.steps.reserve(c.tones().size() - 1);
  for (std::size_t i = 1; i < c.tones().size(); ++i) {
    pattern.steps.push_back(c.tones()[i] - c.tones()[i - 1]);
  }
  return pattern;
}

int musicality(const Mode& m, const HarmonicSystem& sys) {
  return static_cast<int>(three_tone_chords(m.canonical(), sys).size());
}

int max_harmonic_subset_size(const HarmonicSystem& sys) {
  return exhaustive_max_subset_size(sys.intervals());
}

std::vector<MusicalityReport> rank_modes(int k, const HarmonicSystem& sys) {
  std::vector<MusicalityReport> reports;
  for (Mode& m : enumerate_modes(k)) {
    std::vector<Chord> chords = three_tone_chords(m.canonical(), sys);
    const int count = static_cast<int>(chords.size());
    reports.push_back(MusicalityReport{std::move(m), count, std::move(chords)});
  }
  std::sort(reports.begin(), reports.end(),
            [](const MusicalityReport& a, const MusicalityReport& b) {
              if (a.musicality != b.musicality) return a.musicality > b.musicality;
              return a.mode < b.mode;
            });
  return reports;
}

}  // namespace modus
