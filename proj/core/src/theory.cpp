/**
 * @file theory.cpp
 */
#include "modus/theory.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace modus {

namespace {

void check_tone_range(int value) {
  if (value < 1 || value > kTonesPerOctave) {
    throw std::invalid_argument("tone value " + std::to_string(value) +
                                " outside 1..12");
  }
}

void check_mode_size(int k) {
  if (k < 1 || k > kTonesPerOctave) {
    throw std::invalid_argument("mode size " + std::to_string(k) +
                                " outside 1..12");
  }
}

}  // namespace

Tone::Tone(int value) : value_(value) { check_tone_range(value); }

Scale::Scale(std::vector<int> tones) : tones_(std::move(tones)) {
  if (tones_.empty()) {
    throw std::invalid_argument("scale must hold at least one tone");
  }
  check_tone_range(tones_.front());
  for (std::size_t i = 1; i < tones_.size(); ++i) {
    check_tone_range(tones_[i]);
    if (tones_[i] <= tones_[i - 1]) {
      throw std::invalid_argument("scale tones must be strictly increasing");
    }
  }
}

Scale::Scale(std::initializer_list<int> tones) : Scale(std::vector<int>(tones)) {}

Mode::Mode(Scale canonical) : canonical_(std::move(canonical)) {
  if (canonical_.tones().front() != 1) {
    throw std::invalid_argument("canonical scale of a mode must start on 1");
  }
}

Mode::Mode(std::initializer_list<int> tones) : Mode(Scale(tones)) {}

Interval interval(Pitch a, Pitch b) { return std::abs(a - b); }

Tone pitch_class(Pitch p) {
  int r = (p - 1) % kTonesPerOctave;
  if (r < 0) r += kTonesPerOctave;
  return Tone(r + 1);
}

Mode canonicalize(const Scale& s) {
  const int shift = s.tones().front() - 1;
  std::vector<int> shifted;
  shifted.reserve(s.tones().size());
  for (int t : s.tones()) shifted.push_back(t - shift);
  return Mode(Scale(std::move(shifted)));
}

bool is_equivalent(const Scale& s1, const Scale& s2) {
  const auto& a = s1.tones();
  const auto& b = s2.tones();
  if (a.size() != b.size()) return false;
  const int shift = b.front() - a.front();
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (b[i] - a[i] != shift) return false;
  }
  return true;
}

Scale transpose(const Mode& m, Tone root) {
  const int shift = root.value() - 1;
  const int top = m.canonical().tones().back() + shift;
  if (top > kTonesPerOctave) {
    throw std::out_of_range("transposing to root " + std::to_string(root.value()) +
                            " pushes the top tone to " + std::to_string(top) +
                            ", beyond 12");
  }
  std::vector<int> shifted;
  shifted.reserve(m.canonical().tones().size());
  for (int t : m.canonical().tones()) shifted.push_back(t + shift);
  return Scale(std::move(shifted));
}

std::vector<Mode> enumerate_modes(int k) {
  check_mode_size(k);
  std::vector<Mode> modes;
  if (k == 1) {
    modes.push_back(Mode{1});
    return modes;
  }

  // Combinations of {2..12} choose k-1, in lexicographic order.
  const int picks = k - 1;
  std::vector<int> tones(static_cast<std::size_t>(k));
  tones[0] = 1;
  for (int i = 0; i < picks; ++i) tones[static_cast<std::size_t>(i) + 1] = i + 2;
  while (true) {
    modes.push_back(Mode(Scale(tones)));
    int i = picks;
    while (i >= 1 && tones[static_cast<std::size_t>(i)] == kTonesPerOctave - (picks - i)) {
      --i;
    }
    if (i == 0) break;
    ++tones[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= picks; ++j) {
      tones[static_cast<std::size_t>(j)] = tones[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return modes;
}

std::uint64_t count_modes(int k) {
  check_mode_size(k);
  // C(11, k-1) by the multiplicative formula; every partial product is an
  // exact integer.
  const std::uint64_t n = 11;
  const std::uint64_t r = static_cast<std::uint64_t>(k) - 1;
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

}  // namespace modus
