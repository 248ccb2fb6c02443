/**
 * @file composer.cpp
 */
#include "modus/composer.hpp"

#include <array>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace modus {

std::vector<std::uint64_t> primes(std::size_t n) {
  std::vector<std::uint64_t> found;
  found.reserve(n);
  std::uint64_t candidate = 2;
  while (found.size() < n) {
    bool is_prime = true;
    for (std::uint64_t p : found) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        is_prime = false;
        break;
      }
    }
    if (is_prime) found.push_back(candidate);
    candidate += (candidate == 2) ? 1 : 2;
  }
  return found;
}

SequenceSource SequenceSource::primes(std::size_t count) {
  SequenceSource s;
  s.kind_ = Kind::kPrimes;
  s.count_ = count;
  return s;
}

SequenceSource SequenceSource::from_file(std::filesystem::path path, std::size_t count) {
  SequenceSource s;
  s.kind_ = Kind::kFile;
  s.count_ = count;
  s.path_ = std::move(path);
  return s;
}

SequenceSource SequenceSource::from_values(std::vector<std::uint64_t> values) {
  SequenceSource s;
  s.kind_ = Kind::kValues;
  s.values_ = std::move(values);
  s.count_ = s.values_.size();
  return s;
}

std::vector<std::uint64_t> SequenceSource::materialize() const {
  switch (kind_) {
    case Kind::kPrimes:
      return modus::primes(count_);
    case Kind::kValues:
      return values_;
    case Kind::kFile:
      break;
  }

  std::ifstream in(path_);
  if (!in) {
    throw std::runtime_error("cannot open sequence file: " + path_.string());
  }
  std::vector<std::uint64_t> terms;
  std::string token;
  while (in >> token) {
    std::uint64_t value = 0;
    try {
      std::size_t consumed = 0;
      if (token.front() == '-') throw std::invalid_argument(token);
      value = std::stoull(token, &consumed);
      if (consumed != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("sequence file holds a non-integer term: '" + token +
                                  "'");
    }
    if (value == 0) {
      throw std::invalid_argument("sequence terms must be positive, got 0");
    }
    terms.push_back(value);
    if (count_ > 0 && terms.size() == count_) break;
  }
  if (in.bad()) {
    throw std::runtime_error("error reading sequence file: " + path_.string());
  }
  if (count_ > 0 && terms.size() < count_) {
    throw std::runtime_error("sequence file holds " + std::to_string(terms.size()) +
                             " terms, need " + std::to_string(count_));
  }
  return terms;
}

ComposerConfig ComposerConfig::defaults() {
  return ComposerConfig{Mode{1, 3, 5, 6, 8, 10, 12}, Tone(1), 1,
                        HarmonicSystem::standard(), {480}};
}

void ComposerConfig::validate() const {
  if (rhythm_palette.empty() || rhythm_palette.size() > 12) {
    throw std::invalid_argument("rhythm palette needs 1..12 durations, got " +
                                std::to_string(rhythm_palette.size()));
  }
  for (int d : rhythm_palette) {
    if (d <= 0) {
      throw std::invalid_argument("rhythm durations must be positive ticks, got " +
                                  std::to_string(d));
    }
  }
  if (pitch_class(base_pitch) != root) {
    throw std::invalid_argument(
        "base pitch " + std::to_string(base_pitch) + " does not sound on root tone " +
        std::to_string(root.value()) + "; scale degree 1 must sit on the root");
  }
}

namespace {

// Pitch classes of the mode realized on the root, as a 1..12 membership set.
std::array<bool, 13> rooted_pitch_classes(const Mode& mode, Tone root) {
  std::array<bool, 13> member{};
  for (int t : mode.canonical().tones()) {
    member[static_cast<std::size_t>(pitch_class(t + root.value() - 1).value())] = true;
  }
  return member;
}

}  // namespace

std::optional<int> melody_degree(std::uint64_t term, int mode_size) {
  const std::uint64_t r = term % static_cast<std::uint64_t>(mode_size + 1);
  if (r == 0) return std::nullopt;
  return static_cast<int>(r);
}

Pitch realize_melody(int degree, const ComposerConfig& cfg) {
  const auto& tones = cfg.mode.canonical().tones();
  return cfg.base_pitch + (tones[static_cast<std::size_t>(degree - 1)] - tones[0]);
}

std::optional<Interval> harmony_interval_for(std::uint64_t term, const HarmonicSystem& sys) {
  const std::uint64_t r = term % (sys.intervals().size() + 1);
  if (r == 0) return std::nullopt;
  return sys.intervals()[static_cast<std::size_t>(r - 1)];
}

std::optional<Pitch> derive_harmony(Pitch melody, Interval harmonic_interval,
                                    const ComposerConfig& cfg) {
  const Pitch h = melody - harmonic_interval;
  const auto member = rooted_pitch_classes(cfg.mode, cfg.root);
  if (!member[static_cast<std::size_t>(pitch_class(h).value())]) return std::nullopt;
  return h;
}

int rhythm_duration(std::uint64_t term, std::span<const int> palette) {
  const std::uint64_t r = term % (palette.size() + 1);
  if (r == 0) return palette[0];
  return palette[static_cast<std::size_t>(r - 1)];
}

Duet compose(const SequenceSource& source, const ComposerConfig& cfg) {
  cfg.validate();
  const std::vector<std::uint64_t> terms = source.materialize();
  const auto member = rooted_pitch_classes(cfg.mode, cfg.root);
  const int k = cfg.mode.size();

  Duet duet{cfg, {}};
  duet.beats.reserve(terms.size());
  for (std::uint64_t term : terms) {
    Beat beat{term, std::nullopt, std::nullopt,
              rhythm_duration(term, cfg.rhythm_palette)};
    if (const std::optional<int> degree = melody_degree(term, k)) {
      beat.melody = realize_melody(*degree, cfg);
      if (const std::optional<Interval> iv = harmony_interval_for(term, cfg.system)) {
        const Pitch h = *beat.melody - *iv;
        if (member[static_cast<std::size_t>(pitch_class(h).value())]) {
          beat.harmony = h;
        }
      }
    }
    duet.beats.push_back(std::move(beat));
  }
  return duet;
}

}  // namespace modus
