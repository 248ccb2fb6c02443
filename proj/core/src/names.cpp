/**
 * @file names.cpp
 */
#include "modus/names.hpp"

#include <array>
#include <cctype>

namespace modus {

namespace {

constexpr std::array<std::string_view, 12> kToneNames = {
    "A", "A#", "B", "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#"};

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::string_view tone_name(Tone t) {
  return kToneNames[static_cast<std::size_t>(t.value() - 1)];
}

std::optional<Tone> tone_from_name(std::string_view name) {
  if (name.empty() || name.size() > 2) return std::nullopt;
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  const bool sharp = name.size() == 2;
  if (sharp && name[1] != '#') return std::nullopt;
  for (std::size_t i = 0; i < kToneNames.size(); ++i) {
    const std::string_view candidate = kToneNames[i];
    if (candidate[0] == letter && (candidate.size() == 2) == sharp) {
      return Tone(static_cast<int>(i) + 1);
    }
  }
  return std::nullopt;
}

std::string pitch_name(Pitch p) {
  const int octave = floor_div(p - 1, kTonesPerOctave);
  return std::string(tone_name(pitch_class(p))) + std::to_string(octave);
}

}  // namespace modus
