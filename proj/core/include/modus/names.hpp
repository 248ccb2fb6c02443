/**
 * @file names.hpp
 * @brief Presentation names for tones and pitches (A=1 .. G#=12).
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "modus/theory.hpp"

namespace modus {

/// Name of a pitch class: "A", "A#", "B", ..., "G#".
std::string_view tone_name(Tone t);

/// Parses a tone name (sharps only, case-insensitive letter). Returns
/// nullopt for anything outside the twelve names.
std::optional<Tone> tone_from_name(std::string_view name);

/// Name plus octave for an unbounded pitch. Octave 0 spans pitches 1..12,
/// so pitch 1 is "A0", pitch 13 is "A1", and pitch 0 is "G#-1".
std::string pitch_name(Pitch p);

}  // namespace modus
