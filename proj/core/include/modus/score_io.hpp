/**
 * @file score_io.hpp
 * @brief Serializes a Duet to a Standard MIDI File and a text score.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modus/composer.hpp"

namespace modus {

/// MIDI serialization parameters. Pitch value 1 maps to base_midi_note
/// and the mapping is linear: midi = base_midi_note + (pitch - 1).
struct MidiConfig {
  int ticks_per_quarter = 480;
  int tempo_us_per_quarter = 500000;
  int melody_program = 0;
  int harmony_program = 0;
  int base_midi_note = 57;  // pitch 1 -> A below middle C
};

/// Emits an SMF format-1 file: one tempo track, one melody track, one
/// harmony track. Rests are gaps between notes, never zero-velocity
/// events. Byte-identical output for identical inputs.
///
/// Throws std::out_of_range, naming the offending beat, when a pitch maps
/// outside MIDI note range 0..127; out-of-range pitches are never clamped.
std::vector<std::uint8_t> write_midi(const Duet& duet, const MidiConfig& cfg = {});

/// Human-readable score: a header line, then one line per beat with the
/// beat index, source term, melody and harmony notes (name plus octave,
/// or "rest"), and duration in ticks.
std::string write_text_score(const Duet& duet);

}  // namespace modus
