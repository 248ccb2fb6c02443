/**
 * @file score_io.cpp
 *
 * SMF format 1 layout: an "MThd" header chunk, then three "MTrk" chunks
 * (tempo, melody, harmony). Chunk lengths and multi-byte fields are
 * big-endian; event times are variable-length-quantity deltas.
 */
#include "modus/score_io.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

#include "modus/names.hpp"

namespace modus {

namespace {

constexpr int kMelodyChannel = 0;
constexpr int kHarmonyChannel = 1;
constexpr std::uint8_t kNoteOnVelocity = 90;
constexpr std::uint8_t kNoteOffVelocity = 64;
constexpr std::uint32_t kMaxVlq = 0x0FFFFFFF;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void put_vlq(std::vector<std::uint8_t>& out, std::uint32_t value) {
  if (value > kMaxVlq) {
    throw std::invalid_argument("delta time exceeds the four-byte SMF limit");
  }
  std::uint32_t buffer = value & 0x7F;
  while ((value >>= 7) != 0) {
    buffer <<= 8;
    buffer |= (value & 0x7F) | 0x80;
  }
  while (true) {
    out.push_back(static_cast<std::uint8_t>(buffer & 0xFF));
    if (buffer & 0x80) {
      buffer >>= 8;
    } else {
      break;
    }
  }
}

// Events are appended with absolute times (non-decreasing); deltas are
// computed as the track is sealed into a chunk.
class TrackBuilder {
 public:
  void add(std::uint32_t time, std::initializer_list<std::uint8_t> bytes) {
    put_vlq(data_, time - cursor_);
    cursor_ = time;
    data_.insert(data_.end(), bytes.begin(), bytes.end());
  }

  void seal_into(std::vector<std::uint8_t>& out, std::uint32_t end_time) {
    add(end_time, {0xFF, 0x2F, 0x00});
    out.push_back('M');
    out.push_back('T');
    out.push_back('r');
    out.push_back('k');
    put_u32(out, static_cast<std::uint32_t>(data_.size()));
    out.insert(out.end(), data_.begin(), data_.end());
  }

 private:
  std::vector<std::uint8_t> data_;
  std::uint32_t cursor_ = 0;
};

void check_midi_config(const MidiConfig& cfg) {
  if (cfg.ticks_per_quarter < 1 || cfg.ticks_per_quarter > 0x7FFF) {
    throw std::invalid_argument("ticks per quarter must be 1..32767");
  }
  if (cfg.tempo_us_per_quarter < 1 || cfg.tempo_us_per_quarter > 0xFFFFFF) {
    throw std::invalid_argument("tempo must be 1..16777215 microseconds per quarter");
  }
  for (int program : {cfg.melody_program, cfg.harmony_program}) {
    if (program < 0 || program > 127) {
      throw std::invalid_argument("MIDI program numbers must be 0..127");
    }
  }
  if (cfg.base_midi_note < 0 || cfg.base_midi_note > 127) {
    throw std::invalid_argument("base MIDI note must be 0..127");
  }
}

std::uint8_t midi_note(Pitch pitch, const MidiConfig& cfg, std::size_t beat_index,
                       const char* voice) {
  const int note = cfg.base_midi_note + (pitch - 1);
  if (note < 0 || note > 127) {
    throw std::out_of_range("beat " + std::to_string(beat_index + 1) + ": " + voice +
                            " pitch " + std::to_string(pitch) + " maps to MIDI note " +
                            std::to_string(note) + ", outside 0..127");
  }
  return static_cast<std::uint8_t>(note);
}

void write_voice_track(std::vector<std::uint8_t>& out, const Duet& duet,
                       const MidiConfig& cfg, int channel, int program,
                       bool melody_voice) {
  TrackBuilder track;
  track.add(0, {static_cast<std::uint8_t>(0xC0 | channel),
                static_cast<std::uint8_t>(program)});
  std::uint32_t time = 0;
  for (std::size_t i = 0; i < duet.beats.size(); ++i) {
    const Beat& beat = duet.beats[i];
    const std::optional<Pitch>& pitch = melody_voice ? beat.melody : beat.harmony;
    const std::uint32_t duration = static_cast<std::uint32_t>(beat.duration);
    if (pitch) {
      const std::uint8_t note =
          midi_note(*pitch, cfg, i, melody_voice ? "melody" : "harmony");
      track.add(time, {static_cast<std::uint8_t>(0x90 | channel), note, kNoteOnVelocity});
      track.add(time + duration,
                {static_cast<std::uint8_t>(0x80 | channel), note, kNoteOffVelocity});
    }
    time += duration;  // rests stay silent; the gap lands in the next delta
  }
  track.seal_into(out, time);
}

}  // namespace

std::vector<std::uint8_t> write_midi(const Duet& duet, const MidiConfig& cfg) {
  check_midi_config(cfg);

  std::vector<std::uint8_t> out;
  out.push_back('M');
  out.push_back('T');
  out.push_back('h');
  out.push_back('d');
  put_u32(out, 6);
  put_u16(out, 1);  // format 1
  put_u16(out, 3);  // tempo + melody + harmony
  put_u16(out, static_cast<std::uint16_t>(cfg.ticks_per_quarter));

  TrackBuilder tempo;
  const std::uint32_t us = static_cast<std::uint32_t>(cfg.tempo_us_per_quarter);
  tempo.add(0, {0xFF, 0x51, 0x03, static_cast<std::uint8_t>(us >> 16),
                static_cast<std::uint8_t>((us >> 8) & 0xFF),
                static_cast<std::uint8_t>(us & 0xFF)});
  tempo.seal_into(out, 0);

  write_voice_track(out, duet, cfg, kMelodyChannel, cfg.melody_program, true);
  write_voice_track(out, duet, cfg, kHarmonyChannel, cfg.harmony_program, false);
  return out;
}

std::string write_text_score(const Duet& duet) {
  std::string score;
  char line[128];
  std::snprintf(line, sizeof(line), "%4s  %10s  %-7s  %-7s  %6s\n", "beat", "term",
                "melody", "harmony", "ticks");
  score += line;
  for (std::size_t i = 0; i < duet.beats.size(); ++i) {
    const Beat& b = duet.beats[i];
    const std::string melody = b.melody ? pitch_name(*b.melody) : "rest";
    const std::string harmony = b.harmony ? pitch_name(*b.harmony) : "rest";
    std::snprintf(line, sizeof(line), "%4zu  %10llu  %-7s  %-7s  %6d\n", i + 1,
                  static_cast<unsigned long long>(b.source_term), melody.c_str(),
                  harmony.c_str(), b.duration);
    score += line;
  }
  return score;
}

}  // namespace modus
