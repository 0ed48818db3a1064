#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace braidsong {

struct NoteEvent {
  int voice = 0;              // index into Score::voices
  std::int64_t onset = 0;     // ticks, >= 0
  std::int64_t duration = 0;  // ticks, > 0
  int pitch = 60;             // MIDI note number 0..127
  int velocity = 64;          // 1..127

  bool operator==(const NoteEvent&) const = default;
};

struct VoiceInfo {
  std::string name;
  std::string role;  // "strings", "percussion", "harp"

  bool operator==(const VoiceInfo&) const = default;
};

struct Score {
  int ticks_per_quarter = 480;
  std::vector<VoiceInfo> voices;
  std::vector<NoteEvent> events;

  std::vector<NoteEvent> sorted_events() const;

  bool operator==(const Score&) const = default;
};

inline std::vector<NoteEvent> Score::sorted_events() const {
  std::vector<NoteEvent> out = events;
  std::stable_sort(out.begin(), out.end(),
                   [](const NoteEvent& a, const NoteEvent& b) {
                     if (a.onset != b.onset) return a.onset < b.onset;
                     if (a.voice != b.voice) return a.voice < b.voice;
                     return a.pitch < b.pitch;
                   });
  return out;
}

}  // namespace braidsong
