#include "braidsong/midi.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string_view>

#include "braidsong/errors.hpp"

namespace braidsong {

namespace {

void append_u16(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void append_vlq(std::vector<std::uint8_t>& out, std::int64_t n) {
  const auto encoded = vlq_encode(n);
  out.insert(out.end(), encoded.begin(), encoded.end());
}

void append_chunk(std::vector<std::uint8_t>& out, const char* tag,
                  const std::vector<std::uint8_t>& payload) {
  out.insert(out.end(), tag, tag + 4);
  append_u32(out, static_cast<std::uint32_t>(payload.size()));
  out.insert(out.end(), payload.begin(), payload.end());
}

int channel_for_voice(int voice) { return voice < 9 ? voice : voice + 1; }

int voice_for_channel(int channel) {
  // Channel 9 never appears in files this module writes; a foreign file
  // using it shares voice 9 with channel 10.
  return channel <= 9 ? channel : channel - 1;
}

// on/off boundary of one note, for per-track serialization
struct Boundary {
  std::int64_t tick;
  int kind;  // 0 = note-off, 1 = note-on: offs precede ons at equal ticks
  int pitch;
  int velocity;
};

class ByteReader {
 public:
  explicit ByteReader(const std::vector<std::uint8_t>& bytes)
      : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  std::size_t size() const { return bytes_.size(); }
  bool at_end() const { return pos_ >= bytes_.size(); }
  void seek(std::size_t p) { pos_ = p; }

  std::uint8_t peek() {
    need(1);
    return bytes_[pos_];
  }
  std::uint8_t u8() {
    need(1);
    return bytes_[pos_++];
  }
  std::uint16_t u16() {
    need(2);
    const std::uint16_t v = static_cast<std::uint16_t>(
        (bytes_[pos_] << 8) | bytes_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | bytes_[pos_ + i];
    pos_ += 4;
    return v;
  }
  void skip(std::size_t n) {
    need(n);
    pos_ += n;
  }
  std::int64_t vlq() {
    std::int64_t v = 0;
    for (int i = 0; i < 4; ++i) {
      const std::uint8_t b = u8();
      v = (v << 7) | (b & 0x7F);
      if (!(b & 0x80)) return v;
    }
    fail(ErrorCode::MalformedChunk,
         "variable-length quantity longer than 4 bytes");
  }
  int data_byte() {
    const std::uint8_t b = u8();
    if (b & 0x80) {
      fail(ErrorCode::MalformedChunk, "status byte where data was expected");
    }
    return b;
  }

 private:
  void need(std::size_t n) {
    if (pos_ + n > bytes_.size()) {
      fail(ErrorCode::TruncatedFile, "unexpected end of file");
    }
  }

  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> vlq_encode(std::int64_t n) {
  if (n < 0 || n >= (std::int64_t{1} << 28)) {
    fail(ErrorCode::OutOfRange,
         "variable-length quantity must be in [0, 2^28)");
  }
  std::uint8_t groups[4];
  int count = 0;
  do {
    groups[count++] = static_cast<std::uint8_t>(n & 0x7F);
    n >>= 7;
  } while (n > 0);
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = count - 1; i > 0; --i) {
    out.push_back(static_cast<std::uint8_t>(groups[i] | 0x80));
  }
  out.push_back(groups[0]);
  return out;
}

std::vector<std::uint8_t> write_smf(const Score& score) {
  if (score.voices.size() > 15) {
    fail(ErrorCode::TooManyVoices,
         std::to_string(score.voices.size()) +
             " voices exceed the 15 melodic channels");
  }
  if (score.ticks_per_quarter < 1 || score.ticks_per_quarter > 0x7FFF) {
    fail(ErrorCode::InvalidEvent, "ticks_per_quarter must be in 1..32767");
  }
  for (const NoteEvent& e : score.events) {
    if (e.voice < 0 || e.voice >= static_cast<int>(score.voices.size())) {
      fail(ErrorCode::InvalidEvent,
           "event voice " + std::to_string(e.voice) + " has no track");
    }
    if (e.pitch < 0 || e.pitch > 127 || e.velocity < 1 || e.velocity > 127 ||
        e.duration < 1 || e.onset < 0) {
      fail(ErrorCode::InvalidEvent, "event field out of range");
    }
  }

  std::vector<std::uint8_t> out;
  out.reserve(1024);
  // MThd: length 6, format 1, one meta track plus one track per voice.
  out.insert(out.end(), {'M', 'T', 'h', 'd'});
  append_u32(out, 6);
  append_u16(out, 1);
  append_u16(out, static_cast<std::uint32_t>(1 + score.voices.size()));
  append_u16(out, static_cast<std::uint32_t>(score.ticks_per_quarter));

  // Track 0: tempo 120 BPM (500000 us per quarter) and end-of-track.
  std::vector<std::uint8_t> tempo = {0x00, 0xFF, 0x51, 0x03, 0x07, 0xA1,
                                     0x20, 0x00, 0xFF, 0x2F, 0x00};
  append_chunk(out, "MTrk", tempo);

  for (std::size_t v = 0; v < score.voices.size(); ++v) {
    const int channel = channel_for_voice(static_cast<int>(v));
    std::vector<Boundary> boundaries;
    for (const NoteEvent& e : score.events) {
      if (e.voice != static_cast<int>(v)) continue;
      boundaries.push_back({e.onset, 1, e.pitch, e.velocity});
      boundaries.push_back({e.onset + e.duration, 0, e.pitch, 0x40});
    }
    std::stable_sort(boundaries.begin(), boundaries.end(),
                     [](const Boundary& a, const Boundary& b) {
                       if (a.tick != b.tick) return a.tick < b.tick;
                       if (a.kind != b.kind) return a.kind < b.kind;
                       if (a.pitch != b.pitch) return a.pitch < b.pitch;
                       return a.velocity < b.velocity;
                     });
    std::vector<std::uint8_t> track;
    std::int64_t cursor = 0;
    for (const Boundary& b : boundaries) {
      append_vlq(track, b.tick - cursor);
      cursor = b.tick;
      const std::uint8_t status = static_cast<std::uint8_t>(
          (b.kind == 1 ? 0x90 : 0x80) | channel);
      track.push_back(status);
      track.push_back(static_cast<std::uint8_t>(b.pitch));
      track.push_back(static_cast<std::uint8_t>(b.velocity));
    }
    track.insert(track.end(), {0x00, 0xFF, 0x2F, 0x00});
    append_chunk(out, "MTrk", track);
  }
  return out;
}

Score read_smf(const std::vector<std::uint8_t>& bytes) {
  ByteReader r(bytes);
  if (r.size() < 8 || r.u8() != 'M' || r.u8() != 'T' || r.u8() != 'h' ||
      r.u8() != 'd') {
    fail(ErrorCode::MalformedChunk, "missing MThd header");
  }
  const std::uint32_t header_len = r.u32();
  if (header_len < 6) {
    fail(ErrorCode::MalformedChunk, "MThd length below 6");
  }
  const std::uint16_t format = r.u16();
  const std::uint16_t declared_tracks = r.u16();
  const std::uint16_t division = r.u16();
  r.skip(header_len - 6);
  if (format > 1) {
    fail(ErrorCode::MalformedChunk,
         "format " + std::to_string(format) + " is not supported");
  }
  if (division == 0 || (division & 0x8000)) {
    fail(ErrorCode::MalformedChunk, "SMPTE or zero division");
  }

  Score score;
  score.ticks_per_quarter = division;
  int tracks_seen = 0;
  while (tracks_seen < declared_tracks) {
    if (r.at_end()) {
      fail(ErrorCode::TruncatedFile,
           "file ends before track " + std::to_string(tracks_seen + 1));
    }
    char tag[4];
    for (char& c : tag) c = static_cast<char>(r.u8());
    const std::uint32_t length = r.u32();
    if (std::string_view(tag, 4) != "MTrk") {
      r.skip(length);  // alien chunks are allowed between tracks
      continue;
    }
    ++tracks_seen;
    const std::size_t track_end = r.pos() + length;
    if (track_end > r.size()) {
      fail(ErrorCode::TruncatedFile, "track chunk exceeds the file");
    }
    std::int64_t tick = 0;
    std::uint8_t running = 0;
    std::map<std::pair<int, int>, std::deque<std::pair<std::int64_t, int>>>
        open;
    const auto close_note = [&](int channel, int pitch, std::int64_t off) {
      auto it = open.find({channel, pitch});
      if (it == open.end() || it->second.empty()) return;  // stray note-off
      const auto [onset, velocity] = it->second.front();
      it->second.pop_front();
      score.events.push_back({voice_for_channel(channel), onset,
                              std::max<std::int64_t>(1, off - onset), pitch,
                              velocity});
    };
    while (r.pos() < track_end) {
      tick += r.vlq();
      std::uint8_t status = r.peek();
      if (status < 0x80) {
        if (running == 0) {
          fail(ErrorCode::MalformedChunk, "data byte without a status byte");
        }
        status = running;
      } else {
        r.u8();
        if (status < 0xF0) running = status;
      }
      const int channel = status & 0x0F;
      switch (status >> 4) {
        case 0x8: {
          const int pitch = r.data_byte();
          r.data_byte();  // release velocity
          close_note(channel, pitch, tick);
          break;
        }
        case 0x9: {
          const int pitch = r.data_byte();
          const int velocity = r.data_byte();
          if (velocity == 0) {
            close_note(channel, pitch, tick);
          } else {
            open[{channel, pitch}].push_back({tick, velocity});
          }
          break;
        }
        case 0xA:
        case 0xB:
        case 0xE:
          r.skip(2);
          break;
        case 0xC:
        case 0xD:
          r.skip(1);
          break;
        case 0xF: {
          if (status == 0xFF) {
            const std::uint8_t meta = r.u8();
            const std::int64_t meta_len = r.vlq();
            r.skip(static_cast<std::size_t>(meta_len));
            if (meta == 0x2F) r.seek(track_end);
          } else if (status == 0xF0 || status == 0xF7) {
            const std::int64_t sysex_len = r.vlq();
            r.skip(static_cast<std::size_t>(sysex_len));
          } else {
            fail(ErrorCode::MalformedChunk, "unsupported status byte");
          }
          break;
        }
        default:
          fail(ErrorCode::MalformedChunk, "unsupported status byte");
      }
    }
  }
  std::stable_sort(score.events.begin(), score.events.end(),
                   [](const NoteEvent& a, const NoteEvent& b) {
                     if (a.onset != b.onset) return a.onset < b.onset;
                     if (a.voice != b.voice) return a.voice < b.voice;
                     if (a.pitch != b.pitch) return a.pitch < b.pitch;
                     return a.velocity < b.velocity;
                   });
  return score;
}

std::string export_csv(const HelixLines& lines) {
  std::string out = "step,voice,pitch,unison\n";
  if (lines.voices.empty()) return out;
  std::size_t length = lines.voices.front().pitches.size();
  for (const HelixLine& v : lines.voices) {
    length = std::min(length, v.pitches.size());
  }
  for (std::size_t step = 0; step < length; ++step) {
    const bool unison = lines.unison_steps.count(step) > 0;
    for (std::size_t v = 0; v < lines.voices.size(); ++v) {
      out += std::to_string(step);
      out += ',';
      out += std::to_string(v);
      out += ',';
      out += std::to_string(lines.voices[v].pitches[step]);
      out += ',';
      out += unison ? '1' : '0';
      out += '\n';
    }
  }
  return out;
}

}  // namespace braidsong
