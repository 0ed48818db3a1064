#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidsong/score.hpp"
#include "braidsong/sonify.hpp"

namespace braidsong {

// SMF variable-length quantity: big-endian 7-bit groups, all but the last
// with the high bit set. n must satisfy 0 <= n < 2^28 (OutOfRange).
std::vector<std::uint8_t> vlq_encode(std::int64_t n);

// Standard MIDI File, format 1. Track 0 carries the 120 BPM tempo meta;
// every voice gets its own track and channel (voice order -> channel
// 0, 1, 2, ..., skipping channel 9). Note-offs are explicit (0x8c, release
// 0x40), running status is never used, and same-tick events are ordered
// note-off first, then by pitch, so equal scores give identical bytes.
// Throws TooManyVoices (> 15 voices) and InvalidEvent (field out of range).
std::vector<std::uint8_t> write_smf(const Score& score);

// Inverse of write_smf on files this module wrote; also tolerates format 0,
// running status and velocity-0 note-offs. Voice metadata is not stored in
// the file, so the result carries ticks_per_quarter and events only, with
// events sorted by (onset, voice, pitch). Throws MalformedChunk and
// TruncatedFile.
Score read_smf(const std::vector<std::uint8_t>& bytes);

// Plot data for the helix shape: header `step,voice,pitch,unison`, one row
// per (step, voice), steps outermost.
std::string export_csv(const HelixLines& lines);

}  // namespace braidsong
