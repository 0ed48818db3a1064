#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "braidsong/score.hpp"

namespace braidsong {

// === sequences ===

enum class Base { A, C, G, T };

char base_char(Base b);

struct DnaSequence {
  std::string id;
  std::vector<Base> bases;

  bool operator==(const DnaSequence&) const = default;
};

// FASTA: records introduced by '>' header lines, sequence lines folded and
// uppercased. Characters outside ACGT throw InvalidBase with the 1-based
// base position, or are dropped when skip_invalid is set. Also throws
// MissingHeader (sequence data before any '>') and EmptyInput (no records,
// or a record without bases).
std::vector<DnaSequence> parse_fasta(const std::string& text,
                                     bool skip_invalid = false);
std::string serialize_fasta(const std::vector<DnaSequence>& seqs);

// === base dyads ===

struct Dyad {
  int low = 0;
  int high = 0;
  std::string quality;  // "minor third" or "major third"

  int width() const { return high - low; }
};

// A -> (A4,C5) minor third, C -> (C4,E4) major third, T -> (B4,D5) minor
// third, G -> (G4,B4) major third; octave_shift moves the whole table in
// 12-semitone steps.
Dyad base_dyad(Base b, int octave_shift = 0);

// === helix voices ===

struct HelixParams {
  int strand_count = 2;       // 2, 3 or 4 voices in the assembled score
  int samples_per_turn = 16;  // >= 4
  int pitch_low = 55;
  int pitch_high = 79;        // must exceed pitch_low
  int step_ticks = 240;
  // Phases of the sinusoid-sampled voices. Voices beyond these (for
  // strand_count > 2) are derived copies, not extra sinusoids.
  std::vector<double> phase_offsets = {0.0, 3.141592653589793238462643383279502884};
  bool diatonic = false;  // snap pitches to the C major scale
};

// Throws OutOfRange when any field is outside its documented range.
void validate_helix_params(const HelixParams& params);

struct HelixLine {
  std::vector<int> pitches;  // one per melodic step
  int step_ticks = 240;

  bool operator==(const HelixLine&) const = default;
};

struct HelixLines {
  std::vector<HelixLine> voices;
  std::set<std::size_t> unison_steps;
};

// Voice k at step n samples sin(2*pi*n/P + phase_k), rescaled from [-1,1]
// to [pitch_low, pitch_high] and rounded half-up. Wherever two of the
// continuous sinusoids cross inside a step interval [n, n+1), that step is
// flagged and both voices sound the crossing pair's first (lower-indexed)
// voice's pitch: the exchange points are unisons.
HelixLines helix_lines(const HelixParams& params, std::size_t length);

struct TransformedLine {
  HelixLine line;
  bool clamped = false;  // some pitch had to be clamped into 0..127
};

// Augmentation and transposition: durations multiplied by factor (>= 1),
// pitches shifted by transpose semitones and clamped to the MIDI range.
TransformedLine multi_helix_transform(const HelixLine& line, int factor,
                                      int transpose);

// === coiling and supercoiling ===

// A melody returning periodically to the pivot: positions n with
// n % period == 0 carry the pivot (doubled, marking the superposition
// point), the gaps take pattern pitches in order until the pattern is
// exhausted. Throws EmptyPattern; period must be >= 2 (OutOfRange).
std::vector<int> render_coiling(int pivot, const std::vector<int>& pattern,
                                int period);

enum class Dynamic { pp, p, mp, mf, f, ff };

int dynamic_velocity(Dynamic d);  // pp 32, p 48, mp 64, mf 72, f 88, ff 104

struct DynamicsEnvelope {
  std::vector<Dynamic> labels;  // cycles after labels.size() spans
};

DynamicsEnvelope default_envelope();  // p, mf, ff, mf, p

// Loudness cycle: the event at onset T belongs to span T / span_ticks and
// takes the velocity of the envelope label for that span (cycling).
// Pitches and times are untouched.
std::vector<NoteEvent> apply_supercoiling(std::vector<NoteEvent> events,
                                          const DynamicsEnvelope& env,
                                          std::int64_t span_ticks);

// === concatenation and glissandi ===

// Overlays all patterns at onset 0 on distinct voices (pattern index =
// voice), scaling onsets and durations by the rational
// compression_num/compression_den in (0, 1], rounded to the nearest tick
// with a 1-tick duration floor.
std::vector<NoteEvent> render_concatenation(
    const std::vector<std::vector<NoteEvent>>& patterns, int compression_num,
    int compression_den);

// Chromatic run of `steps` equal-duration notes from the top pitch of
// `from` to the top pitch of `to` (linear interpolation, rounded half-up;
// optionally snapped to the C major scale). steps must be >= 2.
std::vector<NoteEvent> glissando(const Dyad& from, const Dyad& to,
                                 std::int64_t duration_ticks, int steps,
                                 std::int64_t onset = 0, int voice = 0,
                                 int velocity = 56, bool diatonic = false);

// === assembly ===

struct SonifyOptions {
  int dyad_octave_shift = 0;
  int gliss_steps = 8;
  bool gliss_diatonic = false;
  bool coiling = false;
  int coiling_period = 3;
  bool supercoiling = false;
  std::int64_t supercoil_span = 960;
};

// Three simultaneous layers: helix voices on string-role tracks (derived
// copies fill strand_count > 2), one dyad per base on the rotating
// chimes/glockenspiel/celesta tracks, and glissandi between consecutive
// dyads on the harp track. Optional coiling appends its melody after the
// main section; optional supercoiling applies the default loudness cycle
// to every event. Deterministic.
Score assemble_score(const DnaSequence& seq, const HelixParams& params,
                     const SonifyOptions& options = {});

}  // namespace braidsong
