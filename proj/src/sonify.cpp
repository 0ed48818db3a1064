#include "braidsong/sonify.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "braidsong/errors.hpp"

namespace braidsong {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }

bool in_major_scale(int pitch) {
  static constexpr bool kScale[12] = {true, false, true,  false, true, true,
                                      false, true, false, true,  false, true};
  return kScale[((pitch % 12) + 12) % 12];
}

// Nearest C-major pitch, preferring the lower one on ties. The scale has no
// gap wider than 2 semitones, so the search ends quickly.
int snap_to_major(int pitch) {
  for (int d = 0; d <= 2; ++d) {
    if (pitch - d >= 0 && in_major_scale(pitch - d)) return pitch - d;
    if (pitch + d <= 127 && in_major_scale(pitch + d)) return pitch + d;
  }
  return pitch;
}

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// round-half-up of (value * num / den) in pure integer arithmetic
std::int64_t scale_ticks(std::int64_t value, int num, int den) {
  return (2 * value * num + den) / (2 * static_cast<std::int64_t>(den));
}

}  // namespace

char base_char(Base b) {
  switch (b) {
    case Base::A: return 'A';
    case Base::C: return 'C';
    case Base::G: return 'G';
    case Base::T: return 'T';
  }
  return '?';
}

std::vector<DnaSequence> parse_fasta(const std::string& text,
                                     bool skip_invalid) {
  std::vector<DnaSequence> out;
  DnaSequence cur;
  bool in_record = false;
  const auto flush = [&] {
    if (!in_record) return;
    if (cur.bases.empty()) {
      fail(ErrorCode::EmptyInput,
           "sequence '" + cur.id + "' has no bases");
    }
    out.push_back(std::move(cur));
    cur = {};
  };
  std::istringstream stream(text);
  std::string raw;
  while (std::getline(stream, raw)) {
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '>') {
      flush();
      in_record = true;
      cur.id = trim(line.substr(1));
      continue;
    }
    if (!in_record) {
      fail(ErrorCode::MissingHeader,
           "sequence data before the first '>' header");
    }
    for (const char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'A': cur.bases.push_back(Base::A); break;
        case 'C': cur.bases.push_back(Base::C); break;
        case 'G': cur.bases.push_back(Base::G); break;
        case 'T': cur.bases.push_back(Base::T); break;
        default:
          if (skip_invalid) break;
          fail(ErrorCode::InvalidBase,
               std::string("invalid base '") + c + "' at position " +
                   std::to_string(cur.bases.size() + 1) + " of sequence '" +
                   cur.id + "'");
      }
    }
  }
  flush();
  if (out.empty()) {
    fail(ErrorCode::EmptyInput, "no sequence records found");
  }
  return out;
}

std::string serialize_fasta(const std::vector<DnaSequence>& seqs) {
  std::string out;
  for (const DnaSequence& s : seqs) {
    out += '>';
    out += s.id;
    out += '\n';
    for (std::size_t i = 0; i < s.bases.size(); ++i) {
      out += base_char(s.bases[i]);
      if ((i + 1) % 60 == 0) out += '\n';
    }
    if (s.bases.size() % 60 != 0) out += '\n';
  }
  return out;
}

Dyad base_dyad(Base b, int octave_shift) {
  Dyad d;
  switch (b) {
    case Base::A: d = {69, 72, "minor third"}; break;
    case Base::C: d = {60, 64, "major third"}; break;
    case Base::T: d = {71, 74, "minor third"}; break;
    case Base::G: d = {67, 71, "major third"}; break;
  }
  d.low += 12 * octave_shift;
  d.high += 12 * octave_shift;
  if (d.low < 0 || d.high > 127) {
    fail(ErrorCode::OutOfRange, "octave shift leaves the MIDI pitch range");
  }
  return d;
}

void validate_helix_params(const HelixParams& params) {
  if (params.strand_count < 2 || params.strand_count > 4) {
    fail(ErrorCode::OutOfRange, "strand_count must be 2, 3 or 4");
  }
  if (params.samples_per_turn < 4) {
    fail(ErrorCode::OutOfRange, "samples_per_turn must be at least 4");
  }
  if (params.pitch_low < 0 || params.pitch_high > 127 ||
      params.pitch_low >= params.pitch_high) {
    fail(ErrorCode::OutOfRange,
         "pitch range must satisfy 0 <= low < high <= 127");
  }
  if (params.step_ticks < 1) {
    fail(ErrorCode::OutOfRange, "step_ticks must be positive");
  }
  if (params.phase_offsets.size() < 2) {
    fail(ErrorCode::OutOfRange, "at least two phase offsets are needed");
  }
}

HelixLines helix_lines(const HelixParams& params, std::size_t length) {
  validate_helix_params(params);
  const double period = params.samples_per_turn;
  const std::size_t voices = params.phase_offsets.size();
  HelixLines out;
  out.voices.assign(voices, HelixLine{{}, params.step_ticks});
  for (std::size_t k = 0; k < voices; ++k) {
    out.voices[k].pitches.reserve(length);
    for (std::size_t n = 0; n < length; ++n) {
      const double value = std::sin(2.0 * kPi * static_cast<double>(n) / period +
                                    params.phase_offsets[k]);
      const double scaled =
          params.pitch_low +
          (value + 1.0) * 0.5 * (params.pitch_high - params.pitch_low);
      int pitch = round_half_up(scaled);
      if (params.diatonic) pitch = snap_to_major(pitch);
      out.voices[k].pitches.push_back(pitch);
    }
  }
  // Continuous crossings: sin(a) == sin(b) with distinct phases needs
  // a + b == (2m+1)*pi, giving t = P*((2m+1)*pi - phi_j - phi_k)/(4*pi).
  // A crossing inside [n, n+1) flags step n; both voices then take the
  // lower-indexed voice's pitch there.
  for (std::size_t j = 0; j + 1 < voices; ++j) {
    for (std::size_t k = j + 1; k < voices; ++k) {
      const double diff =
          std::remainder(params.phase_offsets[j] - params.phase_offsets[k],
                         2.0 * kPi);
      if (std::abs(diff) < 1e-12) continue;  // identical voices never cross
      const double phi_sum =
          params.phase_offsets[j] + params.phase_offsets[k];
      const double lo = (phi_sum / kPi - 1.0) / 2.0;
      const double hi =
          (4.0 * static_cast<double>(length) / period + phi_sum / kPi - 1.0) /
          2.0;
      for (long m = static_cast<long>(std::floor(lo)) - 2;
           m <= static_cast<long>(std::ceil(hi)) + 2; ++m) {
        double t = period *
                   ((2.0 * static_cast<double>(m) + 1.0) * kPi - phi_sum) /
                   (4.0 * kPi);
        // Crossings that land on a step boundary up to round-off are
        // snapped to it; the default antiparallel phases cross exactly at
        // multiples of P/2.
        const double nearest = std::round(t);
        if (std::abs(t - nearest) < 1e-9 * std::max(1.0, std::abs(t))) {
          t = nearest;
        }
        if (t < 0.0 || t >= static_cast<double>(length)) continue;
        const auto step = static_cast<std::size_t>(std::floor(t));
        out.unison_steps.insert(step);
        out.voices[k].pitches[step] = out.voices[j].pitches[step];
      }
    }
  }
  return out;
}

TransformedLine multi_helix_transform(const HelixLine& line, int factor,
                                      int transpose) {
  if (factor < 1) {
    fail(ErrorCode::OutOfRange, "augmentation factor must be at least 1");
  }
  TransformedLine out;
  out.line.step_ticks = line.step_ticks * factor;
  out.line.pitches.reserve(line.pitches.size());
  for (const int p : line.pitches) {
    int q = p + transpose;
    if (q < 0) {
      q = 0;
      out.clamped = true;
    } else if (q > 127) {
      q = 127;
      out.clamped = true;
    }
    out.line.pitches.push_back(q);
  }
  return out;
}

std::vector<int> render_coiling(int pivot, const std::vector<int>& pattern,
                                int period) {
  if (pattern.empty()) {
    fail(ErrorCode::EmptyPattern, "coiling needs a nonempty pattern");
  }
  if (period < 2) {
    fail(ErrorCode::OutOfRange, "coiling period must be at least 2");
  }
  std::vector<int> out;
  std::size_t next = 0;
  for (int pos = 0; next < pattern.size(); ++pos) {
    if (pos % period == 0) {
      out.push_back(pivot);
      out.push_back(pivot);  // doubled: the superposition point
    } else {
      out.push_back(pattern[next++]);
    }
  }
  return out;
}

int dynamic_velocity(Dynamic d) {
  switch (d) {
    case Dynamic::pp: return 32;
    case Dynamic::p: return 48;
    case Dynamic::mp: return 64;
    case Dynamic::mf: return 72;
    case Dynamic::f: return 88;
    case Dynamic::ff: return 104;
  }
  return 64;
}

DynamicsEnvelope default_envelope() {
  return {{Dynamic::p, Dynamic::mf, Dynamic::ff, Dynamic::mf, Dynamic::p}};
}

std::vector<NoteEvent> apply_supercoiling(std::vector<NoteEvent> events,
                                          const DynamicsEnvelope& env,
                                          std::int64_t span_ticks) {
  if (span_ticks <= 0) {
    fail(ErrorCode::OutOfRange, "supercoiling span must be positive");
  }
  if (env.labels.empty()) {
    fail(ErrorCode::EmptyPattern, "dynamics envelope has no labels");
  }
  const auto cycle = static_cast<std::int64_t>(env.labels.size());
  for (NoteEvent& e : events) {
    const std::int64_t span = e.onset / span_ticks;
    e.velocity = dynamic_velocity(
        env.labels[static_cast<std::size_t>(span % cycle)]);
  }
  return events;
}

std::vector<NoteEvent> render_concatenation(
    const std::vector<std::vector<NoteEvent>>& patterns, int compression_num,
    int compression_den) {
  if (compression_num < 1 || compression_den < 1 ||
      compression_num > compression_den) {
    fail(ErrorCode::OutOfRange, "compression must be a rational in (0, 1]");
  }
  std::vector<NoteEvent> out;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    for (const NoteEvent& e : patterns[p]) {
      NoteEvent scaled = e;
      scaled.voice = static_cast<int>(p);
      scaled.onset = scale_ticks(e.onset, compression_num, compression_den);
      scaled.duration = std::max<std::int64_t>(
          1, scale_ticks(e.duration, compression_num, compression_den));
      out.push_back(scaled);
    }
  }
  return out;
}

std::vector<NoteEvent> glissando(const Dyad& from, const Dyad& to,
                                 std::int64_t duration_ticks, int steps,
                                 std::int64_t onset, int voice, int velocity,
                                 bool diatonic) {
  if (steps < 2) {
    fail(ErrorCode::OutOfRange, "a glissando needs at least 2 steps");
  }
  if (duration_ticks < 1) {
    fail(ErrorCode::OutOfRange, "glissando duration must be positive");
  }
  const std::int64_t per =
      std::max<std::int64_t>(1, duration_ticks / steps);
  std::vector<NoteEvent> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int j = 0; j < steps; ++j) {
    const double x = from.high + (to.high - from.high) *
                                     (static_cast<double>(j) /
                                      static_cast<double>(steps - 1));
    int pitch = round_half_up(x);
    if (diatonic) pitch = snap_to_major(pitch);
    out.push_back({voice, onset + j * per, per, pitch, velocity});
  }
  return out;
}

Score assemble_score(const DnaSequence& seq, const HelixParams& params,
                     const SonifyOptions& options) {
  validate_helix_params(params);
  if (seq.bases.empty()) {
    fail(ErrorCode::EmptyInput, "sequence '" + seq.id + "' has no bases");
  }
  if (options.gliss_steps < 2) {
    fail(ErrorCode::OutOfRange, "gliss_steps must be at least 2");
  }
  const std::size_t length = seq.bases.size();
  const HelixLines lines = helix_lines(params, length);

  Score score;
  const int helix_count = params.strand_count;
  for (int k = 0; k < helix_count; ++k) {
    score.voices.push_back({"helix" + std::to_string(k + 1), "strings"});
  }
  const int chimes_base = helix_count;
  score.voices.push_back({"chimes", "percussion"});
  score.voices.push_back({"glockenspiel", "percussion"});
  score.voices.push_back({"celesta", "percussion"});
  const int harp_voice = helix_count + 3;
  score.voices.push_back({"harp", "harp"});

  // Layer 1: the helix. Sinusoid voices first; strand counts beyond the
  // phase list are filled with augmented, transposed copies.
  const auto sampled =
      std::min<std::size_t>(lines.voices.size(),
                            static_cast<std::size_t>(helix_count));
  for (std::size_t k = 0; k < sampled; ++k) {
    const HelixLine& line = lines.voices[k];
    for (std::size_t n = 0; n < length; ++n) {
      score.events.push_back({static_cast<int>(k),
                              static_cast<std::int64_t>(n) * line.step_ticks,
                              line.step_ticks, line.pitches[n], 64});
    }
  }
  for (std::size_t k = sampled; k < static_cast<std::size_t>(helix_count);
       ++k) {
    const HelixLine& source = lines.voices[k - sampled];
    const TransformedLine derived = multi_helix_transform(source, 2, 12);
    for (std::size_t n = 0; n < derived.line.pitches.size(); ++n) {
      score.events.push_back(
          {static_cast<int>(k),
           static_cast<std::int64_t>(n) * derived.line.step_ticks,
           derived.line.step_ticks, derived.line.pitches[n], 64});
    }
  }

  // Layer 2: one dyad per base on the rotating percussion voices.
  for (std::size_t p = 0; p < length; ++p) {
    const Dyad d = base_dyad(seq.bases[p], options.dyad_octave_shift);
    const int voice = chimes_base + static_cast<int>(p % 3);
    const std::int64_t onset =
        static_cast<std::int64_t>(p) * params.step_ticks;
    score.events.push_back({voice, onset, params.step_ticks, d.low, 80});
    score.events.push_back({voice, onset, params.step_ticks, d.high, 80});
  }

  // Layer 3: glissandi carrying each base into the next.
  for (std::size_t p = 0; p + 1 < length; ++p) {
    const Dyad from = base_dyad(seq.bases[p], options.dyad_octave_shift);
    const Dyad to = base_dyad(seq.bases[p + 1], options.dyad_octave_shift);
    const auto run =
        glissando(from, to, params.step_ticks, options.gliss_steps,
                  static_cast<std::int64_t>(p) * params.step_ticks,
                  harp_voice, 56, options.gliss_diatonic);
    score.events.insert(score.events.end(), run.begin(), run.end());
  }

  if (options.coiling) {
    std::vector<int> pattern;
    pattern.reserve(length);
    for (const Base b : seq.bases) {
      pattern.push_back(base_dyad(b, options.dyad_octave_shift).high);
    }
    const int pivot = round_half_up(
        params.pitch_low + 0.5 * (params.pitch_high - params.pitch_low));
    const std::vector<int> coil =
        render_coiling(pivot, pattern, options.coiling_period);
    std::int64_t start = 0;
    for (const NoteEvent& e : score.events) {
      start = std::max(start, e.onset + e.duration);
    }
    for (std::size_t i = 0; i < coil.size(); ++i) {
      score.events.push_back(
          {0, start + static_cast<std::int64_t>(i) * params.step_ticks,
           params.step_ticks, coil[i], 64});
    }
  }

  if (options.supercoiling) {
    score.events = apply_supercoiling(std::move(score.events),
                                      default_envelope(),
                                      options.supercoil_span);
  }
  return score;
}

}  // namespace braidsong
