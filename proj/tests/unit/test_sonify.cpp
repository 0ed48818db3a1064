#include "doctest.h"

#include <algorithm>
#include <set>

#include "braidsong/errors.hpp"
#include "braidsong/sonify.hpp"

using namespace braidsong;

namespace {

DnaSequence acgt() {
  return {"acgt", {Base::A, Base::C, Base::G, Base::T}};
}

std::vector<NoteEvent> events_of_voice(const Score& s, int voice) {
  std::vector<NoteEvent> out;
  for (const NoteEvent& e : s.events) {
    if (e.voice == voice) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_SUITE("sonify") {

TEST_CASE("fasta parsing") {
  const auto seqs = parse_fasta(">seq1 description here\nACGT\nTGCA\n");
  REQUIRE(seqs.size() == 1);
  CHECK(seqs[0].id == "seq1 description here");
  CHECK(seqs[0].bases == std::vector<Base>{Base::A, Base::C, Base::G, Base::T,
                                           Base::T, Base::G, Base::C,
                                           Base::A});
}

TEST_CASE("fasta accepts lower case and multiple records") {
  const auto seqs = parse_fasta(">a\nacgt\n>b\n\nGG\ntt\n");
  REQUIRE(seqs.size() == 2);
  CHECK(seqs[0].bases.size() == 4);
  CHECK(seqs[1].bases ==
        std::vector<Base>{Base::G, Base::G, Base::T, Base::T});
}

TEST_CASE("fasta round-trips through serialize") {
  std::vector<DnaSequence> seqs;
  DnaSequence long_seq;
  long_seq.id = "long";
  for (int i = 0; i < 150; ++i) {
    long_seq.bases.push_back(static_cast<Base>(i % 4));
  }
  seqs.push_back(long_seq);
  seqs.push_back(acgt());
  const std::string text = serialize_fasta(seqs);
  // 150 bases fold into 60 + 60 + 30 character lines.
  CHECK(text.find("\n") != std::string::npos);
  CHECK(parse_fasta(text) == seqs);
}

TEST_CASE("fasta error reporting") {
  try {
    parse_fasta(">x\nACGU\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidBase);
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
  }
  try {
    parse_fasta("ACGT\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingHeader);
  }
  for (const char* text : {"", "  \n\n", ">empty\n", ">a\nAC\n>empty\n"}) {
    CAPTURE(text);
    try {
      parse_fasta(text);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyInput);
    }
  }
  // skip_invalid drops the bad characters instead.
  const auto seqs = parse_fasta(">x\nAC-GU T\n", true);
  REQUIRE(seqs.size() == 1);
  CHECK(seqs[0].bases ==
        std::vector<Base>{Base::A, Base::C, Base::G, Base::T});
}

TEST_CASE("base dyads carry the documented intervals") {
  const Dyad a = base_dyad(Base::A);
  CHECK(a.low == 69);
  CHECK(a.high == 72);
  CHECK(a.width() == 3);
  CHECK(a.quality == "minor third");
  const Dyad c = base_dyad(Base::C);
  CHECK(c.low == 60);
  CHECK(c.high == 64);
  CHECK(c.width() == 4);
  CHECK(c.quality == "major third");
  const Dyad g = base_dyad(Base::G);
  CHECK(g.low == 67);
  CHECK(g.high == 71);
  CHECK(g.width() == 4);
  const Dyad t = base_dyad(Base::T);
  CHECK(t.low == 71);
  CHECK(t.high == 74);
  CHECK(t.width() == 3);

  CHECK(base_dyad(Base::A, 1).low == 81);
  CHECK(base_dyad(Base::A, -2).high == 48);
  CHECK_THROWS_AS(base_dyad(Base::T, 5), Error);   // above MIDI range
  CHECK_THROWS_AS(base_dyad(Base::C, -6), Error);  // below 0
}

TEST_CASE("helix parameter validation") {
  HelixParams p;
  CHECK_NOTHROW(validate_helix_params(p));
  p.strand_count = 5;
  CHECK_THROWS_AS(validate_helix_params(p), Error);
  p = {};
  p.samples_per_turn = 3;
  CHECK_THROWS_AS(validate_helix_params(p), Error);
  p = {};
  p.pitch_low = 60;
  p.pitch_high = 60;
  CHECK_THROWS_AS(validate_helix_params(p), Error);
  p = {};
  p.pitch_high = 200;
  CHECK_THROWS_AS(validate_helix_params(p), Error);
  p = {};
  p.step_ticks = 0;
  CHECK_THROWS_AS(validate_helix_params(p), Error);
  p = {};
  p.phase_offsets = {0.0};
  CHECK_THROWS_AS(validate_helix_params(p), Error);
}

TEST_CASE("helix lines sample antiparallel sinusoids with unisons") {
  const HelixParams params;  // P = 16, phases 0 and pi
  const HelixLines lines = helix_lines(params, 33);
  REQUIRE(lines.voices.size() == 2);
  CHECK(lines.voices[0].pitches.size() == 33);
  CHECK(lines.voices[1].pitches.size() == 33);
  // Crossings of sin(x) and sin(x + pi) fall at multiples of half a turn.
  CHECK(lines.unison_steps == std::set<std::size_t>{0, 8, 16, 24, 32});
  for (const std::size_t n : lines.unison_steps) {
    CHECK(lines.voices[0].pitches[n] == lines.voices[1].pitches[n]);
  }
  // Unison pitch comes from the lower-indexed voice of the pair: at step 0
  // both sinusoids sit at the range midpoint.
  CHECK(lines.voices[0].pitches[0] == 67);
  // Off the unisons the voices move in opposite directions.
  CHECK(lines.voices[0].pitches[4] == 79);
  CHECK(lines.voices[1].pitches[4] == 55);
  CHECK(lines.voices[0].pitches[12] == 55);
  CHECK(lines.voices[1].pitches[12] == 79);
}

TEST_CASE("diatonic helix pitches stay in C major") {
  HelixParams p;
  p.diatonic = true;
  const HelixLines lines = helix_lines(p, 16);
  const std::set<int> major{0, 2, 4, 5, 7, 9, 11};
  for (const auto& voice : lines.voices) {
    for (const int pitch : voice.pitches) {
      CHECK(major.count(((pitch % 12) + 12) % 12) == 1);
    }
  }
}

TEST_CASE("three-phase helix has pairwise crossings") {
  HelixParams p;
  p.strand_count = 3;
  p.phase_offsets = {0.0, 2.0943951023931953, 4.18879020478639};  // thirds
  const HelixLines lines = helix_lines(p, 16);
  REQUIRE(lines.voices.size() == 3);
  CHECK_FALSE(lines.unison_steps.empty());
}

TEST_CASE("multi_helix_transform augments and transposes") {
  HelixLine line;
  line.pitches = {60, 62, 64};
  line.step_ticks = 240;
  const TransformedLine t = multi_helix_transform(line, 2, 12);
  CHECK(t.line.step_ticks == 480);
  CHECK(t.line.pitches == std::vector<int>{72, 74, 76});
  CHECK_FALSE(t.clamped);

  HelixLine high;
  high.pitches = {120, 125};
  const TransformedLine clamped = multi_helix_transform(high, 1, 12);
  CHECK(clamped.clamped);
  CHECK(clamped.line.pitches == std::vector<int>{127, 127});

  CHECK_THROWS_AS(multi_helix_transform(line, 0, 0), Error);
}

TEST_CASE("coiling melody returns to the doubled pivot") {
  const auto melody = render_coiling(67, {60, 62, 64, 65}, 3);
  CHECK(melody == std::vector<int>{67, 67, 60, 62, 67, 67, 64, 65});
  CHECK_THROWS_AS(render_coiling(67, {}, 3), Error);
  CHECK_THROWS_AS(render_coiling(67, {60}, 1), Error);
}

TEST_CASE("dynamics scale") {
  CHECK(dynamic_velocity(Dynamic::pp) == 32);
  CHECK(dynamic_velocity(Dynamic::p) == 48);
  CHECK(dynamic_velocity(Dynamic::mp) == 64);
  CHECK(dynamic_velocity(Dynamic::mf) == 72);
  CHECK(dynamic_velocity(Dynamic::f) == 88);
  CHECK(dynamic_velocity(Dynamic::ff) == 104);
  CHECK(default_envelope().labels ==
        std::vector<Dynamic>{Dynamic::p, Dynamic::mf, Dynamic::ff,
                             Dynamic::mf, Dynamic::p});
}

TEST_CASE("supercoiling cycles the envelope across spans") {
  std::vector<NoteEvent> events;
  for (int i = 0; i < 12; ++i) {
    events.push_back({0, i * 100, 100, 60, 64});
  }
  const auto out = apply_supercoiling(events, default_envelope(), 200);
  REQUIRE(out.size() == 12);
  // Spans of 200 ticks hold two events each; envelope p mf ff mf p cycles.
  const std::vector<int> expect{48, 48, 72, 72, 104, 104,
                                72, 72, 48, 48, 48, 48};
  for (std::size_t i = 0; i < out.size(); ++i) {
    CAPTURE(i);
    CHECK(out[i].velocity == expect[i]);
    CHECK(out[i].pitch == events[i].pitch);
    CHECK(out[i].onset == events[i].onset);
  }
  CHECK_THROWS_AS(apply_supercoiling(events, default_envelope(), 0), Error);
  CHECK_THROWS_AS(apply_supercoiling(events, DynamicsEnvelope{}, 200), Error);
}

TEST_CASE("concatenation compresses onto distinct voices") {
  std::vector<std::vector<NoteEvent>> patterns;
  patterns.push_back({{0, 0, 480, 60, 64}, {0, 480, 480, 62, 64}});
  patterns.push_back({{0, 0, 480, 72, 64}});
  const auto out = render_concatenation(patterns, 1, 2);
  REQUIRE(out.size() == 3);
  CHECK(out[0].voice == 0);
  CHECK(out[0].duration == 240);
  CHECK(out[1].onset == 240);
  CHECK(out[2].voice == 1);
  CHECK(out[2].pitch == 72);

  // 1/1 keeps everything; the duration floor keeps notes audible.
  const auto same = render_concatenation(patterns, 1, 1);
  CHECK(same[1].onset == 480);
  std::vector<std::vector<NoteEvent>> tiny;
  tiny.push_back({{0, 0, 1, 60, 64}});
  CHECK(render_concatenation(tiny, 1, 7)[0].duration == 1);

  CHECK_THROWS_AS(render_concatenation(patterns, 0, 1), Error);
  CHECK_THROWS_AS(render_concatenation(patterns, 3, 2), Error);
  CHECK_THROWS_AS(render_concatenation(patterns, 1, 0), Error);
}

TEST_CASE("glissando interpolates dyad tops") {
  const auto run = glissando(base_dyad(Base::A), base_dyad(Base::C), 240, 8,
                             1000, 5);
  REQUIRE(run.size() == 8);
  CHECK(run.front().pitch == 72);
  CHECK(run.back().pitch == 64);
  CHECK(run.front().onset == 1000);
  CHECK(run.front().duration == 30);
  CHECK(run[1].onset == 1030);
  for (const NoteEvent& e : run) {
    CHECK(e.voice == 5);
    CHECK(e.velocity == 56);
  }
  // Monotone descent from 72 to 64.
  for (std::size_t i = 1; i < run.size(); ++i) {
    CHECK(run[i].pitch <= run[i - 1].pitch);
  }
  CHECK_THROWS_AS(glissando(base_dyad(Base::A), base_dyad(Base::C), 240, 1),
                  Error);
  CHECK_THROWS_AS(glissando(base_dyad(Base::A), base_dyad(Base::C), 0, 8),
                  Error);
}

TEST_CASE("assembled score carries the three layers") {
  const Score score = assemble_score(acgt(), HelixParams{});
  REQUIRE(score.voices.size() == 6);
  CHECK(score.voices[0].name == "helix1");
  CHECK(score.voices[0].role == "strings");
  CHECK(score.voices[1].name == "helix2");
  CHECK(score.voices[2].name == "chimes");
  CHECK(score.voices[2].role == "percussion");
  CHECK(score.voices[3].name == "glockenspiel");
  CHECK(score.voices[4].name == "celesta");
  CHECK(score.voices[5].name == "harp");
  CHECK(score.voices[5].role == "harp");
  CHECK(score.events.size() == 40);  // 8 helix + 8 dyad + 24 glissando

  // Helix layer: 4 steps per voice at 240 ticks, velocity 64.
  const auto helix0 = events_of_voice(score, 0);
  REQUIRE(helix0.size() == 4);
  CHECK(helix0[0].pitch == 67);
  CHECK(helix0[1].onset == 240);
  for (const auto& e : helix0) CHECK(e.velocity == 64);

  // Dyad layer in input order A C G T on the rotating percussion voices.
  struct Expect {
    int voice;
    int low;
    int high;
  };
  const std::vector<Expect> dyads{
      {2, 69, 72}, {3, 60, 64}, {4, 67, 71}, {2, 71, 74}};
  for (std::size_t p = 0; p < dyads.size(); ++p) {
    const auto at = events_of_voice(score, dyads[p].voice);
    std::vector<int> pitches;
    for (const auto& e : at) {
      if (e.onset == static_cast<std::int64_t>(p) * 240) {
        pitches.push_back(e.pitch);
        CHECK(e.velocity == 80);
      }
    }
    std::sort(pitches.begin(), pitches.end());
    CHECK(pitches == std::vector<int>{dyads[p].low, dyads[p].high});
  }

  // Glissando layer: 3 runs of 8 notes on the harp voice.
  const auto harp = events_of_voice(score, 5);
  CHECK(harp.size() == 24);
  for (const auto& e : harp) CHECK(e.velocity == 56);
}

TEST_CASE("assembly with more strands derives transformed voices") {
  HelixParams p;
  p.strand_count = 4;
  const Score score = assemble_score(acgt(), p);
  REQUIRE(score.voices.size() == 8);
  CHECK(score.voices[2].name == "helix3");
  CHECK(score.voices[3].name == "helix4");
  CHECK(score.voices[2].role == "strings");

  // Derived voices are augmented (x2 ticks) and transposed (+12) copies.
  const auto v0 = events_of_voice(score, 0);
  const auto v2 = events_of_voice(score, 2);
  REQUIRE(v2.size() == v0.size());
  for (std::size_t i = 0; i < v2.size(); ++i) {
    CHECK(v2[i].pitch == v0[i].pitch + 12);
    CHECK(v2[i].duration == 480);
    CHECK(v2[i].onset == 2 * v0[i].onset);
  }
  const auto v1 = events_of_voice(score, 1);
  const auto v3 = events_of_voice(score, 3);
  for (std::size_t i = 0; i < v3.size(); ++i) {
    CHECK(v3[i].pitch == v1[i].pitch + 12);
  }
}

TEST_CASE("assembly options add coiling and supercoiling") {
  SonifyOptions opts;
  opts.coiling = true;
  const Score plain = assemble_score(acgt(), HelixParams{});
  const Score coiled = assemble_score(acgt(), HelixParams{}, opts);
  CHECK(coiled.events.size() == plain.events.size() + 8);
  // The appended melody starts after every main-section event has ended.
  std::int64_t main_end = 0;
  for (const auto& e : plain.events) {
    main_end = std::max(main_end, e.onset + e.duration);
  }
  std::size_t appended = 0;
  for (const auto& e : coiled.events) {
    if (e.onset >= main_end) ++appended;
  }
  CHECK(appended >= 8);

  SonifyOptions louder;
  louder.supercoiling = true;
  louder.supercoil_span = 240;
  const Score graded = assemble_score(acgt(), HelixParams{}, louder);
  REQUIRE(graded.events.size() == plain.events.size());
  bool changed = false;
  for (std::size_t i = 0; i < graded.events.size(); ++i) {
    CHECK(graded.events[i].pitch == plain.events[i].pitch);
    if (graded.events[i].velocity != plain.events[i].velocity) changed = true;
  }
  CHECK(changed);
}

TEST_CASE("assembly rejects empty input and bad options") {
  CHECK_THROWS_AS(assemble_score({"empty", {}}, HelixParams{}), Error);
  SonifyOptions opts;
  opts.gliss_steps = 1;
  CHECK_THROWS_AS(assemble_score(acgt(), HelixParams{}, opts), Error);
}

TEST_CASE("assembly is deterministic") {
  const Score a = assemble_score(acgt(), HelixParams{});
  const Score b = assemble_score(acgt(), HelixParams{});
  CHECK(a == b);
}

}  // TEST_SUITE
