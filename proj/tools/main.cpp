#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidsong/braid.hpp"
#include "braidsong/errors.hpp"
#include "braidsong/homotopy.hpp"
#include "braidsong/knot.hpp"
#include "braidsong/midi.hpp"
#include "braidsong/skeleton.hpp"
#include "braidsong/sonify.hpp"
#include "config.hpp"

using namespace braidsong;

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError:
      return 3;
    case ErrorCode::DegenerateProjection:
      return 4;
    default:
      return 2;  // input error
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto parts = split_commas(text);
  try {
    if (parts.size() != 2) throw std::invalid_argument(text);
    return {std::stoi(parts[0]), std::stoi(parts[1])};
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError,
         "expected two component indices as i,j; got '" + text + "'");
  }
}

// Jones polynomial and knottedness verdict, shared by braid and gesture.
void report_diagram(const LinkDiagram& d, int writhe_value) {
  if (static_cast<int>(d.crossings.size()) > kMaxBracketCrossings) {
    std::cout << "jones: skipped (more than " << kMaxBracketCrossings
              << " crossings)\n";
    return;
  }
  std::cout << "jones: " << jones(d, writhe_value).str() << "\n";
  if (certify_knotted(d, writhe_value) == Knottedness::Knotted) {
    std::cout << "verdict: Knotted\n";
  } else {
    std::cout << "verdict: PossiblyUnknot (the Jones value matches the "
                 "unlink's; that is necessary, not sufficient, for an "
                 "unknotted curve)\n";
  }
}

SampledCurve single_arrow_curve(const std::string& path) {
  const Gesture g = load_gesture(read_text_file(path));
  require_valid(validate_gesture(g));
  if (g.skeleton.arrows.size() != 1) {
    fail(ErrorCode::WrongSkeleton,
         "'" + path + "' must contain exactly one arrow");
  }
  return g.arrow_map.at(g.skeleton.arrows.front().id);
}

int run(int argc, char** argv) {
  CLI::App app{
      "musical gestures: braid analysis, knot certificates and DNA "
      "sonification"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  double tolerance = 1e-6;
  auto* opt_config = app.add_option(
      "--config", config_path, "key=value configuration file");
  auto* opt_seed = app.add_option(
      "--seed", seed, "seed for projection perturbation (default 0)");
  auto* opt_tolerance = app.add_option(
      "--tolerance", tolerance, "numeric tolerance (default 1e-6)");

  // --- sonify ---
  auto* cmd_sonify =
      app.add_subcommand("sonify", "render a FASTA sequence to MIDI");
  std::string fasta_path;
  std::string out_path;
  std::string csv_path;
  bool skip_invalid = false;
  cmd_sonify->add_option("input", fasta_path, "FASTA file")->required();
  auto* opt_out = cmd_sonify->add_option(
      "-o,--output", out_path, "output .mid path (default: input with .mid)");
  auto* opt_csv =
      cmd_sonify->add_option("--csv", csv_path, "write helix lines as CSV");
  cmd_sonify->add_flag("--skip-invalid", skip_invalid,
                       "drop characters outside ACGT instead of failing");
  int strands = 2;
  int samples_per_turn = 16;
  int pitch_low = 55;
  int pitch_high = 79;
  int step_ticks = 240;
  int octave_shift = 0;
  int gliss_steps = 8;
  int coiling_period = 3;
  long long supercoil_span = 960;
  bool diatonic = false;
  bool gliss_diatonic = false;
  bool coiling = false;
  bool supercoiling = false;
  auto* opt_strands =
      cmd_sonify->add_option("--strands", strands, "helix voices, 2..4");
  auto* opt_turn = cmd_sonify->add_option("--samples-per-turn",
                                          samples_per_turn, "steps per turn");
  auto* opt_low = cmd_sonify->add_option("--pitch-low", pitch_low,
                                         "bottom of the helix pitch range");
  auto* opt_high = cmd_sonify->add_option("--pitch-high", pitch_high,
                                          "top of the helix pitch range");
  auto* opt_ticks =
      cmd_sonify->add_option("--step-ticks", step_ticks, "ticks per step");
  auto* opt_shift = cmd_sonify->add_option("--octave-shift", octave_shift,
                                           "octave shift of the dyad table");
  auto* opt_gsteps = cmd_sonify->add_option("--gliss-steps", gliss_steps,
                                            "notes per glissando");
  auto* opt_period = cmd_sonify->add_option("--coiling-period", coiling_period,
                                            "pivot return period");
  auto* opt_span = cmd_sonify->add_option("--supercoil-span", supercoil_span,
                                          "ticks per loudness span");
  auto* opt_diatonic = cmd_sonify->add_flag(
      "--diatonic", diatonic, "snap helix pitches to the C major scale");
  auto* opt_gdiatonic = cmd_sonify->add_flag(
      "--gliss-diatonic", gliss_diatonic, "snap glissando runs likewise");
  auto* opt_coiling =
      cmd_sonify->add_flag("--coiling", coiling, "append the coiling melody");
  auto* opt_supercoiling = cmd_sonify->add_flag(
      "--supercoiling", supercoiling, "apply the loudness cycle");

  // --- braid ---
  auto* cmd_braid = app.add_subcommand("braid", "analyze a braid word");
  std::string word_text;
  cmd_braid->add_option("word", word_text, "word text, e.g. \"B3: 1 -2 1 -2\"")
      ->required();

  // --- gesture ---
  auto* cmd_gesture = app.add_subcommand(
      "gesture", "validate, close, project and classify a gesture");
  std::string gesture_path;
  std::string tour_text;
  std::string pair_text;
  cmd_gesture->add_option("input", gesture_path, "gesture document")
      ->required();
  auto* opt_tour = cmd_gesture->add_option(
      "--tour", tour_text,
      "comma-separated arrow ids (default: all arrows in order)");
  auto* opt_pair = cmd_gesture->add_option(
      "--pair", pair_text, "component indices i,j for the linking number");

  // --- homotopy ---
  auto* cmd_homotopy = app.add_subcommand(
      "homotopy", "linear hypergestures and the associator check");
  std::vector<std::string> endpoint_paths;
  std::vector<std::string> assoc_paths;
  std::string hyper_out;
  int steps = 5;
  cmd_homotopy
      ->add_option("gestures", endpoint_paths, "two gesture documents g1 g2")
      ->expected(0, 2);
  auto* opt_steps =
      cmd_homotopy->add_option("--steps", steps, "step count (default 5)");
  auto* opt_assoc = cmd_homotopy
                        ->add_option("--assoc", assoc_paths,
                                     "three single-arrow gesture documents "
                                     "f g h, chained end-to-start")
                        ->expected(3);
  auto* opt_hyper_out = cmd_homotopy->add_option(
      "-o,--output", hyper_out, "hypergesture output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[ParseError]: " << e.what() << "\n";
    return 2;
  }

  cli::Config cfg;
  if (opt_config->count() > 0) {
    cli::apply_config(cfg,
                      cli::parse_config_text(read_text_file(config_path)));
  }
  if (opt_seed->count() > 0) cfg.seed = seed;
  if (opt_tolerance->count() > 0) cfg.tolerance = tolerance;
  if (opt_steps->count() > 0) cfg.steps = steps;
  if (opt_strands->count() > 0) cfg.helix.strand_count = strands;
  if (opt_turn->count() > 0) cfg.helix.samples_per_turn = samples_per_turn;
  if (opt_low->count() > 0) cfg.helix.pitch_low = pitch_low;
  if (opt_high->count() > 0) cfg.helix.pitch_high = pitch_high;
  if (opt_ticks->count() > 0) cfg.helix.step_ticks = step_ticks;
  if (opt_diatonic->count() > 0) cfg.helix.diatonic = diatonic;
  if (opt_shift->count() > 0) cfg.sonify.dyad_octave_shift = octave_shift;
  if (opt_gsteps->count() > 0) cfg.sonify.gliss_steps = gliss_steps;
  if (opt_gdiatonic->count() > 0) cfg.sonify.gliss_diatonic = gliss_diatonic;
  if (opt_coiling->count() > 0) cfg.sonify.coiling = coiling;
  if (opt_period->count() > 0) cfg.sonify.coiling_period = coiling_period;
  if (opt_supercoiling->count() > 0) cfg.sonify.supercoiling = supercoiling;
  if (opt_span->count() > 0) cfg.sonify.supercoil_span = supercoil_span;

  if (*cmd_sonify) {
    const auto seqs = parse_fasta(read_text_file(fasta_path), skip_invalid);
    const DnaSequence& seq = seqs.front();
    const Score score = assemble_score(seq, cfg.helix, cfg.sonify);
    const auto bytes = write_smf(score);
    const std::string mid_path =
        opt_out->count() > 0
            ? out_path
            : std::filesystem::path(fasta_path)
                  .replace_extension(".mid")
                  .string();
    write_text_file(mid_path, std::string(bytes.begin(), bytes.end()));
    const HelixLines lines = helix_lines(cfg.helix, seq.bases.size());
    if (opt_csv->count() > 0) {
      write_text_file(csv_path, export_csv(lines));
    }
    std::cout << "sequence '" << seq.id << "': " << seq.bases.size()
              << " bases";
    if (seqs.size() > 1) {
      std::cout << " (first of " << seqs.size() << " records)";
    }
    std::cout << "\n";
    std::cout << "score: " << score.events.size() << " events on "
              << score.voices.size() << " voices, "
              << lines.unison_steps.size() << " unison steps\n";
    std::cout << "wrote " << mid_path << "\n";
    if (opt_csv->count() > 0) std::cout << "wrote " << csv_path << "\n";
    return 0;
  }

  if (*cmd_braid) {
    const BraidWord w = parse_braid(word_text);
    std::cout << "strands: " << w.strands << "\n";
    std::cout << "reduced: " << format_braid(free_reduce(w)) << "\n";
    std::cout << "permutation: " << permutation(w).format_cycles() << "\n";
    const int wr = writhe(w);
    std::cout << "writhe: " << wr << "\n";
    const int components = closure_components(w);
    std::cout << "components: " << components << "\n";
    const LinkDiagram d = closure_diagram(w);
    report_diagram(d, wr);
    for (int a = 0; a < components; ++a) {
      for (int b = a + 1; b < components; ++b) {
        std::cout << "linking(" << a << "," << b
                  << "): " << linking_number(d, a, b) << "\n";
      }
    }
    return 0;
  }

  if (*cmd_gesture) {
    const Gesture g = load_gesture(read_text_file(gesture_path));
    require_valid(validate_gesture(g));
    std::vector<std::string> tour;
    if (opt_tour->count() > 0) {
      tour = split_commas(tour_text);
    } else {
      for (const Arrow& a : g.skeleton.arrows) tour.push_back(a.id);
    }
    const auto curves = close_gesture(g, tour);
    ProjectionOptions options;
    options.seed = cfg.seed;
    const ProjectionResult res = project_to_diagram(curves, options);
    std::cout << "components: " << curves.size() << "\n";
    std::cout << "crossings: " << res.diagram.crossings.size()
              << " (projection attempt " << res.attempts_used << ")\n";
    std::cout << "writhe: " << res.writhe << "\n";
    report_diagram(res.diagram, res.writhe);
    if (opt_pair->count() > 0) {
      const auto [a, b] = parse_pair(pair_text);
      std::cout << "linking(" << a << "," << b
                << "): " << linking_number(res.diagram, a, b) << "\n";
    }
    return 0;
  }

  // homotopy
  if (opt_assoc->count() > 0) {
    if (!endpoint_paths.empty()) {
      fail(ErrorCode::ParseError,
           "--assoc replaces the two gesture positionals");
    }
    const SampledCurve f = single_arrow_curve(assoc_paths[0]);
    const SampledCurve g = single_arrow_curve(assoc_paths[1]);
    const SampledCurve h = single_arrow_curve(assoc_paths[2]);
    const AssociatorReport report =
        associator_check(f, g, h, cfg.tolerance, 1024);
    std::cout << "reparametrization:";
    for (const auto& [u, v] : report.reparam.knots()) {
      std::cout << " (" << u << " -> " << v << ")";
    }
    std::cout << "\n";
    std::cout << "max deviation: " << std::scientific << std::setprecision(3)
              << report.max_deviation << std::defaultfloat << "\n";
    std::cout << "within tolerance " << cfg.tolerance << ": "
              << (report.ok ? "yes" : "no") << "\n";
    return report.ok ? 0 : 1;
  }
  if (endpoint_paths.size() != 2) {
    fail(ErrorCode::ParseError,
         "expected two gesture documents (or --assoc f g h)");
  }
  const Gesture g1 = load_gesture(read_text_file(endpoint_paths[0]));
  const Gesture g2 = load_gesture(read_text_file(endpoint_paths[1]));
  const Hypergesture h = linear_hypergesture(g1, g2, cfg.steps);
  const std::string out =
      opt_hyper_out->count() > 0 ? hyper_out : "hypergesture.json";
  write_text_file(out, save_hypergesture(h));
  std::cout << "steps: " << h.step_count() << "\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error[" << error_code_name(e.code()) << "]: " << e.what()
              << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error[Internal]: " << e.what() << "\n";
    return 2;
  }
}
