// Copyright 2026 The twophoton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "twophoton/cascade.hpp"
#include "twophoton/circuit.hpp"
#include "twophoton/errors.hpp"
#include "twophoton/hom.hpp"
#include "twophoton/optics.hpp"
#include "twophoton/poisson.hpp"

namespace twophoton::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for flag combinations CLI11 cannot express; maps to kUsage.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double parse_real(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc() || end != body.data() + body.size() ||
      !std::isfinite(value)) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return value;
}

double parse_signed_unit(std::string_view text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text);
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  std::vector<double> grid(points);
  for (std::size_t k = 0; k < points; ++k) {
    grid[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
  }
  grid.back() = hi;
  return grid;
}

// Writes `text` to the --out path, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw UsageError("failed writing output file '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read circuit file '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

double phase_flag(const std::string& text, const char* flag) {
  try {
    return circuit::parse_phase_value(text);
  } catch (const circuit::ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.message());
  }
}

struct HomdipOptions {
  double sigma = 1.0;
  std::vector<double> scales{1.0, 0.75, 0.5, 0.25};
  double center_offset = 0.0;
  double tau_min = 0.0;
  double tau_max = 3.0;
  std::size_t points = 200;
  std::size_t nodes = hom::kDefaultQuadratureNodes;
  unsigned threads = 0;
  std::string out;
};

struct MziOptions {
  std::string phi_min = "0";
  std::string phi_max = "2*pi";
  std::size_t points = 100;
  double i0 = 1.0;
  std::string out;
};

struct CascadeOptions {
  std::string hypothesis = "independent";
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string out;
};

struct PoissonOptions {
  std::optional<double> mean;
  std::optional<double> epsilon;
  std::size_t n_max = 20;
  std::string out;
};

struct RunOptions {
  std::string file;
  std::vector<std::string> binds;
  std::string input;
  std::string out;
};

int run_homdip(const HomdipOptions& o, std::ostream& out) {
  if (!(o.tau_max > o.tau_min)) throw UsageError("--tau-max must exceed --tau-min");
  std::vector<hom::SpectralProfile> profiles;
  for (const double s : o.scales) profiles.emplace_back(o.sigma, s, o.center_offset);
  const auto taus = linspace(o.tau_min, o.tau_max, o.points);
  const hom::DipCurve curve = hom::dip_curve(taus, profiles, o.nodes, o.threads);

  std::string text = "tau,scale,r_ab\n";
  for (const auto& series : curve.series) {
    for (std::size_t k = 0; k < curve.taus.size(); ++k) {
      text += format_number(curve.taus[k]) + "," + format_number(series.profile.scale()) + "," +
              format_number(series.values[k]) + "\n";
    }
  }
  emit(o.out, text, out);
  return kOk;
}

int run_mzi(const MziOptions& o, std::ostream& out) {
  const double lo = phase_flag(o.phi_min, "--phi-min");
  const double hi = phase_flag(o.phi_max, "--phi-max");
  if (!(hi > lo)) throw UsageError("--phi-max must exceed --phi-min");
  const Intensity i0(o.i0);
  std::string text = "phi,i_alpha,i_beta\n";
  for (const double phi : linspace(lo, hi, o.points)) {
    const auto [a, b] = hom::mzi_intensities(phi, i0);
    text += format_number(phi) + "," + format_number(a.value()) + "," +
            format_number(b.value()) + "\n";
  }
  emit(o.out, text, out);
  return kOk;
}

int run_cascade(const CascadeOptions& o, std::ostream& out) {
  const auto h = cascade::parse_hypothesis(o.hypothesis);
  if (!h) {
    std::string valid;
    for (const auto known : cascade::kAllHypotheses) {
      if (!valid.empty()) valid += ", ";
      valid += cascade::name(known);
    }
    throw UsageError("unknown hypothesis '" + o.hypothesis + "'; valid names: " + valid);
  }
  const cascade::CoincidenceTally tally = cascade::simulate_cascade(*h, o.trials, o.seed, o.threads);
  const cascade::CascadeExpectation expected = cascade::expected_cascade(*h);

  json report;
  report["hypothesis"] = cascade::name(*h);
  report["trials"] = tally.trials;
  report["seed"] = o.seed;
  json singles = json::object();
  for (std::size_t d = 0; d < cascade::kDetectorCount; ++d) {
    const auto det = static_cast<cascade::Detector>(d);
    singles[std::string(cascade::detector_label(det))] = {
        {"count", tally.singles[d]},
        {"rate", tally.single_rate(det)},
        {"expected", expected.singles[d]},
    };
  }
  report["singles"] = singles;
  for (std::size_t p = 0; p < cascade::kPairCount; ++p) {
    const std::string label(cascade::pair_label(p));
    report["pair_" + label] = tally.pair_counts[p];
    report["rate_" + label] = tally.pair_rate(p);
    report["expected_" + label] = expected.pairs[p];
  }
  emit(o.out, report.dump(2) + "\n", out);
  return kOk;
}

int run_poisson(const PoissonOptions& o, std::ostream& out) {
  if (o.mean.has_value() == o.epsilon.has_value()) {
    throw UsageError("give exactly one of --mean or --epsilon");
  }
  json report;
  if (o.mean) {
    const poisson::PoissonReport r = poisson::poisson_stats(*o.mean, o.n_max);
    report["mean"] = r.mean;
    report["n_max"] = o.n_max;
    report["pmf"] = r.pmf;
    report["tail"] = r.tail;
    report["p3_over_p2"] = r.pmf[3] / r.pmf[2];
    report["contamination"] = r.contamination;
  } else {
    const double mu = poisson::recommend_mean_photon(*o.epsilon);
    report["epsilon"] = *o.epsilon;
    report["recommended_mean"] = mu;
    report["contamination"] = poisson::contamination(mu);
  }
  emit(o.out, report.dump(2) + "\n", out);
  return kOk;
}

int run_circuit(const RunOptions& o, std::ostream& out) {
  const std::string source = read_file(o.file);
  const circuit::CircuitAST ast = circuit::parse(source);

  circuit::Bindings bindings;
  for (const auto& bind : o.binds) {
    const auto eq = bind.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--bind expects name=value, got '" + bind + "'");
    }
    bindings[bind.substr(0, eq)] = phase_flag(bind.substr(eq + 1), "--bind");
  }

  std::vector<Amplitude> amplitudes;
  if (o.input.empty()) {
    amplitudes.assign(ast.mode_count, Amplitude{});
    amplitudes[0] = 1.0;
  } else {
    std::stringstream ss(o.input);
    for (std::string item; std::getline(ss, item, ',');) amplitudes.push_back(parse_complex(item));
  }
  const FieldVector input(std::move(amplitudes));
  const TransferMatrix t = circuit::compile(ast, bindings);
  const FieldVector output = apply(t, input);

  auto fields = [](const FieldVector& f) {
    json arr = json::array();
    for (const auto& a : f.amplitudes()) arr.push_back({{"re", a.real()}, {"im", a.imag()}});
    return arr;
  };
  json report;
  report["modes"] = ast.mode_count;
  json bound = json::object();
  for (const auto& [name, value] : bindings) bound[name] = value;
  report["bindings"] = bound;
  report["input"] = fields(input);
  report["output"] = fields(output);
  json inten = json::array();
  for (const Intensity i : intensities(output)) inten.push_back(i.value());
  report["intensities"] = inten;
  report["total_intensity_in"] = input.total_intensity();
  report["total_intensity_out"] = output.total_intensity();
  emit(o.out, report.dump(2) + "\n", out);
  return kOk;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty amplitude");
  if (text.back() != 'i' && text.back() != 'j') return {parse_real(text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_signed_unit(body)};
  return {parse_real(body.substr(0, split)), parse_signed_unit(body.substr(split))};
}

std::string format_number(double value) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.16e", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-photon beam-splitter interferometry toolkit", "twophoton"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  HomdipOptions homdip;
  auto* homdip_cmd =
      app.add_subcommand("homdip", "Spectrally averaged coincidence dip R(tau); CSV tau,scale,r_ab");
  homdip_cmd->add_option("--sigma", homdip.sigma, "Detuning standard deviation (Hz); tau is in units of 1/sigma when 1")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  homdip_cmd->add_option("--scales", homdip.scales, "Comma-separated bandwidth scale factors in (0, 1]")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  homdip_cmd->add_option("--fc", homdip.center_offset, "Detuning center offset f_c (Hz)")
      ->capture_default_str();
  homdip_cmd->add_option("--tau-min", homdip.tau_min, "First delay (s)")->capture_default_str();
  homdip_cmd->add_option("--tau-max", homdip.tau_max, "Last delay (s)")->capture_default_str();
  homdip_cmd->add_option("--points", homdip.points, "Delay grid points (>= 2)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}));
  homdip_cmd->add_option("--nodes", homdip.nodes, "Minimum Gauss-Hermite nodes (>= 16); raised automatically for large delays")
      ->capture_default_str()
      ->check(CLI::Range(hom::kMinQuadratureNodes, hom::kMaxQuadratureNodes));
  homdip_cmd->add_option("--threads", homdip.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  homdip_cmd->add_option("--out", homdip.out, "Output path (default: standard output)");

  MziOptions mzi;
  auto* mzi_cmd = app.add_subcommand("mzi", "Mach-Zehnder output intensities over a phase sweep; CSV phi,i_alpha,i_beta");
  mzi_cmd->add_option("--phi-min", mzi.phi_min, "Sweep start (radians; accepts pi/2, 0.5*pi)")
      ->capture_default_str();
  mzi_cmd->add_option("--phi-max", mzi.phi_max, "Sweep end (radians)")->capture_default_str();
  mzi_cmd->add_option("--points", mzi.points, "Sweep points (>= 2)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}));
  mzi_cmd->add_option("--i0", mzi.i0, "Input intensity I_0")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  mzi_cmd->add_option("--out", mzi.out, "Output path (default: standard output)");

  CascadeOptions cas;
  auto* cascade_cmd = app.add_subcommand("cascade", "Monte Carlo cascaded beam-splitter coincidences; JSON report");
  cascade_cmd->add_option("--hypothesis", cas.hypothesis, "First-splitter routing: bunching, independent or antibunching")
      ->capture_default_str();
  cascade_cmd->add_option("--trials", cas.trials, "Number of two-photon trials (>= 1)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cascade_cmd->add_option("--seed", cas.seed, "Master seed")->capture_default_str();
  cascade_cmd->add_option("--threads", cas.threads, "Worker threads (0 = all cores); does not change results")
      ->capture_default_str();
  cascade_cmd->add_option("--out", cas.out, "Output path (default: standard output)");

  PoissonOptions poi;
  auto* poisson_cmd = app.add_subcommand("poisson", "Poisson photon-number report (--mean) or recommended mean (--epsilon); JSON");
  auto* mean_opt = poisson_cmd->add_option("--mean", poi.mean, "Mean photon number mu > 0")
                       ->check(CLI::PositiveNumber);
  auto* eps_opt = poisson_cmd->add_option("--epsilon", poi.epsilon, "Tolerated P(n>=3)/P(n>=2), in (0, 1)")
                      ->check(CLI::Range(0.0, 1.0));
  mean_opt->excludes(eps_opt);
  poisson_cmd->add_option("--n-max", poi.n_max, "Largest n listed in the pmf (>= 3)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{3}, std::size_t{100'000}));
  poisson_cmd->add_option("--out", poi.out, "Output path (default: standard output)");

  RunOptions runo;
  auto* run_cmd = app.add_subcommand("run", "Compile a .circ circuit and apply it to an input field; JSON");
  run_cmd->add_option("file", runo.file, "Circuit file")->required();
  run_cmd->add_option("--bind", runo.binds, "Phase variable binding name=value (repeatable; value accepts pi/2)");
  run_cmd->add_option("--input", runo.input, "Comma-separated input amplitudes, e.g. 1,0 or 0.5+0.5i,0 (default: 1 on mode 0)");
  run_cmd->add_option("--out", runo.out, "Output path (default: standard output)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*homdip_cmd) return run_homdip(homdip, out);
    if (*mzi_cmd) return run_mzi(mzi, out);
    if (*cascade_cmd) return run_cascade(cas, out);
    if (*poisson_cmd) return run_poisson(poi, out);
    if (*run_cmd) return run_circuit(runo, out);
  } catch (const circuit::ParseError& e) {
    err << runo.file << ":" << e.line() << ":" << e.column() << ": error: " << e.message();
    if (!e.offending_token().empty()) err << " (at '" << e.offending_token() << "')";
    err << "\n";
    return kParseError;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace twophoton::cli
