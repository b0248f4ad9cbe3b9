// Copyright 2026 porac authors
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

// Command-line front end: bounds and strategy values for the generalized
// parity-oblivious communication games.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure (a
// parity-obliviousness check above 1e-8).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "porac/entangled.hpp"
#include "porac/fourier.hpp"
#include "porac/game.hpp"
#include "porac/interferometer.hpp"
#include "porac/ontic.hpp"
#include "porac/quantum.hpp"
#include "porac/report.hpp"
#include "porac/search.hpp"
#include "porac/seesaw.hpp"

namespace {

using namespace porac;

constexpr double kPoGate = 1e-8;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int emit(const GameReport& report, const std::string& out_path) {
  const std::string text = report.to_json_string();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot open --out path '" << out_path << "'\n";
      return 1;
    }
    f << text;
  }
  return report.worst_po_violation() > kPoGate ? 2 : 0;
}

int emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot open --out path '" << out_path << "'\n";
      return 1;
    }
    f << text;
  }
  return 0;
}

std::string encode_to_string(const std::vector<int>& encode) {
  std::ostringstream out;
  out << "encode=[";
  for (std::size_t i = 0; i < encode.size(); ++i)
    out << encode[i] << (i + 1 == encode.size() ? "" : ",");
  out << "]";
  return out.str();
}

void add_encoding_po_checks(GameReport& report, const EncodingSet& enc, const Game& game) {
  for (std::uint32_t s : game.parity_set.elements) {
    Matrix diff(enc.dim, enc.dim);
    for (std::uint32_t x = 0; x < game.inputs(); ++x) {
      const double sign = (std::popcount(s & x) & 1) ? -1.0 : 1.0;
      diff += cdouble(sign) * enc.states[x];
    }
    report.po_checks.push_back({"encoding s=" + BitString(game.n, s).to_string(),
                                diff.max_abs()});
  }
}

int run_bounds(int n, int g, const std::string& mode_flag, std::uint64_t budget,
               std::uint64_t seed, const std::string& out_path) {
  Stopwatch watch;
  Game game(n, g);
  GameReport report;
  report.n = n;
  report.g = g;
  report.pnc = pnc_bound(n, g);
  report.provenance.emplace_back("pnc_bound", "analytic");

  const bool want_search = mode_flag != "auto" || n <= 4;
  if (want_search && n <= 4) {
    const SearchMode mode = mode_flag == "local"        ? SearchMode::local
                            : mode_flag == "exhaustive" ? SearchMode::exhaustive
                            : n <= 3                    ? SearchMode::exhaustive
                                                        : SearchMode::local;
    Stopwatch search_watch;
    SearchResult res = search_po_deterministic(game, mode, budget, seed);
    GameReport::ClassicalSearch cs;
    cs.mode = mode == SearchMode::exhaustive ? "exhaustive" : "local";
    cs.value = res.value;
    cs.strategy = encode_to_string(res.best.encode);
    report.classical_search = cs;
    report.provenance.emplace_back(
        "classical_search.value",
        mode == SearchMode::exhaustive
            ? "exhaustive"
            : "local(seed=" + std::to_string(seed) + ",budget=" + std::to_string(budget) + ")");
    const int message_count = res.best.decode.message_count;
    const PoCheckResult po =
        po_satisfied(res.best.channel(message_count), game.parity_set, 0.0);
    report.po_checks.push_back({"classical best strategy", po.max_violation});
    report.timings.emplace_back("classical_search", search_watch.seconds());
  }
  report.timings.emplace_back("total", watch.seconds());
  return emit(report, out_path);
}

int run_quantum(int n, int g, const std::string& method, const std::string& variant,
                std::size_t dim, int restarts, int max_iter, double tol, std::uint64_t seed,
                const std::string& out_path) {
  Stopwatch watch;
  Game game(n, g);
  GameReport report;
  report.n = n;
  report.g = g;
  report.pnc = pnc_bound(n, g);
  report.provenance.emplace_back("pnc_bound", "analytic");

  if (method == "explicit") {
    const Variant43 v = variant == "omega" ? Variant43::omega_reference : Variant43::po_exact;
    const ObservableFamily fam = build_family(n, g, v);
    const EncodingSet enc = states_from_family_unchecked(fam, game);
    const std::vector<Matrix> bobs = canonical_bob_observables(fam);
    QuantumStrategy strat{enc, measurements_from_observables(bobs)};
    const double value = success_probability(strat, game);
    const DeltaResult delta = assemble_delta(game, fam, bobs);

    GameReport::Quantum q;
    q.method = n == 4 && g == 3 ? "explicit(" + variant + ")" : "explicit";
    q.value = value;
    q.margin_over_pnc = value - to_double(report.pnc);
    report.quantum = q;
    report.delta_trace = delta.trace;
    report.provenance.emplace_back("quantum.value", "analytic");
    report.provenance.emplace_back("delta_trace", "analytic");
    add_encoding_po_checks(report, enc, game);
  } else if (method == "seesaw") {
    SeesawOptions opt;
    opt.dim = dim;
    opt.restarts = restarts;
    opt.max_iter = max_iter;
    opt.tol = tol;
    opt.seed = seed;
    Stopwatch ss_watch;
    const SeesawResult res = seesaw(game, opt);
    report.timings.emplace_back("seesaw", ss_watch.seconds());

    GameReport::Quantum q;
    q.method = "seesaw";
    q.value = res.value;
    q.margin_over_pnc = res.value - to_double(report.pnc);
    report.quantum = q;
    report.provenance.emplace_back("quantum.value",
                                   "seesaw(seed=" + std::to_string(seed) +
                                       ",restarts=" + std::to_string(restarts) + ")");
    add_encoding_po_checks(report, res.best.encodings, game);
  } else {
    std::cerr << "error: --method must be explicit or seesaw\n";
    return 1;
  }
  report.timings.emplace_back("total", watch.seconds());
  return emit(report, out_path);
}

int run_ontic(int n, int g, const std::string& out_path) {
  Stopwatch watch;
  GameReport report;
  report.n = n;
  report.g = g;
  report.pnc = pnc_bound(n, g);
  report.provenance.emplace_back("pnc_bound", "analytic");

  CorrelationSpec spec;
  long long dim;
  if (n == 3 && g == 3) {
    spec = delta3_spec();
    dim = 4;
  } else if (n == 4 && g == 4) {
    spec = delta44_spec();
    dim = 8;
  } else if (n == 4 && g == 3) {
    spec = delta43_spec();
    dim = 4;
  } else {
    std::cerr << "error: ontic supports (3,3), (4,4) and (4,3)\n";
    return 1;
  }
  const OnticResult res = ontic_max(spec);
  report.ontic_trace_bound = to_double(res.max * Rational(dim));
  std::ostringstream witness;
  for (const auto& [label, sign] : res.witness)
    witness << label << "=" << (sign > 0 ? "+1 " : "-1 ");
  report.provenance.emplace_back("ontic_trace_bound",
                                 "vertex-enumeration; witness " + witness.str());
  report.timings.emplace_back("total", watch.seconds());
  return emit(report, out_path);
}

int run_verify_po(int n, int g, const std::string& variant, const std::string& out_path) {
  Stopwatch watch;
  Game game(n, g);
  GameReport report;
  report.n = n;
  report.g = g;
  report.pnc = pnc_bound(n, g);

  const Variant43 v = variant == "omega" ? Variant43::omega_reference : Variant43::po_exact;
  const ObservableFamily fam = build_family(n, g, v);
  const EncodingSet enc = states_from_family_unchecked(fam, game);
  add_encoding_po_checks(report, enc, game);
  report.provenance.emplace_back("po_checks", "operator identities, explicit encodings");
  report.timings.emplace_back("total", watch.seconds());
  return emit(report, out_path);
}

int run_entangled(const std::string& out_path) {
  Stopwatch watch;
  Game game(3, 3);
  GameReport report;
  report.n = 3;
  report.g = 3;
  report.pnc = pnc_bound(3, 3);
  report.provenance.emplace_back("pnc_bound", "analytic");

  const BipartiteState shared = phi_plus_pair();
  const ObservableFamily fam = build_family(3, 3);
  const std::vector<Matrix> bobs = canonical_bob_observables(fam);

  const BellResult bell = bell_value(shared, fam, bobs);
  report.bell = GameReport::Bell{bell.expectation, bell.success};
  report.provenance.emplace_back("bell.expectation", "analytic");

  const MeasurementSet ms = measurements_from_observables(bobs);
  const TwoBitResult proto = two_bit_protocol(shared, fam, ms);
  GameReport::Quantum q;
  q.method = "entangled-two-bit";
  q.value = proto.success;
  q.margin_over_pnc = proto.success - to_double(report.pnc);
  report.quantum = q;
  report.provenance.emplace_back("quantum.value", "analytic");

  const PoCheckResult po = po_satisfied(proto.induced, game.parity_set, 1e-12);
  report.po_checks.push_back({"two-bit message channel", po.max_violation});
  const EncodingSet steered = steered_encoding(shared, fam, game);
  report.po_checks.push_back(
      {"steered encodings", encoding_po_violation(steered, game.parity_set)});

  report.timings.emplace_back("total", watch.seconds());
  return emit(report, out_path);
}

int run_interferometer(const std::string& out_path) {
  Stopwatch watch;
  Game game(3, 3);
  GameReport report;
  report.n = 3;
  report.g = 3;
  report.pnc = pnc_bound(3, 3);

  const MatchResult match = match_encodings(reference_settings(), game);
  report.po_checks.push_back({"prepared states vs encodings", 1.0 - match.min_fidelity});
  std::ostringstream bij;
  for (const auto& [setting, mask] : match.bijection)
    bij << "s" << setting << "->" << BitString(3, mask).to_string() << " ";
  report.provenance.emplace_back("bijection", bij.str());
  report.provenance.emplace_back("match", "exhaustive parity-consistent search");
  report.timings.emplace_back("total", watch.seconds());
  return emit(report, out_path);
}

int run_table(int n_max, const std::string& out_path) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (int n = 2; n <= n_max; ++n) {
    for (int g = 2; g <= n; ++g) {
      const Rational pnc = pnc_bound(n, g);
      std::optional<double> value;
      std::string method, provenance = "analytic";
      if (g == n && n >= 3) {
        Game game(n, g);
        const QuantumStrategy strat = explicit_strategy(game);
        value = success_probability(strat, game);
        method = "explicit";
      } else if (n == 4 && g == 3) {
        Game game(n, g);
        const QuantumStrategy strat = explicit_strategy(game);
        value = success_probability(strat, game);
        method = "explicit";
      }
      out << csv_row(n, g, pnc, value, method, provenance) << "\n";
    }
  }
  return emit_text(out.str(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized parity-oblivious communication games: bounds, explicit quantum "
               "strategies, see-saw optimisation, and verification tools"};
  app.require_subcommand(1);

  int n = 3, g = 3, n_max = 8;
  std::size_t dim = 0;
  int restarts = 20, max_iter = 200;
  double tol = 1e-10;
  std::uint64_t seed = 0, budget = 100000;
  std::string method = "explicit", variant = "po", mode = "auto";
  std::string format = "json", out_path;

  auto add_common = [&](CLI::App* cmd, bool with_game) {
    if (with_game) {
      cmd->add_option("--n", n, "string length")->check(CLI::Range(2, 10));
      cmd->add_option("--g", g, "parity-set weight threshold")->check(CLI::Range(2, 10));
    }
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "write output to this path instead of stdout");
  };

  CLI::App* bounds = app.add_subcommand("bounds", "noncontextual bound and classical search");
  add_common(bounds, true);
  bounds->add_option("--budget", budget, "local-search proposal budget");
  bounds->add_option("--seed", seed, "search seed");
  bounds->add_option("--mode", mode, "search mode")->check(CLI::IsMember({"auto", "exhaustive", "local"}));

  CLI::App* quantum = app.add_subcommand("quantum", "quantum strategy value");
  add_common(quantum, true);
  quantum->add_option("--method", method, "explicit or seesaw")
      ->check(CLI::IsMember({"explicit", "seesaw"}));
  quantum->add_option("--variant", variant, "(4,3) family variant")
      ->check(CLI::IsMember({"po", "omega"}));
  quantum->add_option("--dim", dim, "Hilbert dimension (default 2^{g-1})");
  quantum->add_option("--restarts", restarts, "see-saw restarts");
  quantum->add_option("--max-iter", max_iter, "see-saw iterations per restart");
  quantum->add_option("--tol", tol, "see-saw convergence tolerance");
  quantum->add_option("--seed", seed, "see-saw seed");

  CLI::App* ontic = app.add_subcommand("ontic", "deterministic +/-1 assignment maximum");
  add_common(ontic, true);

  CLI::App* verify = app.add_subcommand("verify-po", "parity-oblivious operator identities");
  add_common(verify, true);
  verify->add_option("--variant", variant, "(4,3) family variant")
      ->check(CLI::IsMember({"po", "omega"}));

  CLI::App* entangled = app.add_subcommand("entangled", "entanglement-assisted 3-bit protocol");
  add_common(entangled, false);

  CLI::App* interferometer =
      app.add_subcommand("interferometer", "device settings vs explicit encodings");
  add_common(interferometer, false);

  CLI::App* table = app.add_subcommand("table", "CSV sweep over (n, g)");
  table->add_option("--n-max", n_max, "largest n")->check(CLI::Range(2, 9));
  table->add_option("--out", out_path, "write output to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (bounds->parsed()) {
      if (mode == "exhaustive" && n > 3) {
        std::cerr << "error: exhaustive search supports n <= 3; use --mode local\n";
        return 1;
      }
      if (mode == "local" && n > 4) {
        std::cerr << "error: the strategy searches support n <= 4\n";
        return 1;
      }
      return run_bounds(n, g, mode, budget, seed, out_path);
    }
    if (quantum->parsed())
      return run_quantum(n, g, method, variant, dim, restarts, max_iter, tol, seed, out_path);
    if (ontic->parsed()) return run_ontic(n, g, out_path);
    if (verify->parsed()) return run_verify_po(n, g, variant, out_path);
    if (entangled->parsed()) return run_entangled(out_path);
    if (interferometer->parsed()) return run_interferometer(out_path);
    if (table->parsed()) return run_table(n_max, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
