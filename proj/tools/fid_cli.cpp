// fid: batch front end for free FI_d-module computations.
//
// Exit codes: 0 success, 2 usage or parse error, 3 NoStabilization or
// NoExactFit, 4 internal invariant breach.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fid/characters.hpp"
#include "fid/errors.hpp"
#include "fid/free_module.hpp"
#include "fid/json_io.hpp"
#include "fid/oracle.hpp"
#include "fid/pieri.hpp"
#include "fid/stability.hpp"

namespace {

using fid::Error;
using fid::ErrorKind;
using fid::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoFit = 3;
constexpr int kExitInvariant = 4;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoStabilization:
    case ErrorKind::NoExactFit:
      return kExitNoFit;
    case ErrorKind::InvariantBreach:
      return kExitInvariant;
    default:
      return kExitUsage;
  }
}

fid::FreeModuleSpec parse_generator(const std::string& text, int d) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.size() > 3 && s.starts_with("M(") && s.back() == ')') {
    std::size_t used = 0;
    int m = -1;
    try {
      m = std::stoi(s.substr(2, s.size() - 3), &used);
    } catch (const std::exception&) {
    }
    if (m < 0 || used != s.size() - 3)
      throw Error(ErrorKind::InvalidArgument, "bad generator '" + text + "'");
    return fid::FreeModuleSpec::regular(m, d);
  }
  return fid::FreeModuleSpec::irreducible(fid::parse_partition(s), d);
}

fid::DegreeRange parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorKind::InvalidArgument, "range must look like a..b");
  try {
    std::size_t u1 = 0, u2 = 0;
    std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    fid::DegreeRange r{std::stoi(lo, &u1), std::stoi(hi, &u2)};
    if (u1 == lo.size() && u2 == hi.size() && r.first >= 0 && r.last >= r.first) return r;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, "bad or empty range '" + text + "'");
}

std::vector<int> parse_pads(const std::string& text) {
  std::vector<int> pads;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      pads.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad pad list '" + text + "'");
    }
  }
  if (pads.empty()) throw Error(ErrorKind::InvalidArgument, "empty pad list");
  return pads;
}

int default_horizon() {
  if (const char* env = std::getenv("FID_MAX_HORIZON")) {
    try {
      int h = std::stoi(env);
      if (h >= 0) return h;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, "FID_MAX_HORIZON must be a non-negative integer");
  }
  return fid::kDefaultStabilizationHorizon;
}

std::string rationals_tsv(const fid::Polynomial& p) {
  std::string s;
  for (const auto& c : p.monomial_coeffs()) s += "\t" + fid::to_fraction_string(c);
  return s.empty() ? "\t0/1" : s;
}

struct Common {
  int d = 1;
  std::string gen;
  std::string format;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format, bool need_gen = true) {
  cmd->add_option("--d", c.d, "color count d >= 1")->check(CLI::PositiveNumber);
  auto* g = cmd->add_option("--gen", c.gen, "generator: M(k) or a partition like [2,1]");
  if (need_gen) g->required();
  c.format = default_format;
  cmd->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for free FI_d-modules"};
  app.require_subcommand(1);

  Common dim_opts, dec_opts, stab_opts, verify_opts, weight_opts, fit_opts;
  std::string dim_range, stab_lambda, stab_pads, verify_range = "0..8", fit_mode, fit_lambda = "[]",
                                                 fit_window;
  int dec_n = 0, horizon = -1, fit_degree = -1, fit_bases = -1, oracle_max = 6;
  std::vector<std::string> verify_probes;
  bool fit_stdin = false, oracle_mutate = false;
  std::string oracle_format = "tsv";

  auto* dim = app.add_subcommand("dim", "dimension of M(W)_n over a degree range");
  add_common(dim, dim_opts, "tsv");
  dim->add_option("--range", dim_range, "degrees a..b")->required();

  auto* dec = app.add_subcommand("decompose", "irreducible decomposition of M(W)_n");
  add_common(dec, dec_opts, "json");
  dec->add_option("--n", dec_n, "degree")->required()->check(CLI::NonNegativeNumber);

  auto* stab = app.add_subcommand("stabilize", "plateau of c_{lambda, n_1+l, ..., n_d+l}");
  add_common(stab, stab_opts, "tsv");
  stab->add_option("--lambda", stab_lambda, "core partition, e.g. []")->required();
  stab->add_option("--pads", stab_pads, "base pads n_1,...,n_d")->required();
  stab->add_option("--horizon", horizon, "largest shift examined (default 50 or FID_MAX_HORIZON)");

  auto* verify = app.add_subcommand("verify", "stability report: injectivity, generation, plateaus");
  add_common(verify, verify_opts, "json");
  verify->add_option("--probe", verify_probes, "probe as LAMBDA:PADS, e.g. []:1,1");
  verify->add_option("--range", verify_range, "degrees checked for conditions 1 and 2");
  verify->add_option("--horizon", horizon, "largest shift examined");

  auto* weight = app.add_subcommand("weight", "d-weight of M(W)");
  add_common(weight, weight_opts, "tsv");

  auto* fit = app.add_subcommand("fit", "exact fit of a Hilbert function or multiplicity series");
  add_common(fit, fit_opts, "json", false);
  fit->add_option("--mode", fit_mode, "dims or mult")->required()->check(CLI::IsMember({"dims", "mult"}));
  fit->add_option("--lambda", fit_lambda, "partition for --mode mult");
  fit->add_option("--degree", fit_degree, "polynomial degree bound");
  fit->add_option("--bases", fit_bases, "number of exponential bases (dims mode, default d)");
  fit->add_option("--window", fit_window, "degrees a..b used for fitting and validation");
  fit->add_flag("--stdin", fit_stdin, "read {\"series\": {...}} from standard input");

  auto* oracle = app.add_subcommand("oracle-check", "Pieri rule versus character theory");
  oracle->add_option("--max", oracle_max, "bound on |mu| + |a|")->check(CLI::Range(0, fid::kOracleMaxSize));
  oracle->add_option("--format", oracle_format)->check(CLI::IsMember({"json", "tsv"}));
  oracle->add_flag("--mutate", oracle_mutate, "drop one chain from every product (harness self-test)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dim) {
      auto spec = parse_generator(dim_opts.gen, dim_opts.d);
      auto range = parse_range(dim_range);
      if (dim_opts.format == "json") {
        Json rows = Json::array();
        for (int n = range.first; n <= range.last; ++n)
          rows.push_back({{"n", n}, {"dim", fid::dim_at(spec, n).get_str()}});
        std::cout << Json{{"dims", rows}}.dump() << "\n";
      } else {
        std::cout << "n\tdim\n";
        for (int n = range.first; n <= range.last; ++n)
          std::cout << n << "\t" << fid::dim_at(spec, n).get_str() << "\n";
      }
    } else if (*dec) {
      auto spec = parse_generator(dec_opts.gen, dec_opts.d);
      auto d = fid::decompose_at(spec, dec_n);
      if (d.total_dimension() != fid::dim_at(spec, dec_n))
        throw Error(ErrorKind::InvariantBreach, "decomposition dimension mismatch");
      if (dec_opts.format == "json") {
        std::cout << fid::to_json(d).dump() << "\n";
      } else {
        std::cout << "partition\tmultiplicity\n";
        for (const auto& [p, c] : d.terms()) std::cout << fid::format_partition(p) << "\t" << c.get_str() << "\n";
      }
    } else if (*stab) {
      auto spec = parse_generator(stab_opts.gen, stab_opts.d);
      auto plateau = fid::stabilized_padded_multiplicity(spec, fid::parse_partition(stab_lambda),
                                                         parse_pads(stab_pads),
                                                         horizon >= 0 ? horizon : default_horizon());
      if (stab_opts.format == "json") {
        std::cout << fid::to_json(plateau).dump() << "\n";
      } else {
        std::cout << "value\t" << plateau.value.get_str() << "\n"
                  << "onset\t" << plateau.onset << "\n"
                  << "proven_bound\t" << plateau.proven_bound << "\n";
      }
      if (plateau.onset > plateau.proven_bound) {
        std::cerr << "error: plateau onset exceeds the proven stabilization bound\n";
        return kExitInvariant;
      }
    } else if (*verify) {
      auto spec = parse_generator(verify_opts.gen, verify_opts.d);
      std::vector<fid::PaddedLabel> probes;
      for (const auto& p : verify_probes) {
        auto colon = p.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::InvalidArgument, "probe must be LAMBDA:PADS");
        probes.push_back({fid::parse_partition(p.substr(0, colon)), parse_pads(p.substr(colon + 1))});
      }
      auto report = fid::verify_theorem_A(spec, probes, parse_range(verify_range),
                                          horizon >= 0 ? horizon : default_horizon());
      if (verify_opts.format == "json") {
        std::cout << fid::to_json(report).dump() << "\n";
      } else {
        std::cout << "injectivity\t" << (report.injectivity.holds ? "holds" : "fails") << "\n"
                  << "generation\t" << (report.generation.holds ? "holds" : "fails") << "\n";
        for (const auto& p : report.probes)
          std::cout << "plateau\t" << fid::format_partition(p.probe.core) << "\t"
                    << p.plateau.value.get_str() << "\t" << p.plateau.onset << "\n";
      }
      if (!report.all_hold()) return kExitInvariant;
    } else if (*weight) {
      auto spec = parse_generator(weight_opts.gen, weight_opts.d);
      int w = fid::d_weight(spec);
      if (weight_opts.format == "json")
        std::cout << Json{{"d", spec.d}, {"weight", w}}.dump() << "\n";
      else
        std::cout << "weight\t" << w << "\n";
    } else if (*fit) {
      const bool dims = fit_mode == "dims";
      fid::Series series;
      int degree = fit_degree;
      fid::DegreeRange window{};
      int bases = fit_bases > 0 ? fit_bases : fit_opts.d;
      if (fit_stdin) {
        std::string input((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        Json j;
        try {
          j = Json::parse(input);
        } catch (const Json::parse_error& e) {
          throw Error(ErrorKind::InvalidArgument, std::string("stdin is not JSON: ") + e.what());
        }
        series = fid::series_from_json(j);
        if (series.empty()) throw Error(ErrorKind::InsufficientPoints, "empty series");
        if (degree < 0) degree = dims ? 0 : fit_opts.d - 1;
        window = fit_window.empty() ? fid::DegreeRange{series.begin()->first, series.rbegin()->first}
                                    : parse_range(fit_window);
      } else {
        if (fit_opts.gen.empty()) throw Error(ErrorKind::InvalidArgument, "--gen or --stdin required");
        auto spec = parse_generator(fit_opts.gen, fit_opts.d);
        if (degree < 0) degree = dims ? spec.m : spec.d - 1;
        if (fit_window.empty()) {
          int start = dims ? fid::default_window_start(spec.m, spec.d, degree)
                           : fid::default_window_start(spec.m, spec.d, degree, fid::parse_partition(fit_lambda));
          int points = dims ? bases * (degree + 1) : degree + 2;
          window = {start, start + points + 4};
        } else {
          window = parse_range(fit_window);
        }
        if (dims) {
          for (int n = window.first; n <= window.last; ++n) series[n] = fid::dim_at(spec, n);
        } else {
          series = fid::multiplicity_series(spec, fid::parse_partition(fit_lambda), window).values;
        }
      }
      if (dims) {
        auto result = fid::fit_exponential_polynomial(series, bases, degree, window);
        if (fit_opts.format == "json") {
          std::cout << fid::to_json(result).dump() << "\n";
        } else {
          for (int i = 0; i < result.function.bases(); ++i)
            std::cout << "p" << i + 1 << rationals_tsv(result.function.parts[i]) << "\n";
        }
      } else {
        auto result = fid::fit_polynomial(series, degree, window);
        if (fit_opts.format == "json")
          std::cout << fid::to_json(result).dump() << "\n";
        else
          std::cout << "p" << rationals_tsv(result.function) << "\n";
      }
    } else if (*oracle) {
      fid::PieriFunction engine;
      if (oracle_mutate) {
        engine = [](const fid::Partition& mu, const fid::Composition& a) {
          auto d = fid::pieri_product(mu, a);
          if (d.terms().size() > 1) d.add(d.terms().rbegin()->first, -1);
          return d;
        };
      }
      auto result = fid::oracle_sweep(oracle_max, 3, engine);
      if (oracle_format == "json") {
        std::cout << Json{{"pass", result.pass},
                          {"cases", result.cases},
                          {"counterexample", result.counterexample ? Json(*result.counterexample) : Json()}}
                         .dump()
                  << "\n";
      } else if (result.pass) {
        std::cout << "PASS\t" << result.cases << " cases\n";
      } else {
        std::cout << "FAIL\t" << *result.counterexample << "\n";
      }
      return result.pass ? kExitOk : kExitInvariant;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitOk;
}
