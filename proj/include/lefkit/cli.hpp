#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lefkit/dsl.hpp"
#include "lefkit/errors.hpp"
#include "lefkit/fibration.hpp"
#include "lefkit/mapping_class.hpp"
#include "lefkit/obstruction.hpp"
#include "lefkit/presentation.hpp"

// Command-line front end. Exit codes: 0 success, 1 domain error, 2
// usage or parse error.

namespace lefkit {

inline constexpr std::int64_t kMaxN = 10'000;

struct RunConfig {
  enum class Command { Pi1, H1, Invariants, Validate, Obstruct, Bn, FiberSum };
  enum class Format { Text, KeyValue };

  Command command = Command::Invariants;
  std::string builtin;  // "matsumoto" or "bn"
  std::string file;     // factorization file; exclusive with builtin
  std::string file2;    // second summand for fibersum
  std::string twist = "1";  // fibersum twist literal
  std::int64_t n = 0;       // bn twist parameter (0 = unset)
  std::int64_t n_begin = 0, n_end = 0;  // inclusive sweep range (0 = unset)
  std::string show;  // bn: "h1" prints bare abelian invariants
  bool cover = false;
  bool reverse = false;
  bool hyperelliptic = false;  // assert hyperellipticity for genus != 2
  int passes = 8;
  Format format = Format::Text;
  int verbosity = 0;
};

namespace detail {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check_n(std::int64_t n) {
  if (n < 1 || n > kMaxN)
    throw usage_error("n must be in [1, " + std::to_string(kMaxN) + "]");
}

inline MonodromyFactorization load_input(const RunConfig& cfg, std::ostream& err) {
  const bool has_builtin = !cfg.builtin.empty();
  const bool has_file = !cfg.file.empty();
  if (has_builtin == has_file)
    throw usage_error("exactly one of --builtin and --file is required");
  if (has_builtin) {
    if (cfg.builtin == "matsumoto") return matsumoto_factorization();
    if (cfg.builtin == "bn") {
      if (cfg.n == 0) throw usage_error("--builtin bn requires --n");
      check_n(cfg.n);
      return build_bn(cfg.n);
    }
    throw usage_error("unknown builtin '" + cfg.builtin +
                      "' (expected matsumoto or bn)");
  }
  std::ifstream in(cfg.file);
  if (!in) throw usage_error("cannot open '" + cfg.file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  ParsedFactorization parsed = parse_factorization_file(buf.str());
  for (const std::string& w : parsed.warnings)
    err << "warning: " << cfg.file << ": " << w << "\n";
  if (cfg.verbosity > 0)
    err << cfg.file << ": " << parsed.factorization.cycles.size()
        << " cycles, fiber genus " << parsed.factorization.fiber_genus
        << ", base genus " << parsed.factorization.base_genus << "\n";
  return parsed.factorization;
}

inline const char* kv_sep(RunConfig::Format f) {
  return f == RunConfig::Format::KeyValue ? "\n" : " ";
}

inline std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

inline std::string join_torsion(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::int64_t d : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(d);
  }
  return out;
}

inline void run_pi1(const RunConfig& cfg, const MonodromyFactorization& f,
                    std::ostream& out) {
  const Presentation p = total_space_pi1(f);
  const Presentation s = tietze_simplify(p, cfg.passes);
  if (cfg.format == RunConfig::Format::KeyValue) {
    out << "pi1=" << print_presentation(p) << "\n";
    out << "simplified=" << print_presentation(s) << "\n";
  } else {
    out << "pi1: " << print_presentation(p) << "\n";
    out << "simplified: " << print_presentation(s) << "\n";
  }
}

inline void run_invariants(const RunConfig& cfg, const MonodromyFactorization& f,
                           std::ostream& out) {
  const InvariantReport r = invariant_report(f, cfg.hyperelliptic);
  const char* sep = kv_sep(cfg.format);
  out << "chi=" << r.chi << sep << "sigma=" << r.sigma << sep << "b1=" << r.b1
      << sep << "b2=" << r.b2 << sep << "b2+=" << r.b2_plus << sep
      << "b2-=" << r.b2_minus << "\n";
}

inline void run_validate(const RunConfig& cfg, const MonodromyFactorization& f,
                         std::ostream& out) {
  const ValidationReport v = validate(f);
  const char* sep = kv_sep(cfg.format);
  out << "h1_monodromy_trivial=" << (v.h1_monodromy_trivial ? "true" : "false")
      << sep << "kind_consistent=" << (v.kind_consistent ? "true" : "false");
  if (cfg.format == RunConfig::Format::KeyValue)
    out << sep << "offending=" << join_indices(v.offending_indices);
  else if (!v.offending_indices.empty())
    out << sep << "offending=" << join_indices(v.offending_indices);
  out << "\n";
}

inline void run_obstruct(const RunConfig& cfg, const MonodromyFactorization& f,
                         std::ostream& out) {
  InvariantReport r = invariant_report(f, cfg.hyperelliptic);
  Pi1Class pi1 = Pi1Class::classify(r.h1);
  if (cfg.cover) {
    if (cfg.builtin != "bn")
      throw usage_error("--cover requires --builtin bn (the degree is n)");
    r = cover_invariants(r, cfg.n, /*cover_b1=*/1);
    pi1 = Pi1Class::infinite_cyclic();
  }
  if (cfg.reverse) r = orientation_reverse(r);
  for (const ExclusionVerdict& v : kodaira_exclusion(r, pi1)) {
    if (cfg.format == RunConfig::Format::KeyValue) {
      const std::string key = to_string(v.kodaira_class);
      out << key << ".excluded=" << (v.excluded ? "true" : "false") << "\n";
      out << key << ".reason=" << v.reason << "\n";
      std::string ps;
      for (const std::string& p : v.premises) {
        if (!ps.empty()) ps += ',';
        ps += p;
      }
      out << key << ".premises=" << ps << "\n";
    } else {
      out << print_verdict(v) << "\n";
    }
  }
}

inline void run_bn(const RunConfig& cfg, std::ostream& out) {
  std::int64_t lo = cfg.n, hi = cfg.n;
  if (cfg.n_begin != 0 || cfg.n_end != 0) {
    if (cfg.n != 0) throw usage_error("--n and --n-range are mutually exclusive");
    lo = cfg.n_begin;
    hi = cfg.n_end;
    if (lo > hi) throw usage_error("empty n range");
  } else if (cfg.n == 0) {
    throw usage_error("bn requires --n or --n-range");
  }
  check_n(lo);
  check_n(hi);
  if (!cfg.show.empty() && cfg.show != "h1")
    throw usage_error("unknown --show value '" + cfg.show + "' (expected h1)");
  for (std::int64_t n = lo; n <= hi; ++n) {
    const AbelianInvariants h1 = abelianization(total_space_pi1(build_bn(n)));
    if (cfg.show == "h1") {
      if (cfg.format == RunConfig::Format::KeyValue)
        out << "h1=" << print_abelian_invariants(h1) << "\n";
      else
        out << print_abelian_invariants(h1) << "\n";
    } else if (cfg.format == RunConfig::Format::KeyValue) {
      out << "n=" << n << "\n";
      out << "h1=" << print_abelian_invariants(h1) << "\n";
      out << "torsion=" << join_torsion(h1.torsion) << "\n";
    } else {
      out << "n=" << n << " h1=" << print_abelian_invariants(h1)
          << " torsion=" << join_torsion(h1.torsion) << "\n";
    }
  }
}

inline void run_fibersum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.file.empty() || cfg.file2.empty())
    throw usage_error("fibersum requires two factorization files");
  RunConfig c1 = cfg;
  c1.builtin.clear();
  const MonodromyFactorization f1 = load_input(c1, err);
  RunConfig c2 = cfg;
  c2.builtin.clear();
  c2.file = cfg.file2;
  const MonodromyFactorization f2 = load_input(c2, err);
  const MappingClass phi = parse_mapping_class(cfg.twist, f1.fiber_genus);
  out << print_factorization(twisted_fiber_sum(f1, f2, phi));
}

}  // namespace detail

/// Executes one subcommand; writes reports to `out`, warnings to `err`.
/// Returns the process exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case RunConfig::Command::Bn:
        detail::run_bn(cfg, out);
        break;
      case RunConfig::Command::FiberSum:
        detail::run_fibersum(cfg, out, err);
        break;
      case RunConfig::Command::Pi1:
        detail::run_pi1(cfg, detail::load_input(cfg, err), out);
        break;
      case RunConfig::Command::H1: {
        const MonodromyFactorization f = detail::load_input(cfg, err);
        const AbelianInvariants h1 = abelianization(total_space_pi1(f));
        if (cfg.format == RunConfig::Format::KeyValue)
          out << "h1=" << print_abelian_invariants(h1) << "\n";
        else
          out << print_abelian_invariants(h1) << "\n";
        break;
      }
      case RunConfig::Command::Invariants:
        detail::run_invariants(cfg, detail::load_input(cfg, err), out);
        break;
      case RunConfig::Command::Validate:
        detail::run_validate(cfg, detail::load_input(cfg, err), out);
        break;
      case RunConfig::Command::Obstruct:
        detail::run_obstruct(cfg, detail::load_input(cfg, err), out);
        break;
    }
  } catch (const detail::usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

/// Full argv-level entry point (args exclude the program name).
inline int lefkit_main(std::vector<std::string> args, std::ostream& out,
                       std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"invariants of genus-g Lefschetz fibrations over S^2", "lefkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format: text or keyvalue")
      ->check(CLI::IsMember({"text", "keyvalue"}));
  app.add_flag("-v,--verbose", cfg.verbosity, "increase verbosity");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--builtin", cfg.builtin, "built-in factorization: matsumoto or bn");
    sub->add_option("--file", cfg.file, "factorization file");
    sub->add_option("--n", cfg.n, "twist parameter for --builtin bn")
        ->check(CLI::Range(std::int64_t{1}, kMaxN));
  };

  CLI::App* pi1 = app.add_subcommand("pi1", "total-space presentation, raw and simplified");
  add_input(pi1);
  pi1->add_option("--passes", cfg.passes, "simplifier pass budget")
      ->check(CLI::Range(0, 1000));

  CLI::App* h1 = app.add_subcommand("h1", "abelianized fundamental group");
  add_input(h1);

  CLI::App* inv = app.add_subcommand("invariants", "chi, sigma and Betti numbers");
  add_input(inv);
  inv->add_flag("--hyperelliptic", cfg.hyperelliptic,
                "assert hyperellipticity for fiber genus != 2");

  CLI::App* val = app.add_subcommand("validate", "H1 monodromy and cycle-kind checks");
  add_input(val);

  CLI::App* obs = app.add_subcommand("obstruct", "complex-structure exclusion verdicts");
  add_input(obs);
  obs->add_flag("--cover", cfg.cover, "run on the degree-n cover (pi1 = Z, b1 = 1)");
  obs->add_flag("--reverse", cfg.reverse, "reverse the orientation first");
  obs->add_flag("--hyperelliptic", cfg.hyperelliptic,
                "assert hyperellipticity for fiber genus != 2");

  CLI::App* bn = app.add_subcommand("bn", "the twisted double fiber sum family");
  bn->add_option("--n", cfg.n, "twist parameter")->check(CLI::Range(std::int64_t{1}, kMaxN));
  std::string range;
  bn->add_option("--n-range", range, "inclusive sweep, e.g. 2..50");
  bn->add_option("--show", cfg.show, "h1: print only the abelian invariants");

  CLI::App* fsum = app.add_subcommand("fibersum", "twisted fiber sum of two files");
  fsum->add_option("file1", cfg.file, "first factorization file")->required();
  fsum->add_option("file2", cfg.file2, "second factorization file")->required();
  fsum->add_option("--twist", cfg.twist, "mapping-class literal, e.g. 'D(a2)^3'");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  cfg.format = format == "keyvalue" ? RunConfig::Format::KeyValue
                                    : RunConfig::Format::Text;
  if (pi1->parsed()) cfg.command = RunConfig::Command::Pi1;
  if (h1->parsed()) cfg.command = RunConfig::Command::H1;
  if (inv->parsed()) cfg.command = RunConfig::Command::Invariants;
  if (val->parsed()) cfg.command = RunConfig::Command::Validate;
  if (obs->parsed()) cfg.command = RunConfig::Command::Obstruct;
  if (bn->parsed()) cfg.command = RunConfig::Command::Bn;
  if (fsum->parsed()) cfg.command = RunConfig::Command::FiberSum;

  if (!range.empty()) {
    const std::size_t dots = range.find("..");
    try {
      if (dots == std::string::npos) throw parse_error("expected <lo>..<hi>");
      cfg.n_begin = detail::parse_exponent(std::string_view(range).substr(0, dots));
      cfg.n_end = detail::parse_exponent(std::string_view(range).substr(dots + 2));
    } catch (const parse_error&) {
      err << "error: bad --n-range '" << range << "' (expected e.g. 2..50)\n";
      return 2;
    }
  }
  return run(cfg, out, err);
}

}  // namespace lefkit
