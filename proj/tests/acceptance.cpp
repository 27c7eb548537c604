// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything asserted here is exact; no tolerances are involved anywhere.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lefkit/lefkit.hpp"

using namespace lefkit;

namespace {

struct Suite {
  int failures = 0;

  void run(const std::string& name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << ms << " ms)";
    if (!ok) std::cout << "\n       " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

struct check_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw check_failure(what);
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got '" << got << "', want '" << want << "'";
    expect(false, os.str());
  }
}

// --------------------------------------------------------------------------

void criterion1_bn_abelianization() {
  const auto start = std::chrono::steady_clock::now();
  expect(abelianization(total_space_pi1(build_bn(1))) == AbelianInvariants{1, {}},
         "n=1 must give Z");
  for (std::int64_t n = 2; n <= 50; ++n) {
    const AbelianInvariants got = abelianization(total_space_pi1(build_bn(n)));
    expect(got == AbelianInvariants{1, {n}},
           "n=" + std::to_string(n) + " gave " + print_abelian_invariants(got));
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  expect(elapsed < std::chrono::seconds(1), "sweep exceeded one second");
}

void criterion2_twist_words() {
  const Word beta1 = parse_word("b1 b2", 2);
  const Word beta2 = parse_word("a1 b1 a1^-1 b1^-1", 2);
  const Word beta3 = parse_word("b2 a2 b2^-1 a1", 2);
  const Word beta4 = parse_word("b2 a2 a1 b1", 2);
  const GeneratorSymbol a2 = GeneratorSymbol::a(2);
  auto pow = [](std::int64_t e) {
    return e == 1 ? std::string("a2") : "a2^" + std::to_string(e);
  };
  for (std::int64_t n = 1; n <= 20; ++n) {
    expect_eq(print_word(twist_word(a2, n, beta1)), "b1 b2 " + pow(n),
              "twisted beta1, n=" + std::to_string(n));
    expect_eq(print_word(twist_word(a2, n, beta2)),
              std::string("a1 b1 a1^-1 b1^-1"), "beta2 must be fixed");
    expect_eq(print_word(twist_word(a2, n, beta3)), std::string("b2 a2 b2^-1 a1"),
              "beta3 must be fixed");
    expect_eq(print_word(twist_word(a2, n, beta4)), "b2 " + pow(n + 1) + " a1 b1",
              "twisted beta4, n=" + std::to_string(n));
  }
}

void criterion3_simplifier() {
  for (std::int64_t n = 1; n <= 50; ++n) {
    const Presentation s = tietze_simplify(total_space_pi1(build_bn(n)), 8);
    expect(s.generator_count() <= 2,
           "bn presentation kept " + std::to_string(s.generator_count()) +
               " generators at n=" + std::to_string(n));
  }
  std::mt19937 rng(730001);
  for (int trial = 0; trial < 1000; ++trial) {
    const Presentation p = helpers::random_presentation(rng, 6, 8, 12);
    const AbelianInvariants before = abelianization(p);
    const AbelianInvariants after = abelianization(tietze_simplify(p, 8));
    expect(before == after, "abelianization changed on trial " + std::to_string(trial) +
                                ": " + print_abelian_invariants(before) + " vs " +
                                print_abelian_invariants(after));
  }
}

void check_report(const InvariantReport& r, std::int64_t chi, std::int64_t sigma,
                  std::int64_t b1, std::int64_t b2, std::int64_t b2p,
                  std::int64_t b2m, const std::string& what) {
  expect(r.chi == chi && r.sigma == sigma && r.b1 == b1 && r.b2 == b2 &&
             r.b2_plus == b2p && r.b2_minus == b2m,
         what + " invariants mismatch");
}

void criterion4_invariant_arithmetic() {
  check_report(invariant_report(matsumoto_factorization()), 4, -4, 2, 6, 1, 5,
               "matsumoto");
  for (std::int64_t n = 2; n <= 50; ++n)
    check_report(invariant_report(build_bn(n)), 12, -8, 1, 12, 2, 10,
                 "bn n=" + std::to_string(n));
  check_report(invariant_report(MonodromyFactorization{2, 0, {}}), -4, 0, 4, 2, 1, 1,
               "empty genus-2");
}

// Oracle-side triviality: recount the classes, rebuild the transvections
// column by column and multiply densely, first cycle acting first.
bool oracle_monodromy_trivial(const MonodromyFactorization& f) {
  helpers::Dense prod = helpers::dense_identity(2 * f.fiber_genus);
  for (const VanishingCycle& c : f.cycles)
    prod = helpers::dense_mul(helpers::dense_transvection(helpers::dense_class(c.word())),
                              prod);
  return prod == helpers::dense_identity(2 * f.fiber_genus);
}

void criterion5_monodromy_triviality() {
  auto check = [](const MonodromyFactorization& f, const std::string& what) {
    const bool got = validate(f).h1_monodromy_trivial;
    const bool want = oracle_monodromy_trivial(f);
    expect(got == want, what + ": validate disagrees with the dense oracle");
    expect(want, what + ": monodromy is not trivial");
  };
  check(matsumoto_factorization(), "matsumoto");
  for (std::int64_t n = 1; n <= 50; ++n) check(build_bn(n), "bn n=" + std::to_string(n));

  const MonodromyFactorization single{
      2, 0, {VanishingCycle::nonseparating(parse_word("a1", 2))}};
  expect(!validate(single).h1_monodromy_trivial, "single twist must fail");
  expect(!oracle_monodromy_trivial(single), "oracle must reject the single twist");
}

void criterion6_kodaira_exclusion() {
  for (std::int64_t n = 2; n <= 50; ++n) {
    const InvariantReport cover = cover_invariants(invariant_report(build_bn(n)), n, 1);
    for (const InvariantReport& r : {cover, orientation_reverse(cover)}) {
      const auto verdicts = kodaira_exclusion(r, Pi1Class::infinite_cyclic());
      expect(verdicts.size() == 4, "expected four verdicts");
      for (const ExclusionVerdict& v : verdicts) {
        expect(v.excluded, "class " + to_string(v.kodaira_class) +
                               " not excluded at n=" + std::to_string(n));
        const bool cites_numbers = v.reason.find("> 0") != std::string::npos ||
                                   v.reason.find("pi1 = Z") != std::string::npos;
        expect(!v.reason.empty() && cites_numbers,
               "reason does not cite its test: " + v.reason);
      }
    }
  }
}

void criterion7_smith_normal_form() {
  std::mt19937 rng(730002);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntegerMatrix m = helpers::random_matrix(rng, 6, 20);
    const std::vector<std::int64_t> diag = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] == 0) continue;
      expect(diag[i] != 0 && diag[i + 1] % diag[i] == 0,
             "divisibility chain broken on trial " + std::to_string(trial));
    }
    expect(diag == helpers::snf_minor_reference(m),
           "minor-gcd reference mismatch on trial " + std::to_string(trial));
    if (m.rows == m.cols) {
      const std::int64_t det = helpers::det_cofactor_i64(m);
      if (det != 0) {
        std::int64_t prod = 1;
        for (std::int64_t d : diag) prod *= d;
        expect(prod == (det < 0 ? -det : det),
               "product of invariant factors != |det| on trial " +
                   std::to_string(trial));
      }
    }
  }
}

void criterion8_property_suites() {
  std::mt19937 rng(730003);
  for (int trial = 0; trial < 1000; ++trial) {
    const MappingClass phi = helpers::random_mapping_class(rng, 2, 6, 5);
    expect(h1_action(phi).is_symplectic(),
           "h1_action broke M^T J M = J on trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const MappingClass phi = helpers::random_mapping_class(rng, 2, 5, 4);
    const Word w = helpers::random_word(rng, 2, 16);
    expect(homology_class(apply_mapping_class(phi, w)) ==
               h1_action(phi).apply(homology_class(w)),
           "pi1/H1 compatibility broke on trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 10000; ++trial) {
    const auto raw = helpers::random_letters(rng, 4, 24);
    const Word once = free_reduce(raw, 2);
    expect(free_reduce(once.letters(), 2) == once,
           "free_reduce not idempotent on trial " + std::to_string(trial));
    const Word u = helpers::random_word(rng, 2, 10);
    const Word v = helpers::random_word(rng, 2, 10);
    expect(concat(concat(once, u), v) == concat(once, concat(u, v)),
           "concat not associative on trial " + std::to_string(trial));
  }
}

}  // namespace

int main() {
  Suite suite;
  suite.run("1. bn family abelianization is Z + Z/n (n = 1..50, under 1 s)",
            criterion1_bn_abelianization);
  suite.run("2. a2-twist words match the catalog forms exactly (n = 1..20)",
            criterion2_twist_words);
  suite.run("3. simplifier: bn reaches <= 2 generators in 8 passes; "
            "abelianization preserved on 1000 random presentations",
            criterion3_simplifier);
  suite.run("4. invariant arithmetic for matsumoto, bn (n = 2..50) and the "
            "empty factorization",
            criterion4_invariant_arithmetic);
  suite.run("5. H1 monodromy triviality agrees with a dense matrix oracle "
            "(matsumoto, bn n = 1..50, single-twist rejection)",
            criterion5_monodromy_triviality);
  suite.run("6. all four complex-surface classes excluded for bn covers "
            "(n = 2..50, both orientations)",
            criterion6_kodaira_exclusion);
  suite.run("7. Smith normal form matches the minor-gcd reference on 1000 "
            "random matrices, with |det| products",
            criterion7_smith_normal_form);
  suite.run("8. property suites: symplectic identity, pi1/H1 compatibility, "
            "word algebra (exact)",
            criterion8_property_suites);

  if (suite.failures == 0)
    std::cout << "acceptance: all 8 criteria passed\n";
  else
    std::cout << "acceptance: " << suite.failures << " criteria FAILED\n";
  return suite.failures;
}
