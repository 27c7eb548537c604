#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lefkit/arith.hpp"
#include "lefkit/errors.hpp"
#include "lefkit/fibration.hpp"
#include "lefkit/presentation.hpp"

// Numeric invariants of a fibration's total space and the Enriques-Kodaira
// exclusion rule engine: given the invariants of a closed oriented
// 4-manifold and a description of its fundamental group, test each minimal
// complex-surface class with b1 = 1 against the data. The engine certifies
// the arithmetic only; the classification facts it leans on are recorded as
// named premises on every verdict.

namespace lefkit {

/// chi, sigma and the Betti data of a closed oriented 4-manifold, tied
/// together by b2 = chi - 2 + 2 b1, b2 = b2+ + b2-, sigma = b2+ - b2-.
/// (b3 = b1 by Poincare duality is baked into the first identity.)
struct InvariantReport {
  std::int64_t chi = 0;
  std::int64_t sigma = 0;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  std::int64_t b2_plus = 0;
  std::int64_t b2_minus = 0;
  AbelianInvariants h1;
  bool hyperelliptic = false;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

namespace detail {

inline InvariantReport make_report(std::int64_t chi, std::int64_t sigma,
                                   std::int64_t b1, AbelianInvariants h1,
                                   bool hyperelliptic) {
  if (b1 < 0) throw domain_error("negative b1");
  InvariantReport r;
  r.chi = chi;
  r.sigma = sigma;
  r.b1 = b1;
  r.b2 = checked_add(checked_sub(chi, 2), checked_mul(2, b1));
  if (r.b2 < 0) throw domain_error("negative b2: inconsistent invariants");
  const std::int64_t plus2 = checked_add(r.b2, sigma);
  const std::int64_t minus2 = checked_sub(r.b2, sigma);
  if (plus2 % 2 != 0)
    throw domain_error("non-integral b2+: inconsistent invariants");
  r.b2_plus = plus2 / 2;
  r.b2_minus = minus2 / 2;
  if (r.b2_plus < 0 || r.b2_minus < 0)
    throw domain_error("negative b2+/b2-: inconsistent invariants");
  r.h1 = std::move(h1);
  r.hyperelliptic = hyperelliptic;
  return r;
}

}  // namespace detail

/// Invariants of the total space of F. Requires validate(F) to pass and the
/// fibration to be hyperelliptic (automatic for genus 2).
inline InvariantReport invariant_report(const MonodromyFactorization& f,
                                        bool assert_hyperelliptic = false) {
  const ValidationReport v = validate(f);
  if (!v.h1_monodromy_trivial)
    throw domain_error("factorization fails H1 monodromy triviality");
  if (!v.kind_consistent)
    throw domain_error("factorization has inconsistent cycle kinds");
  const std::int64_t chi = euler_characteristic(f);
  const std::int64_t sigma = signature_hyperelliptic(f, assert_hyperelliptic);
  AbelianInvariants h1 = abelianization(total_space_pi1(f));
  const std::int64_t b1 = h1.rank;
  return detail::make_report(chi, sigma, b1, std::move(h1),
                             f.fiber_genus == 2 || assert_hyperelliptic);
}

/// Sigma negated, b2+ and b2- swapped, all else unchanged.
inline InvariantReport orientation_reverse(const InvariantReport& r) {
  InvariantReport out = r;
  out.sigma = checked_neg(r.sigma);
  out.b2_plus = r.b2_minus;
  out.b2_minus = r.b2_plus;
  return out;
}

/// Invariants of a finite cover: chi and sigma scale by the degree; b1 of
/// the cover is not computable from r alone and must be supplied.
inline InvariantReport cover_invariants(const InvariantReport& r,
                                        std::int64_t degree,
                                        std::int64_t cover_b1) {
  if (degree < 1) throw domain_error("cover degree must be >= 1");
  return detail::make_report(checked_mul(r.chi, degree),
                             checked_mul(r.sigma, degree), cover_b1,
                             AbelianInvariants{cover_b1, {}}, r.hyperelliptic);
}

// ---------------------------------------------------------------------------
// Exclusion engine.

/// Shape of the relevant fundamental group, as asserted by the caller or
/// classified from computed abelian invariants.
struct Pi1Class {
  enum class Kind : std::uint8_t { InfiniteCyclic, RankOneWithTorsion, Other };

  Kind kind = Kind::Other;
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;

  static Pi1Class infinite_cyclic() { return {Kind::InfiniteCyclic, 1, {}}; }
  static Pi1Class rank_one_with_torsion(std::int64_t n) {
    return {Kind::RankOneWithTorsion, 1, {n}};
  }
  static Pi1Class other(std::int64_t rank, std::vector<std::int64_t> torsion) {
    return {Kind::Other, rank, std::move(torsion)};
  }

  static Pi1Class classify(const AbelianInvariants& h1) {
    if (h1.rank == 1 && h1.torsion.empty()) return infinite_cyclic();
    if (h1.rank == 1 && h1.torsion.size() == 1)
      return rank_one_with_torsion(h1.torsion.front());
    return other(h1.rank, h1.torsion);
  }

  std::string describe() const {
    AbelianInvariants inv{rank, torsion};
    return print_abelian_invariants(inv);
  }

  friend bool operator==(const Pi1Class&, const Pi1Class&) = default;
};

enum class KodairaClass : std::uint8_t {
  ClassVII,
  SecondaryKodaira,
  EllipticChiZero,
  EllipticOverS2,
};

inline std::string to_string(KodairaClass c) {
  switch (c) {
    case KodairaClass::ClassVII: return "VII";
    case KodairaClass::SecondaryKodaira: return "secondary-kodaira";
    case KodairaClass::EllipticChiZero: return "elliptic-chi-zero";
    case KodairaClass::EllipticOverS2: return "elliptic-over-s2";
  }
  return "?";
}

struct ExclusionVerdict {
  KodairaClass kodaira_class;
  bool excluded = false;
  std::string reason;
  std::vector<std::string> premises;

  friend bool operator==(const ExclusionVerdict&, const ExclusionVerdict&) = default;
};

// Named premises: the classification facts assumed, never computed.
namespace premises {
inline constexpr const char* kEnriquesKodaira = "enriques-kodaira-classification";
inline constexpr const char* kGompfSymplectic = "gompf-lefschetz-fibration-symplectic";
inline constexpr const char* kTaubesGompfMinimal = "taubes-gompf-minimal-model-symplectic";
inline constexpr const char* kSymplecticB2Plus = "symplectic-b2plus-positive";
inline constexpr const char* kBlowdownB2Minus = "blowdown-decreases-only-b2minus";
inline constexpr const char* kPoincareDuality = "poincare-duality-b3-equals-b1";
inline constexpr const char* kEllipticOrbifold = "elliptic-over-s2-orbifold-pi1";
}  // namespace premises

/// The four minimal-surface cases compatible with b1 = 1, each tested
/// against the report:
///   - class VII forces b2+ = 0, excluded when b2+ > 0;
///   - a secondary Kodaira surface forces b2 = 0, excluded when b2 > 0;
///   - a minimal elliptic surface with chi = 0 forces b2 = 0 (b3 = b1 = 1),
///     excluded when b2 > 0;
///   - a minimal elliptic surface with chi > 0 fibers over S^2 and has an
///     orbifold fundamental group, excluded when pi_1 is infinite cyclic.
inline std::vector<ExclusionVerdict> kodaira_exclusion(const InvariantReport& r,
                                                       const Pi1Class& pi1) {
  std::vector<ExclusionVerdict> out;

  {
    ExclusionVerdict v{KodairaClass::ClassVII, r.b2_plus > 0, "",
                       {premises::kEnriquesKodaira, premises::kGompfSymplectic,
                        premises::kTaubesGompfMinimal, premises::kSymplecticB2Plus,
                        premises::kBlowdownB2Minus}};
    v.reason = v.excluded
                   ? "b2+ = " + std::to_string(r.b2_plus) + " > 0"
                   : "b2+ = 0 is compatible with class VII";
    out.push_back(std::move(v));
  }
  {
    ExclusionVerdict v{KodairaClass::SecondaryKodaira, r.b2 > 0, "",
                       {premises::kEnriquesKodaira, premises::kSymplecticB2Plus,
                        premises::kBlowdownB2Minus}};
    v.reason = v.excluded ? "b2 = " + std::to_string(r.b2) + " > 0"
                          : "b2 = 0 is compatible with a secondary Kodaira surface";
    out.push_back(std::move(v));
  }
  {
    ExclusionVerdict v{KodairaClass::EllipticChiZero, r.b2 > 0, "",
                       {premises::kEnriquesKodaira, premises::kPoincareDuality,
                        premises::kBlowdownB2Minus}};
    v.reason = v.excluded ? "chi = 0 with b1 = b3 = 1 would force b2 = 0, but b2 = " +
                                std::to_string(r.b2) + " > 0"
                          : "b2 = 0 is compatible with an elliptic surface of chi = 0";
    out.push_back(std::move(v));
  }
  {
    const bool is_z = pi1.kind == Pi1Class::Kind::InfiniteCyclic;
    ExclusionVerdict v{KodairaClass::EllipticOverS2, is_z, "",
                       {premises::kEnriquesKodaira, premises::kEllipticOrbifold}};
    v.reason = is_z ? "pi1 = Z admits no surjection from a cyclic orbifold "
                      "group of an elliptic fibration over S^2 (every "
                      "generator image would have finite order)"
                    : "pi1 = " + pi1.describe() +
                          " is not tested by the orbifold argument";
    out.push_back(std::move(v));
  }
  return out;
}

inline std::string print_verdict(const ExclusionVerdict& v) {
  std::string out = "class=" + to_string(v.kodaira_class);
  out += v.excluded ? " excluded=true" : " excluded=false";
  out += " reason=\"" + v.reason + "\"";
  out += " premises=[";
  for (std::size_t i = 0; i < v.premises.size(); ++i) {
    if (i) out += ",";
    out += v.premises[i];
  }
  out += "]";
  return out;
}

}  // namespace lefkit
