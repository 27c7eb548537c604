#pragma once

#include <cstdint>
#include <vector>

#include "lefkit/arith.hpp"
#include "lefkit/errors.hpp"
#include "lefkit/mapping_class.hpp"
#include "lefkit/words.hpp"

// Monodromy factorizations of Lefschetz fibrations over S^2: the Matsumoto
// fibration on S^2 x T^2 # 4 CP2bar, twisted fiber sums, the B_n family,
// H_1-level validation, Euler characteristic and the hyperelliptic
// signature formula.

namespace lefkit {

enum class CycleKind : std::uint8_t { Nonseparating, Separating };

/// A vanishing cycle: a pi_1 word plus its separating type. For a
/// separating cycle, `h` records the genus of the smaller side, normalized
/// to 1 <= h <= g/2.
class VanishingCycle {
 public:
  static VanishingCycle nonseparating(Word w) {
    return VanishingCycle(std::move(w), CycleKind::Nonseparating, 0);
  }

  static VanishingCycle separating(Word w, int h) {
    const int g = w.genus();
    if (h < 1 || h > g - 1)
      throw domain_error("separating type must satisfy 1 <= h <= g-1");
    if (h > g - h) h = g - h;
    return VanishingCycle(std::move(w), CycleKind::Separating, h);
  }

  const Word& word() const { return word_; }
  CycleKind kind() const { return kind_; }
  /// Genus of the smaller complementary side; 0 for nonseparating cycles.
  int separating_genus() const { return sep_genus_; }

  friend bool operator==(const VanishingCycle&, const VanishingCycle&) = default;

 private:
  VanishingCycle(Word w, CycleKind k, int h)
      : word_(std::move(w)), kind_(k), sep_genus_(h) {}

  Word word_;
  CycleKind kind_;
  int sep_genus_;
};

/// Ordered vanishing-cycle list of a Lefschetz fibration. The order is the
/// order the singular fibers are met and is significant.
struct MonodromyFactorization {
  int fiber_genus = 2;
  int base_genus = 0;
  std::vector<VanishingCycle> cycles;

  friend bool operator==(const MonodromyFactorization&,
                         const MonodromyFactorization&) = default;
};

inline void check_cycle_genus(const MonodromyFactorization& f) {
  for (const VanishingCycle& c : f.cycles)
    if (c.word().genus() != f.fiber_genus)
      throw domain_error("cycle word genus differs from fiber genus");
}

/// The genus-2 fibration on S^2 x T^2 # 4 CP2bar with global monodromy
/// (B1 B2 B3 B4)^2; B2 is the separating cycle. Modulo the surface relation
/// the B2 word also reads a2 b2 a2^-1 b2^-1 up to inversion; the a1, b1
/// form is the stored canonical choice.
inline MonodromyFactorization matsumoto_factorization() {
  const int g = 2;
  const std::vector<VanishingCycle> quad = {
      VanishingCycle::nonseparating(parse_word("b1 b2", g)),
      VanishingCycle::separating(parse_word("a1 b1 a1^-1 b1^-1", g), 1),
      VanishingCycle::nonseparating(parse_word("b2 a2 b2^-1 a1", g)),
      VanishingCycle::nonseparating(parse_word("b2 a2 a1 b1", g)),
  };
  MonodromyFactorization f{g, 0, {}};
  f.cycles.reserve(8);
  for (int copy = 0; copy < 2; ++copy)
    f.cycles.insert(f.cycles.end(), quad.begin(), quad.end());
  return f;
}

/// F1 followed by the phi-images of F2's cycles. Twisting preserves each
/// cycle's separating type.
inline MonodromyFactorization twisted_fiber_sum(const MonodromyFactorization& f1,
                                                const MonodromyFactorization& f2,
                                                const MappingClass& phi) {
  if (f1.fiber_genus != f2.fiber_genus)
    throw domain_error("fiber sum requires equal fiber genus");
  if (f1.base_genus != 0 || f2.base_genus != 0)
    throw domain_error("fiber sum is defined here for base S^2 only");
  if (phi.genus() != f1.fiber_genus)
    throw domain_error("genus mismatch between fiber sum and mapping class");
  MonodromyFactorization out{f1.fiber_genus, 0, f1.cycles};
  out.cycles.reserve(f1.cycles.size() + f2.cycles.size());
  for (const VanishingCycle& c : f2.cycles) {
    Word tw = apply_mapping_class(phi, c.word());
    out.cycles.push_back(c.kind() == CycleKind::Separating
                             ? VanishingCycle::separating(std::move(tw),
                                                          c.separating_genus())
                             : VanishingCycle::nonseparating(std::move(tw)));
  }
  return out;
}

/// The fiber sum of two Matsumoto copies twisted by D(a2)^n: 16 cycles.
inline MonodromyFactorization build_bn(std::int64_t n) {
  if (n < 1) throw domain_error("build_bn requires n >= 1");
  MonodromyFactorization m = matsumoto_factorization();
  return twisted_fiber_sum(m, m,
                           MappingClass(2, {{GeneratorSymbol::a(2), n}}));
}

struct ValidationReport {
  /// The ordered product of the cycles' transvections is the identity
  /// (first-listed cycle acts first). Necessary for a fibration over S^2.
  bool h1_monodromy_trivial = false;
  /// Every cycle satisfies: nonseparating iff nonzero homology class.
  bool kind_consistent = false;
  /// 0-based indices of cycles violating the kind rule.
  std::vector<std::size_t> offending_indices;
};

inline ValidationReport validate(const MonodromyFactorization& f) {
  check_cycle_genus(f);
  ValidationReport r;
  SymplecticMatrix prod = SymplecticMatrix::identity(f.fiber_genus);
  for (std::size_t i = 0; i < f.cycles.size(); ++i) {
    const VanishingCycle& c = f.cycles[i];
    const HomologyClass h = homology_class(c.word());
    prod = transvection_matrix(h) * prod;
    const bool want_nonsep = !h.is_zero();
    if ((c.kind() == CycleKind::Nonseparating) != want_nonsep)
      r.offending_indices.push_back(i);
  }
  r.h1_monodromy_trivial = prod.is_identity();
  r.kind_consistent = r.offending_indices.empty();
  return r;
}

/// chi = (2 - 2 * fiber_genus) * (2 - 2 * base_genus) + #cycles.
inline std::int64_t euler_characteristic(const MonodromyFactorization& f) {
  const std::int64_t fiber = 2 - 2 * static_cast<std::int64_t>(f.fiber_genus);
  const std::int64_t base = 2 - 2 * static_cast<std::int64_t>(f.base_genus);
  return checked_add(checked_mul(fiber, base),
                     static_cast<std::int64_t>(f.cycles.size()));
}

/// Signature of the total space of a hyperelliptic fibration over S^2:
///   sigma = -((g+1)/(2g+1)) s_0 + sum_h (4h(g-h)/(2g+1) - 1) s_h
/// with s_0 the nonseparating count and s_h the count of separating cycles
/// of type h. Genus-2 fibrations are automatically hyperelliptic; for other
/// genera the caller must assert hyperellipticity.
inline std::int64_t signature_hyperelliptic(const MonodromyFactorization& f,
                                            bool assert_hyperelliptic = false) {
  check_cycle_genus(f);
  const std::int64_t g = f.fiber_genus;
  if (g != 2 && !assert_hyperelliptic)
    throw domain_error(
        "signature formula requires a hyperelliptic fibration; "
        "genus != 2 needs an explicit assertion");
  std::int64_t s0 = 0;
  std::vector<std::int64_t> sh(static_cast<std::size_t>(g / 2) + 1, 0);
  for (const VanishingCycle& c : f.cycles) {
    if (c.kind() == CycleKind::Nonseparating)
      ++s0;
    else
      ++sh[static_cast<std::size_t>(c.separating_genus())];
  }
  // Exact rational evaluation: numerator over the common denominator 2g+1.
  const std::int64_t den = 2 * g + 1;
  std::int64_t num = checked_mul(-(g + 1), s0);
  for (std::int64_t h = 1; h < static_cast<std::int64_t>(sh.size()); ++h) {
    const std::int64_t w = checked_sub(checked_mul(4 * h, g - h), den);
    num = checked_add(num, checked_mul(w, sh[static_cast<std::size_t>(h)]));
  }
  if (num % den != 0)
    throw domain_error("non-integral signature: inconsistent cycle kind census");
  return num / den;
}

}  // namespace lefkit
