#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lefkit/arith.hpp"
#include "lefkit/errors.hpp"
#include "lefkit/words.hpp"

// Dehn twists about the standard generator curves acting on pi_1 words, and
// arbitrary twists acting on H_1 via symplectic transvections.
//
// Positive-twist convention, fixed once for the whole library:
//   D(a_i):  b_i -> b_i a_i      (all other generators fixed)
//   D(b_i):  a_i -> a_i b_i^-1   (all other generators fixed)
// On H_1 both act as the transvection x -> x + <c,x> c with <a_i,b_i> = +1,
// so pi_1 and H_1 actions agree for every composite mapping class.

namespace lefkit {

struct TwistFactor {
  GeneratorSymbol curve;
  std::int64_t power = 1;

  friend bool operator==(const TwistFactor&, const TwistFactor&) = default;
};

/// A finite composition of powers of Dehn twists about standard generator
/// curves. Factors are listed outermost first: the last factor acts first.
class MappingClass {
 public:
  explicit MappingClass(int genus) : genus_(genus) { check(genus); }

  static MappingClass identity(int genus) { return MappingClass(genus); }

  MappingClass(int genus, std::vector<TwistFactor> factors) : genus_(genus) {
    check(genus);
    for (const TwistFactor& f : factors) {
      if (f.curve.index < 1 || f.curve.index > genus)
        throw domain_error("twist curve exceeds genus bound");
      if (f.power == 0) continue;
      if (!factors_.empty() && factors_.back().curve == f.curve) {
        factors_.back().power = checked_add(factors_.back().power, f.power);
        if (factors_.back().power == 0) factors_.pop_back();
      } else {
        factors_.push_back(f);
      }
    }
  }

  int genus() const { return genus_; }
  const std::vector<TwistFactor>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }

  MappingClass inverse() const {
    std::vector<TwistFactor> inv;
    inv.reserve(factors_.size());
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
      inv.push_back({it->curve, checked_neg(it->power)});
    return MappingClass(genus_, std::move(inv));
  }

  friend bool operator==(const MappingClass&, const MappingClass&) = default;

 private:
  static void check(int g) {
    if (g < 1) throw domain_error("genus must be >= 1");
  }

  int genus_;
  std::vector<TwistFactor> factors_;
};

/// Applies D(curve)^power to w by letter substitution, one pass per unit of
/// |power|, freely reducing after each pass.
inline Word twist_word(GeneratorSymbol curve, std::int64_t power, const Word& w) {
  if (curve.index < 1 || curve.index > w.genus())
    throw domain_error("genus mismatch between twist curve and word");
  const int inserted = curve.flat();
  const int target = curve.kind == GenKind::A ? curve.flat() + 1 : curve.flat() - 1;
  // The inserted letter's sign for a positively-oriented target letter:
  // D(a): b -> b a^(+s), D(b): a -> a b^(-s), s = sign(power).
  const int orient = curve.kind == GenKind::A ? +1 : -1;

  std::vector<Letter> cur = w.letters();
  for (std::int64_t k = 0; k < (power >= 0 ? power : -power); ++k) {
    const int s = (power >= 0 ? +1 : -1) * orient;
    std::vector<Letter> next;
    next.reserve(cur.size() * 2);
    for (const Letter& l : cur) {
      if (l.gen != target) {
        detail::push_reduced(next, l);
      } else if (l.sign == +1) {
        detail::push_reduced(next, l);
        detail::push_reduced(next, {inserted, s});
      } else {
        detail::push_reduced(next, {inserted, -s});
        detail::push_reduced(next, l);
      }
    }
    cur = std::move(next);
  }
  return Word(w.genus(), std::move(cur));
}

/// Factors act right-to-left: the last-listed factor is applied first.
inline Word apply_mapping_class(const MappingClass& mc, const Word& w) {
  if (mc.genus() != w.genus())
    throw domain_error("genus mismatch between mapping class and word");
  Word cur = w;
  const auto& fs = mc.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it)
    cur = twist_word(it->curve, it->power, cur);
  return cur;
}

// ---------------------------------------------------------------------------
// H_1 action.

/// 2g x 2g integer matrix preserving the standard symplectic form J that
/// pairs a_i with b_i (<a_i,b_i> = +1).
class SymplecticMatrix {
 public:
  static SymplecticMatrix identity(int genus) {
    SymplecticMatrix m(genus);
    for (int i = 0; i < 2 * genus; ++i) m.at(i, i) = 1;
    return m;
  }

  int genus() const { return genus_; }
  int dim() const { return 2 * genus_; }

  std::int64_t& at(int r, int c) { return m_[static_cast<std::size_t>(r) * dim() + c]; }
  std::int64_t at(int r, int c) const { return m_[static_cast<std::size_t>(r) * dim() + c]; }

  SymplecticMatrix operator*(const SymplecticMatrix& o) const {
    if (genus_ != o.genus_) throw domain_error("matrix genus mismatch");
    SymplecticMatrix r(genus_);
    for (int i = 0; i < dim(); ++i)
      for (int k = 0; k < dim(); ++k) {
        const std::int64_t aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < dim(); ++j)
          r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, o.at(k, j)));
      }
    return r;
  }

  HomologyClass apply(const HomologyClass& x) const {
    if (x.genus() != genus_) throw domain_error("matrix/class genus mismatch");
    HomologyClass y{std::vector<std::int64_t>(dim(), 0)};
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        y.coeff[i] = checked_add(y.coeff[i], checked_mul(at(i, j), x.coeff[j]));
    return y;
  }

  bool is_identity() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  /// Checks M^T J M = J exactly.
  bool is_symplectic() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        // (M^T J M)[i][j] = sum_k M[k][i] * (J M)[k][j],
        // (J M)[2t][j] = M[2t+1][j], (J M)[2t+1][j] = -M[2t][j].
        std::int64_t acc = 0;
        for (int t = 0; t < genus_; ++t) {
          acc = checked_add(acc, checked_mul(at(2 * t, i), at(2 * t + 1, j)));
          acc = checked_sub(acc, checked_mul(at(2 * t + 1, i), at(2 * t, j)));
        }
        std::int64_t want = 0;
        if (i / 2 == j / 2 && i != j) want = i % 2 == 0 ? 1 : -1;
        if (acc != want) return false;
      }
    return true;
  }

  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

 private:
  explicit SymplecticMatrix(int genus)
      : genus_(genus), m_(static_cast<std::size_t>(2 * genus) * (2 * genus), 0) {
    if (genus < 1) throw domain_error("genus must be >= 1");
  }

  friend SymplecticMatrix transvection_power(const HomologyClass&, std::int64_t);

  int genus_;
  std::vector<std::int64_t> m_;
};

/// T_c^p for the positive transvection T_c(x) = x + <c,x> c. The nilpotent
/// part N = c (c^T J) satisfies N^2 = 0, so T_c^p = I + p N exactly.
inline SymplecticMatrix transvection_power(const HomologyClass& c, std::int64_t p) {
  const int g = c.genus();
  if (g < 1 || c.coeff.size() != static_cast<std::size_t>(2 * g))
    throw domain_error("homology class must have 2g coefficients, g >= 1");
  SymplecticMatrix m = SymplecticMatrix::identity(g);
  // v = c^T J: v[a_i] = -c[b_i], v[b_i] = c[a_i].
  std::vector<std::int64_t> v(2 * g);
  for (int t = 0; t < g; ++t) {
    v[2 * t] = checked_neg(c.coeff[2 * t + 1]);
    v[2 * t + 1] = c.coeff[2 * t];
  }
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j)
      m.at(i, j) = checked_add(m.at(i, j), checked_mul(p, checked_mul(c.coeff[i], v[j])));
  return m;
}

/// H_1 action x -> x + <c,x> c of the positive Dehn twist about a curve with
/// class c.
inline SymplecticMatrix transvection_matrix(const HomologyClass& c) {
  return transvection_power(c, 1);
}

/// Product of the factors' transvections in composition order, so that
/// h1_action(mc).apply(homology_class(w)) == homology_class(apply_mapping_class(mc, w)).
inline SymplecticMatrix h1_action(const MappingClass& mc) {
  SymplecticMatrix m = SymplecticMatrix::identity(mc.genus());
  for (const TwistFactor& f : mc.factors())
    m = m * transvection_power(generator_class(f.curve, mc.genus()), f.power);
  return m;
}

// ---------------------------------------------------------------------------
// Mapping-class literal syntax: `D(a2)^3 D(b1)^-1`, read left-to-right as
// outermost-first. `1` denotes the identity.

inline std::string print_mapping_class(const MappingClass& mc) {
  if (mc.is_identity()) return "1";
  std::string out;
  for (const TwistFactor& f : mc.factors()) {
    if (!out.empty()) out += ' ';
    out += "D(" + f.curve.name() + ")";
    if (f.power != 1) out += "^" + std::to_string(f.power);
  }
  return out;
}

inline MappingClass parse_mapping_class(std::string_view text, int genus) {
  std::vector<TwistFactor> factors;
  for (std::string_view tok : detail::split_ws(text)) {
    if (tok == "1") continue;
    if (tok.size() < 4 || tok.substr(0, 2) != "D(")
      throw parse_error("expected twist like D(a2) or D(b1)^-1, got '" +
                        std::string(tok) + "'");
    std::size_t close = tok.find(')');
    if (close == std::string_view::npos)
      throw parse_error("missing ')' in '" + std::string(tok) + "'");
    GeneratorSymbol curve = detail::parse_generator_token(tok.substr(2, close - 2), genus);
    std::int64_t power = 1;
    if (close + 1 < tok.size()) {
      if (tok[close + 1] != '^')
        throw parse_error("expected '^' after ')' in '" + std::string(tok) + "'");
      power = detail::parse_exponent(tok.substr(close + 2));
    }
    if (power > 10'000 || power < -10'000)
      throw parse_error("twist power out of range (|power| <= 10000)");
    factors.push_back({curve, power});
  }
  return MappingClass(genus, std::move(factors));
}

}  // namespace lefkit
