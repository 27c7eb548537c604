#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lefkit/arith.hpp"
#include "lefkit/errors.hpp"
#include "lefkit/fibration.hpp"
#include "lefkit/words.hpp"

// Finitely presented groups: the total-space pi_1 presentation of a
// fibration, a Tietze simplifier, and abelianization via Smith normal form.
//
// Relators reuse the Word letter machinery over a flat generator namespace:
// generator j of the presentation is letter index j.

namespace lefkit {

using Relator = std::vector<Letter>;

class Presentation {
 public:
  /// Canonicalizes on construction: every relator is freely and cyclically
  /// reduced. Labels must be unique and nonempty.
  Presentation(std::vector<std::string> labels, std::vector<Relator> relators)
      : labels_(std::move(labels)), relators_(std::move(relators)) {
    std::set<std::string> seen;
    for (const std::string& l : labels_) {
      if (l.empty()) throw domain_error("empty generator label");
      if (!seen.insert(l).second)
        throw domain_error("duplicate generator label '" + l + "'");
    }
    for (Relator& r : relators_) {
      detail::check_letter_range(r, generator_count(), "presentation relator");
      r = detail::cyclically_reduced(detail::freely_reduced(r));
    }
  }

  int generator_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  const std::vector<Relator>& relators() const { return relators_; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Relator> relators_;
};

/// Generators a1,b1,...,ag,bg; relators: the surface relation
/// [a1,b1][a2,b2]...[ag,bg] followed by every cycle word of F.
inline Presentation total_space_pi1(const MonodromyFactorization& f) {
  if (f.base_genus != 0)
    throw domain_error("total-space pi_1 is implemented for base S^2 only");
  check_cycle_genus(f);
  const int g = f.fiber_genus;
  std::vector<std::string> labels;
  labels.reserve(2 * g);
  for (int i = 0; i < 2 * g; ++i)
    labels.push_back(GeneratorSymbol::from_flat(i).name());

  Relator surface;
  for (int i = 1; i <= g; ++i) {
    const GeneratorSymbol a = GeneratorSymbol::a(i), b = GeneratorSymbol::b(i);
    surface.push_back(pos(a));
    surface.push_back(pos(b));
    surface.push_back(neg(a));
    surface.push_back(neg(b));
  }

  std::vector<Relator> relators;
  relators.reserve(1 + f.cycles.size());
  relators.push_back(std::move(surface));
  for (const VanishingCycle& c : f.cycles) relators.push_back(c.word().letters());
  return Presentation(std::move(labels), std::move(relators));
}

namespace detail {

// Lexicographically least rotation of r or of its inverse; duplicate
// relators coincide on this key.
inline Relator cyclic_canonical_key(const Relator& r) {
  auto less = [](const Letter& x, const Letter& y) {
    return x.gen != y.gen ? x.gen < y.gen : x.sign < y.sign;
  };
  auto lex_less = [&](const Relator& x, const Relator& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), less);
  };
  Relator best = r;
  for (const Relator& base : {r, inverted(r)}) {
    Relator rot = base;
    for (std::size_t k = 0; k < base.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (lex_less(rot, best)) best = rot;
    }
  }
  return best;
}

struct SimplifyState {
  std::vector<std::string> labels;
  std::vector<Relator> relators;

  std::size_t total_letters() const {
    std::size_t n = 0;
    for (const Relator& r : relators) n += r.size();
    return n;
  }

  void cleanup() {
    for (Relator& r : relators) r = cyclically_reduced(freely_reduced(r));
    std::erase_if(relators, [](const Relator& r) { return r.empty(); });
    std::vector<Relator> kept;
    std::vector<Relator> keys;
    for (Relator& r : relators) {
      Relator key = cyclic_canonical_key(r);
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        keys.push_back(std::move(key));
        kept.push_back(std::move(r));
      }
    }
    relators = std::move(kept);
  }

  // Eligible pair: generator occurring exactly once (single letter) in some
  // relator. Tie-break: shortest relator, then lowest generator index.
  bool find_elimination(std::size_t& rel_out, int& gen_out) const {
    bool found = false;
    std::size_t best_len = 0;
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      const Relator& r = relators[ri];
      std::vector<int> count(labels.size(), 0);
      for (const Letter& l : r) ++count[static_cast<std::size_t>(l.gen)];
      for (int g = 0; g < static_cast<int>(labels.size()); ++g) {
        if (count[static_cast<std::size_t>(g)] != 1) continue;
        if (!found || r.size() < best_len ||
            (r.size() == best_len && g < gen_out)) {
          found = true;
          best_len = r.size();
          rel_out = ri;
          gen_out = g;
        }
        break;  // lower generators in the same relator were already checked
      }
    }
    return found;
  }

  void eliminate(std::size_t rel, int gen) {
    const Relator r = relators[rel];
    std::size_t k = 0;
    while (r[k].gen != gen) ++k;
    const Relator u(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
    const Relator v(r.begin() + static_cast<std::ptrdiff_t>(k) + 1, r.end());
    // r = u x^e v = 1 solves to x = u^-1 v^-1 (e = +1) or x = v u (e = -1).
    Relator expr;
    if (r[k].sign == +1) {
      expr = inverted(u);
      const Relator vi = inverted(v);
      expr.insert(expr.end(), vi.begin(), vi.end());
    } else {
      expr = v;
      expr.insert(expr.end(), u.begin(), u.end());
    }
    const Relator expr_inv = inverted(expr);

    relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(rel));
    for (Relator& s : relators) {
      Relator out;
      out.reserve(s.size());
      for (const Letter& l : s) {
        if (l.gen != gen) {
          out.push_back(l);
          continue;
        }
        const Relator& rep = l.sign == +1 ? expr : expr_inv;
        out.insert(out.end(), rep.begin(), rep.end());
      }
      s = cyclically_reduced(freely_reduced(out));
    }
    // Drop the generator and shift the ones above it down.
    labels.erase(labels.begin() + gen);
    for (Relator& s : relators)
      for (Letter& l : s)
        if (l.gen > gen) --l.gen;
  }
};

// Substitution can inflate relators; beyond this budget the simplifier
// stops eliminating and returns what it has (still a valid presentation).
inline constexpr std::size_t kSimplifyLetterBudget = 1'000'000;

}  // namespace detail

/// Best-effort simplification by Tietze moves that preserve the isomorphism
/// type: deleting empty relators, deleting duplicates up to cyclic rotation
/// and inversion, and eliminating generators that occur exactly once in some
/// relator. Performs at most one elimination per pass.
inline Presentation tietze_simplify(const Presentation& p, int max_passes = 8) {
  detail::SimplifyState st{p.generator_labels(), p.relators()};
  for (int pass = 0; pass < max_passes; ++pass) {
    st.cleanup();
    if (st.total_letters() > detail::kSimplifyLetterBudget) break;
    std::size_t rel = 0;
    int gen = 0;
    if (!st.find_elimination(rel, gen)) break;
    st.eliminate(rel, gen);
  }
  st.cleanup();
  return Presentation(std::move(st.labels), std::move(st.relators));
}

// ---------------------------------------------------------------------------
// Abelianization.

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c)
      : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

/// One row per relator; entry (i, j) = exponent sum of generator j in
/// relator i.
inline IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m(static_cast<int>(p.relators().size()), p.generator_count());
  for (int i = 0; i < m.rows; ++i)
    for (const Letter& l : p.relators()[static_cast<std::size_t>(i)])
      m.at(i, l.gen) = checked_add(m.at(i, l.gen), l.sign);
  return m;
}

/// Invariant factors d1 | d2 | ... (each >= 0, zeros last) of M under
/// unimodular row/column operations. Intermediate entries can outgrow any
/// fixed width even for small inputs, so the elimination runs on GMP
/// integers; a factor that does not fit in 64 bits throws instead of
/// wrapping.
inline std::vector<std::int64_t> smith_normal_form(const IntegerMatrix& input) {
  const int rows = input.rows, cols = input.cols;
  const int n = std::min(rows, cols);
  std::vector<std::int64_t> diag(static_cast<std::size_t>(n), 0);
  std::vector<mpz_class> m;
  m.reserve(input.a.size());
  for (std::int64_t v : input.a) m.emplace_back(static_cast<long>(v));

  auto at = [&](int r, int c) -> mpz_class& {
    return m[static_cast<std::size_t>(r) * cols + c];
  };
  auto swap_rows = [&](int i, int j) {
    if (i != j)
      for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i != j)
      for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  };
  auto row_axpy = [&](int dst, int src, const mpz_class& q) {  // row_dst -= q*row_src
    if (q == 0) return;
    for (int c = 0; c < cols; ++c) at(dst, c) -= q * at(src, c);
  };
  auto col_axpy = [&](int dst, int src, const mpz_class& q) {
    if (q == 0) return;
    for (int r = 0; r < rows; ++r) at(r, dst) -= q * at(r, src);
  };
  // truncated quotient, matching C++ integer division
  auto quot = [](const mpz_class& a, const mpz_class& d) {
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
  };

  for (int t = 0; t < n; ++t) {
    bool have_pivot = true;
    while (true) {
      // Smallest-magnitude nonzero entry of the trailing submatrix.
      int pr = -1, pc = -1;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c)
          if (at(r, c) != 0 &&
              (pr < 0 || cmp(abs(at(r, c)), abs(at(pr, pc))) < 0)) {
            pr = r;
            pc = c;
          }
      if (pr < 0) {
        have_pivot = false;  // trailing submatrix is zero
        break;
      }
      swap_rows(t, pr);
      swap_cols(t, pc);
      const mpz_class d = at(t, t);

      // Knock every non-multiple in the pivot cross down to a remainder
      // smaller than |d|; the next round then picks a strictly smaller
      // pivot, so this loop is a gcd computation in disguise.
      bool retry = false;
      for (int r = t + 1; r < rows; ++r)
        if (at(r, t) % d != 0) {
          row_axpy(r, t, quot(at(r, t), d));
          retry = true;
        }
      for (int c = t + 1; c < cols; ++c)
        if (at(t, c) % d != 0) {
          col_axpy(c, t, quot(at(t, c), d));
          retry = true;
        }
      if (retry) continue;

      // All cross entries are multiples: one exact pass clears the column,
      // and the column-t zeros make the row pass touch row t only.
      for (int r = t + 1; r < rows; ++r) row_axpy(r, t, quot(at(r, t), d));
      for (int c = t + 1; c < cols; ++c) col_axpy(c, t, quot(at(t, c), d));

      // The pivot must divide the whole trailing submatrix; folding an
      // offending row into row t feeds its entries to the gcd loop above.
      int bad = -1;
      for (int r = t + 1; r < rows && bad < 0; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (at(r, c) % d != 0) {
            bad = r;
            break;
          }
      if (bad >= 0) {
        row_axpy(t, bad, -1);
        continue;
      }
      break;
    }
    if (!have_pivot) break;
    const mpz_class d = abs(at(t, t));
    if (!d.fits_slong_p())
      throw overflow_error("invariant factor exceeds 64 bits");
    diag[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(d.get_si());
  }
  return diag;
}

/// Rank and torsion coefficients d1 | d2 | ... (each >= 2) of the
/// abelianized group.
struct AbelianInvariants {
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

inline AbelianInvariants abelianization(const Presentation& p) {
  const std::vector<std::int64_t> diag = smith_normal_form(relation_matrix(p));
  AbelianInvariants inv;
  std::int64_t nonzero = 0;
  for (std::int64_t d : diag) {
    if (d != 0) ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.rank = p.generator_count() - nonzero;
  return inv;
}

// ---------------------------------------------------------------------------
// Printing. Presentations render as `<a1, b1 | b1 b2, ...>`, abelian
// invariants as `Z^r + Z/d1 + Z/d2 ...`.

inline std::string print_relator(const Relator& r, const std::vector<std::string>& labels) {
  if (r.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < r.size();) {
    std::size_t j = i;
    while (j < r.size() && r[j] == r[i]) ++j;
    if (!out.empty()) out += ' ';
    const std::int64_t e = r[i].sign * static_cast<std::int64_t>(j - i);
    out += labels[static_cast<std::size_t>(r[i].gen)];
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

inline std::string print_presentation(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generator_labels().size(); ++i) {
    if (i) out += ", ";
    out += p.generator_labels()[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out += i ? ", " : " ";
    out += print_relator(p.relators()[i], p.generator_labels());
  }
  out += ">";
  return out;
}

inline std::string print_abelian_invariants(const AbelianInvariants& inv) {
  std::string out = "Z^" + std::to_string(inv.rank);
  for (std::int64_t d : inv.torsion) out += " + Z/" + std::to_string(d);
  return out;
}

/// Parses a relator over the presentation's labels, e.g. `x y^-2 x`.
inline Relator parse_relator(std::string_view text, const std::vector<std::string>& labels) {
  Relator out;
  for (std::string_view tok : detail::split_ws(text)) {
    if (tok == "1") continue;
    std::int64_t exponent = 1;
    std::string_view base = tok;
    if (std::size_t caret = tok.find('^'); caret != std::string_view::npos) {
      base = tok.substr(0, caret);
      exponent = detail::parse_exponent(tok.substr(caret + 1));
    }
    auto it = std::find(labels.begin(), labels.end(), std::string(base));
    if (it == labels.end())
      throw parse_error("unknown generator '" + std::string(base) + "'");
    const int gen = static_cast<int>(it - labels.begin());
    const int sign = exponent >= 0 ? +1 : -1;
    for (std::int64_t k = 0; k < (exponent >= 0 ? exponent : -exponent); ++k)
      out.push_back({gen, sign});
  }
  return out;
}

}  // namespace lefkit
