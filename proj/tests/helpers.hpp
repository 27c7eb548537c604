#pragma once

// Shared randomized generators and independent oracles for the test suites.
// The oracles deliberately avoid the library's code paths: dense matrices
// are plain vector-of-vector arithmetic, determinants are cofactor
// expansions, and invariant factors come from gcds of k x k minors.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lefkit/lefkit.hpp"

namespace helpers {

using lefkit::GeneratorSymbol;
using lefkit::HomologyClass;
using lefkit::IntegerMatrix;
using lefkit::Letter;
using lefkit::MappingClass;
using lefkit::Presentation;
using lefkit::Relator;
using lefkit::TwistFactor;
using lefkit::Word;

// ---------------------------------------------------------------------------
// Random data.

inline std::vector<Letter> random_letters(std::mt19937& rng, int alphabet, int len) {
  std::uniform_int_distribution<int> gen(0, alphabet - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) out.push_back({gen(rng), sgn(rng) ? +1 : -1});
  return out;
}

/// Freely reduced word of length <= max_len (no cancelling adjacent pairs).
inline Word random_word(std::mt19937& rng, int genus, int max_len) {
  std::uniform_int_distribution<int> length(0, max_len);
  std::uniform_int_distribution<int> gen(0, 2 * genus - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> out;
  const int len = length(rng);
  while (static_cast<int>(out.size()) < len) {
    Letter l{gen(rng), sgn(rng) ? +1 : -1};
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) continue;
    out.push_back(l);
  }
  return Word(genus, std::move(out));
}

inline MappingClass random_mapping_class(std::mt19937& rng, int genus, int max_factors,
                                         int max_power) {
  std::uniform_int_distribution<int> nfac(0, max_factors);
  std::uniform_int_distribution<int> idx(1, genus);
  std::uniform_int_distribution<int> kind(0, 1);
  std::uniform_int_distribution<int> pow(-max_power, max_power);
  std::vector<TwistFactor> fs;
  const int n = nfac(rng);
  for (int i = 0; i < n; ++i) {
    const GeneratorSymbol c =
        kind(rng) ? GeneratorSymbol::a(idx(rng)) : GeneratorSymbol::b(idx(rng));
    fs.push_back({c, pow(rng)});
  }
  return MappingClass(genus, std::move(fs));
}

inline Presentation random_presentation(std::mt19937& rng, int max_gens, int max_rels,
                                        int max_len) {
  std::uniform_int_distribution<int> ngen(1, max_gens);
  std::uniform_int_distribution<int> nrel(0, max_rels);
  const int gens = ngen(rng);
  std::vector<std::string> labels;
  for (int i = 0; i < gens; ++i) labels.push_back("x" + std::to_string(i + 1));
  std::uniform_int_distribution<int> len(0, max_len);
  std::vector<Relator> rels;
  const int k = nrel(rng);
  for (int i = 0; i < k; ++i) rels.push_back(random_letters(rng, gens, len(rng)));
  return Presentation(std::move(labels), std::move(rels));
}

inline IntegerMatrix random_matrix(std::mt19937& rng, int max_dim, int max_entry) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  IntegerMatrix m(dim(rng), dim(rng));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = entry(rng);
  return m;
}

// ---------------------------------------------------------------------------
// Dense integer matrices (oracle side).

using Dense = std::vector<std::vector<std::int64_t>>;

inline Dense dense_identity(int n) {
  Dense m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  Dense r(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < k; ++t) r[i][j] += a[i][t] * b[t][j];
  return r;
}

/// Exponent-sum class of a word, recounted from the letters.
inline std::vector<std::int64_t> dense_class(const Word& w) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(2 * w.genus()), 0);
  for (const Letter& l : w.letters()) c[static_cast<std::size_t>(l.gen)] += l.sign;
  return c;
}

/// Transvection x -> x + <c,x> c assembled column by column from the
/// intersection pairing <a_i,b_i> = +1.
inline Dense dense_transvection(const std::vector<std::int64_t>& c) {
  const int n = static_cast<int>(c.size());
  Dense m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int j = 0; j < n; ++j) {
    // pairing of c with the j-th basis vector
    std::int64_t p = 0;
    for (int t = 0; t * 2 + 1 < n; ++t) {
      if (j == 2 * t + 1) p += c[static_cast<std::size_t>(2 * t)];
      if (j == 2 * t) p -= c[static_cast<std::size_t>(2 * t + 1)];
    }
    for (int i = 0; i < n; ++i)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (i == j ? 1 : 0) + p * c[static_cast<std::size_t>(i)];
  }
  return m;
}

inline Dense to_dense(const lefkit::SymplecticMatrix& m) {
  Dense d(static_cast<std::size_t>(m.dim()),
          std::vector<std::int64_t>(static_cast<std::size_t>(m.dim()), 0));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
  return d;
}

// ---------------------------------------------------------------------------
// Cofactor determinants and the determinantal-divisor route to invariant
// factors.

using BigInt = __int128;

inline BigInt det_cofactor(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt det = 0;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    det += sign * m[0][c] * det_cofactor(std::move(minor));
    sign = -sign;
  }
  return det;
}

inline BigInt big_abs(BigInt x) { return x < 0 ? -x : x; }

inline BigInt big_gcd(BigInt a, BigInt b) {
  a = big_abs(a);
  b = big_abs(b);
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t det_cofactor_i64(const IntegerMatrix& m) {
  std::vector<std::vector<BigInt>> big(static_cast<std::size_t>(m.rows));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      big[static_cast<std::size_t>(r)].push_back(m.at(r, c));
  return static_cast<std::int64_t>(det_cofactor(std::move(big)));
}

/// Invariant factors via determinantal divisors: d_k = g_k / g_{k-1} where
/// g_k is the gcd of all k x k minors (g_0 = 1, and d_k = 0 once g_k = 0).
inline std::vector<std::int64_t> snf_minor_reference(const IntegerMatrix& m) {
  const int n = std::min(m.rows, m.cols);
  std::vector<std::int64_t> diag(static_cast<std::size_t>(n), 0);
  BigInt prev = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt g = 0;
    // all k-subsets of rows and of columns
    std::vector<int> rs(static_cast<std::size_t>(k)), cs(static_cast<std::size_t>(k));
    auto next_subset = [](std::vector<int>& s, int bound) {
      int i = static_cast<int>(s.size()) - 1;
      while (i >= 0 && s[static_cast<std::size_t>(i)] ==
                           bound - static_cast<int>(s.size()) + i)
        --i;
      if (i < 0) return false;
      ++s[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s.size(); ++j)
        s[j] = s[j - 1] + 1;
      return true;
    };
    for (int i = 0; i < k; ++i) rs[static_cast<std::size_t>(i)] = i;
    do {
      for (int i = 0; i < k; ++i) cs[static_cast<std::size_t>(i)] = i;
      do {
        std::vector<std::vector<BigInt>> sub(static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c)
            sub[static_cast<std::size_t>(r)].push_back(
                m.at(rs[static_cast<std::size_t>(r)], cs[static_cast<std::size_t>(c)]));
        g = big_gcd(g, det_cofactor(std::move(sub)));
      } while (next_subset(cs, m.cols));
    } while (next_subset(rs, m.rows));
    if (g == 0) break;  // all larger minors vanish too
    diag[static_cast<std::size_t>(k - 1)] = static_cast<std::int64_t>(g / prev);
    prev = g;
  }
  return diag;
}

}  // namespace helpers
