#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lefkit/arith.hpp"
#include "lefkit/errors.hpp"

// Exact word arithmetic in the free group on the standard surface-group
// generators a1, b1, ..., ag, bg, plus exponent-sum homology classes.
//
// All types here are immutable values and all operations are pure
// functions, so everything is safe to share across threads.

namespace lefkit {

enum class GenKind : std::uint8_t { A, B };

/// One of the 2g standard generator curves of a genus-g surface.
/// Total order: a1 < b1 < a2 < b2 < ... (the flat-index order).
struct GeneratorSymbol {
  GenKind kind = GenKind::A;
  int index = 1;  // 1-based

  static GeneratorSymbol a(int i) { return {GenKind::A, i}; }
  static GeneratorSymbol b(int i) { return {GenKind::B, i}; }

  /// Position in the flat basis (a1, b1, ..., ag, bg): a_i -> 2(i-1),
  /// b_i -> 2(i-1)+1.
  int flat() const { return 2 * (index - 1) + (kind == GenKind::B ? 1 : 0); }

  static GeneratorSymbol from_flat(int f) {
    return {f % 2 == 0 ? GenKind::A : GenKind::B, f / 2 + 1};
  }

  std::string name() const {
    return (kind == GenKind::A ? "a" : "b") + std::to_string(index);
  }

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
  friend auto operator<=>(const GeneratorSymbol& x, const GeneratorSymbol& y) {
    return x.flat() <=> y.flat();
  }
};

/// A single letter of a word: a generator (flat index) with exponent +1 or -1.
struct Letter {
  int gen = 0;
  int sign = 1;

  GeneratorSymbol symbol() const { return GeneratorSymbol::from_flat(gen); }

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter pos(GeneratorSymbol s) { return {s.flat(), +1}; }
inline Letter neg(GeneratorSymbol s) { return {s.flat(), -1}; }

namespace detail {

// Push a letter onto a freely-reduced prefix, cancelling an inverse pair.
inline void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

inline std::vector<Letter> freely_reduced(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) push_reduced(out, l);
  return out;
}

inline std::vector<Letter> inverted(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.push_back({it->gen, -it->sign});
  return out;
}

// Input must already be freely reduced.
inline std::vector<Letter> cyclically_reduced(std::vector<Letter> letters) {
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo].gen == letters[hi - 1].gen &&
         letters[lo].sign == -letters[hi - 1].sign) {
    ++lo;
    --hi;
  }
  return {letters.begin() + lo, letters.begin() + hi};
}

inline void check_letter_range(const std::vector<Letter>& letters, int bound,
                               const char* what) {
  for (const Letter& l : letters) {
    if (l.gen < 0 || l.gen >= bound)
      throw domain_error(std::string("generator index out of range for ") + what);
    if (l.sign != 1 && l.sign != -1)
      throw domain_error("letter exponent must be +1 or -1");
  }
}

}  // namespace detail

/// A freely reduced word in pi_1(Sigma_g). The genus travels with the word
/// and is checked at every operation boundary.
class Word {
 public:
  explicit Word(int genus) : genus_(genus) { check_genus(genus); }

  /// Freely reduces the given letters. Throws if a letter is outside the
  /// genus bound.
  Word(int genus, std::vector<Letter> letters) : genus_(genus) {
    check_genus(genus);
    detail::check_letter_range(letters, 2 * genus, "word");
    letters_ = detail::freely_reduced(letters);
  }

  int genus() const { return genus_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  static void check_genus(int g) {
    if (g < 1) throw domain_error("genus must be >= 1");
  }

  int genus_;
  std::vector<Letter> letters_;
};

inline Word free_reduce(std::vector<Letter> letters, int genus) {
  return Word(genus, std::move(letters));
}

inline void check_same_genus(const Word& u, const Word& v) {
  if (u.genus() != v.genus())
    throw domain_error("genus mismatch: " + std::to_string(u.genus()) + " vs " +
                       std::to_string(v.genus()));
}

inline Word concat(const Word& u, const Word& v) {
  check_same_genus(u, v);
  std::vector<Letter> out = u.letters();
  out.reserve(out.size() + v.size());
  for (const Letter& l : v.letters()) detail::push_reduced(out, l);
  return Word(u.genus(), std::move(out));
}

inline Word invert(const Word& w) {
  return Word(w.genus(), detail::inverted(w.letters()));
}

/// Strips matching inverse letters from the two ends; the result is
/// conjugate to the input.
inline Word cyclic_reduce(const Word& w) {
  return Word(w.genus(), detail::cyclically_reduced(w.letters()));
}

/// Integer vector of length 2g in the basis (a1, b1, ..., ag, bg).
struct HomologyClass {
  std::vector<std::int64_t> coeff;

  int genus() const { return static_cast<int>(coeff.size()) / 2; }

  bool is_zero() const {
    for (std::int64_t c : coeff)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

inline HomologyClass operator+(const HomologyClass& x, const HomologyClass& y) {
  if (x.coeff.size() != y.coeff.size())
    throw domain_error("homology classes of different genus");
  HomologyClass r = x;
  for (std::size_t i = 0; i < r.coeff.size(); ++i)
    r.coeff[i] = checked_add(r.coeff[i], y.coeff[i]);
  return r;
}

inline HomologyClass operator-(const HomologyClass& x) {
  HomologyClass r = x;
  for (auto& c : r.coeff) c = checked_neg(c);
  return r;
}

/// Signed exponent sum per generator: the image of w in H1(Sigma_g).
inline HomologyClass homology_class(const Word& w) {
  HomologyClass h{std::vector<std::int64_t>(2 * w.genus(), 0)};
  for (const Letter& l : w.letters())
    h.coeff[l.gen] = checked_add(h.coeff[l.gen], l.sign);
  return h;
}

inline HomologyClass generator_class(GeneratorSymbol s, int genus) {
  HomologyClass h{std::vector<std::int64_t>(2 * genus, 0)};
  h.coeff[s.flat()] = 1;
  return h;
}

// ---------------------------------------------------------------------------
// Word literal syntax (shared with the CLI DSL): whitespace-separated tokens
// like `a1 b1 a2^3 b2^-1`; the token `1` denotes the empty word. Runs are
// compressed on output; parse(print(w)) == w exactly.

inline std::string print_letter_run(GeneratorSymbol s, int sign, std::int64_t count) {
  std::string t = s.name();
  std::int64_t e = sign * count;
  if (e != 1) t += "^" + std::to_string(e);
  return t;
}

inline std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    if (!out.empty()) out += ' ';
    out += print_letter_run(ls[i].symbol(), ls[i].sign, static_cast<std::int64_t>(j - i));
    i = j;
  }
  return out;
}

namespace detail {

/// Parses `a2`, `b11`, ... within the genus bound.
inline GeneratorSymbol parse_generator_token(std::string_view tok, int genus) {
  if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b'))
    throw parse_error("expected generator token like a1 or b2, got '" +
                      std::string(tok) + "'");
  int idx = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9')
      throw parse_error("bad generator index in '" + std::string(tok) + "'");
    idx = idx * 10 + (tok[i] - '0');
    if (idx > 1'000'000) throw parse_error("generator index too large");
  }
  if (idx < 1 || idx > genus)
    throw parse_error("generator '" + std::string(tok) + "' exceeds genus " +
                      std::to_string(genus));
  return {tok[0] == 'a' ? GenKind::A : GenKind::B, idx};
}

inline std::int64_t parse_exponent(std::string_view tok) {
  if (tok.empty()) throw parse_error("empty exponent");
  bool negative = false;
  std::size_t i = 0;
  if (tok[0] == '-' || tok[0] == '+') {
    negative = tok[0] == '-';
    i = 1;
  }
  if (i == tok.size()) throw parse_error("empty exponent");
  std::int64_t v = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9')
      throw parse_error("bad exponent '" + std::string(tok) + "'");
    v = v * 10 + (tok[i] - '0');
    if (v > 100'000'000) throw parse_error("exponent too large");
  }
  return negative ? -v : v;
}

/// One word token: `1`, `a2`, `a2^3`, `a2^-2`. Appends the expanded letters.
inline void append_word_token(std::vector<Letter>& out, std::string_view tok, int genus) {
  if (tok == "1") return;
  std::int64_t exponent = 1;
  std::size_t caret = tok.find('^');
  std::string_view base = tok;
  if (caret != std::string_view::npos) {
    base = tok.substr(0, caret);
    exponent = parse_exponent(tok.substr(caret + 1));
    if (exponent > 100'000 || exponent < -100'000)
      throw parse_error("letter exponent out of range (|e| <= 100000)");
  }
  GeneratorSymbol s = parse_generator_token(base, genus);
  int sign = exponent >= 0 ? +1 : -1;
  for (std::int64_t k = 0; k < (exponent >= 0 ? exponent : -exponent); ++k)
    out.push_back({s.flat(), sign});
}

inline std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) toks.push_back(text.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace detail

inline Word parse_word(std::string_view text, int genus) {
  std::vector<Letter> letters;
  for (std::string_view tok : detail::split_ws(text))
    detail::append_word_token(letters, tok, genus);
  return Word(genus, std::move(letters));
}

}  // namespace lefkit
