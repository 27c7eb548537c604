#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lefkit/errors.hpp"
#include "lefkit/fibration.hpp"
#include "lefkit/words.hpp"

// Factorization text format, one declaration per line:
//
//   # comment
//   genus 2
//   base 0
//   curve B1 = b1 b2 kind nonsep
//   curve B2 = a1 b1 a1^-1 b1^-1 kind sep 1
//   word (B1 B2 B3 B4)^2
//
// Parenthesized groups with nonnegative integer exponents expand
// left-to-right; named curves must be declared before use. A declared kind
// that contradicts the homology class is reported as a warning, not a parse
// failure.

namespace lefkit {

struct ParsedFactorization {
  MonodromyFactorization factorization;
  std::vector<std::string> warnings;
};

namespace detail {

struct DslToken {
  std::string text;
  int column;  // 1-based
};

inline bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

// Splits a word-declaration payload into names, '(' and ')^k' tokens.
inline std::vector<DslToken> tokenize_word_line(std::string_view line, int base_col) {
  std::vector<DslToken> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    const int col = base_col + static_cast<int>(i);
    if (line[i] == '(') {
      toks.push_back({"(", col});
      ++i;
    } else if (line[i] == ')') {
      std::size_t j = i + 1;
      if (j < line.size() && line[j] == '^') {
        ++j;
        if (j < line.size() && (line[j] == '-' || line[j] == '+')) ++j;
        while (j < line.size() && line[j] >= '0' && line[j] <= '9') ++j;
      }
      toks.push_back({std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
             line[j] != '(' && line[j] != ')')
        ++j;
      toks.push_back({std::string(line.substr(i, j - i)), col});
      i = j;
    }
  }
  return toks;
}

class DslParser {
 public:
  ParsedFactorization parse(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      parse_line(text.substr(pos, eol - pos));
      ++line_no_;
      if (eol == text.size()) break;
      pos = eol + 1;
    }
    if (genus_ == 0) throw parse_error("missing genus declaration");
    ParsedFactorization out;
    out.factorization = MonodromyFactorization{genus_, base_, std::move(cycles_)};
    out.warnings = std::move(warnings_);
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int col) const {
    throw parse_error(msg, line_no_, col);
  }

  void parse_line(std::string_view line) {
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<std::string_view> toks = split_ws(line);
    if (toks.empty()) return;
    const std::string_view keyword = toks[0];
    const int col = static_cast<int>(line.find(keyword)) + 1;
    if (keyword == "genus") {
      parse_genus(toks, col);
    } else if (keyword == "base") {
      parse_base(toks, col);
    } else if (keyword == "curve") {
      parse_curve(toks, col);
    } else if (keyword == "word") {
      parse_word_decl(line, col);
    } else {
      fail("unknown declaration '" + std::string(keyword) +
               "' (expected genus, base, curve or word)",
           col);
    }
  }

  std::int64_t parse_int(std::string_view tok, int col) {
    try {
      return parse_exponent(tok);
    } catch (const parse_error& e) {
      fail(e.what(), col);
    }
  }

  void parse_genus(const std::vector<std::string_view>& toks, int col) {
    if (genus_ != 0) fail("duplicate genus declaration", col);
    if (saw_body_) fail("genus must precede curve and word declarations", col);
    if (toks.size() != 2) fail("expected: genus <integer>", col);
    const std::int64_t g = parse_int(toks[1], col);
    if (g < 1 || g > 1000) fail("genus must be in [1, 1000]", col);
    genus_ = static_cast<int>(g);
  }

  void parse_base(const std::vector<std::string_view>& toks, int col) {
    if (saw_base_) fail("duplicate base declaration", col);
    if (saw_body_) fail("base must precede curve and word declarations", col);
    if (toks.size() != 2) fail("expected: base <integer>", col);
    const std::int64_t b = parse_int(toks[1], col);
    if (b < 0 || b > 1000) fail("base genus must be in [0, 1000]", col);
    base_ = static_cast<int>(b);
    saw_base_ = true;
  }

  void parse_curve(const std::vector<std::string_view>& toks, int col) {
    if (genus_ == 0) fail("curve declaration requires a preceding genus", col);
    saw_body_ = true;
    if (toks.size() < 3 || toks[2] != "=")
      fail("expected: curve <name> = <word> kind <nonsep|sep h>", col);
    const std::string name(toks[1]);
    for (char c : name)
      if (!is_name_char(c)) fail("bad curve name '" + name + "'", col);
    if (curves_.count(name)) fail("curve '" + name + "' already declared", col);

    std::size_t kind_at = 3;
    while (kind_at < toks.size() && toks[kind_at] != "kind") ++kind_at;
    if (kind_at == toks.size())
      fail("curve declaration is missing 'kind nonsep' or 'kind sep <h>'", col);

    std::string word_text;
    for (std::size_t i = 3; i < kind_at; ++i) {
      if (!word_text.empty()) word_text += ' ';
      word_text += std::string(toks[i]);
    }
    Word w(genus_);
    try {
      w = parse_word(word_text, genus_);
    } catch (const parse_error& e) {
      fail(e.what(), col);
    }

    VanishingCycle cycle = VanishingCycle::nonseparating(w);
    const std::vector<std::string_view> kind_toks(toks.begin() + kind_at, toks.end());
    if (kind_toks.size() == 2 && kind_toks[1] == "nonsep") {
      if (homology_class(w).is_zero())
        warnings_.push_back("line " + std::to_string(line_no_) + ": curve '" + name +
                            "' declared nonsep but its homology class is zero");
    } else if (kind_toks.size() == 3 && kind_toks[1] == "sep") {
      const std::int64_t h = parse_int(kind_toks[2], col);
      try {
        cycle = VanishingCycle::separating(w, static_cast<int>(h));
      } catch (const domain_error& e) {
        fail(e.what(), col);
      }
      if (!homology_class(w).is_zero())
        warnings_.push_back("line " + std::to_string(line_no_) + ": curve '" + name +
                            "' declared sep but its homology class is nonzero");
    } else {
      fail("expected 'kind nonsep' or 'kind sep <h>'", col);
    }
    curves_.emplace(name, std::move(cycle));
  }

  void parse_word_decl(std::string_view line, int col) {
    if (genus_ == 0) fail("word declaration requires a preceding genus", col);
    saw_body_ = true;
    const std::size_t payload_at = line.find("word") + 4;
    std::vector<DslToken> toks =
        tokenize_word_line(line.substr(payload_at), static_cast<int>(payload_at) + 1);
    std::size_t pos = 0;
    expand_items(toks, pos, /*depth=*/0, cycles_);
    if (pos != toks.size()) fail("unexpected ')'", toks[pos].column);
  }

  // items := (NAME | '(' items ')' ['^' k])*, stopping at an unmatched ')'.
  void expand_items(const std::vector<DslToken>& toks, std::size_t& pos, int depth,
                    std::vector<VanishingCycle>& out) {
    while (pos < toks.size()) {
      const DslToken& t = toks[pos];
      if (t.text[0] == ')') return;  // caller consumes it
      if (t.text == "(") {
        ++pos;
        std::vector<VanishingCycle> group;
        expand_items(toks, pos, depth + 1, group);
        if (pos >= toks.size() || toks[pos].text[0] != ')')
          fail("missing ')'", t.column);
        std::int64_t reps = 1;
        const std::string& close = toks[pos].text;
        if (close.size() > 1) {
          if (close[1] != '^') fail("expected ')^<k>'", toks[pos].column);
          reps = parse_int(std::string_view(close).substr(2), toks[pos].column);
          if (reps < 0) fail("group exponent must be >= 0", toks[pos].column);
          if (reps > 100'000) fail("group exponent too large", toks[pos].column);
        }
        ++pos;
        for (std::int64_t k = 0; k < reps; ++k) {
          out.insert(out.end(), group.begin(), group.end());
          if (out.size() > kMaxCycles) fail("factorization exceeds 1e6 cycles", t.column);
        }
        continue;
      }
      auto it = curves_.find(t.text);
      if (it == curves_.end())
        fail("undeclared curve '" + t.text + "'", t.column);
      out.push_back(it->second);
      if (out.size() > kMaxCycles) fail("factorization exceeds 1e6 cycles", t.column);
      ++pos;
    }
    if (depth > 0) fail("missing ')'", toks.empty() ? 1 : toks.back().column);
  }

  static constexpr std::size_t kMaxCycles = 1'000'000;

  int line_no_ = 1;
  int genus_ = 0;
  int base_ = 0;
  bool saw_base_ = false;
  bool saw_body_ = false;
  std::map<std::string, VanishingCycle> curves_;
  std::vector<VanishingCycle> cycles_;
  std::vector<std::string> warnings_;
};

}  // namespace detail

inline ParsedFactorization parse_factorization_file(std::string_view text) {
  return detail::DslParser().parse(text);
}

/// Renders F in the DSL; re-parsing yields an identical value. Distinct
/// cycles are named B1, B2, ... in order of first appearance.
inline std::string print_factorization(const MonodromyFactorization& f) {
  std::string out = "genus " + std::to_string(f.fiber_genus) + "\n";
  out += "base " + std::to_string(f.base_genus) + "\n";
  std::vector<VanishingCycle> distinct;
  std::vector<std::size_t> name_of_cycle;
  for (const VanishingCycle& c : f.cycles) {
    std::size_t id = 0;
    while (id < distinct.size() && !(distinct[id] == c)) ++id;
    if (id == distinct.size()) distinct.push_back(c);
    name_of_cycle.push_back(id);
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    out += "curve B" + std::to_string(i + 1) + " = " + print_word(distinct[i].word());
    out += distinct[i].kind() == CycleKind::Separating
               ? " kind sep " + std::to_string(distinct[i].separating_genus())
               : " kind nonsep";
    out += "\n";
  }
  if (!f.cycles.empty()) {
    out += "word";
    for (std::size_t id : name_of_cycle) out += " B" + std::to_string(id + 1);
    out += "\n";
  }
  return out;
}

}  // namespace lefkit
