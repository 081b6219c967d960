#pragma once

// Free-group words, group presentations, the presentation DSL and
// conservative Tietze simplification.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thurston {

struct Syllable {
  std::size_t gen;
  long exp;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word in a free group: no zero exponents and no two
/// adjacent syllables on the same generator.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> s) {
    for (const auto& x : s) push(x.gen, x.exp);
  }
  static Word letter(std::size_t gen, long exp = 1) {
    Word w;
    w.push(gen, exp);
    return w;
  }

  const std::vector<Syllable>& syllables() const { return s_; }
  bool empty() const { return s_.empty(); }
  std::size_t size() const { return s_.size(); }

  /// Number of letters x^{±1}.
  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& x : s_) n += static_cast<std::size_t>(x.exp < 0 ? -x.exp : x.exp);
    return n;
  }

  /// Append x_gen^exp and reduce.
  void push(std::size_t gen, long exp) {
    if (exp == 0) return;
    if (!s_.empty() && s_.back().gen == gen) {
      s_.back().exp += exp;
      if (s_.back().exp == 0) s_.pop_back();
    } else {
      s_.push_back({gen, exp});
    }
  }

  Word inverse() const {
    Word w;
    for (auto it = s_.rbegin(); it != s_.rend(); ++it) w.s_.push_back({it->gen, -it->exp});
    return w;
  }

  friend Word operator*(Word u, const Word& v) {
    for (const auto& x : v.s_) u.push(x.gen, x.exp);
    return u;
  }

  /// Exponent sum of each generator.
  std::vector<long> exponent_sums(std::size_t ngens) const {
    std::vector<long> v(ngens, 0);
    for (const auto& x : s_) v.at(x.gen) += x.exp;
    return v;
  }

  std::size_t occurrences(std::size_t gen) const {
    std::size_t n = 0;
    for (const auto& x : s_)
      if (x.gen == gen) n += static_cast<std::size_t>(x.exp < 0 ? -x.exp : x.exp);
    return n;
  }

  std::size_t max_generator() const {
    std::size_t m = 0;
    for (const auto& x : s_) m = std::max(m, x.gen + 1);
    return m;
  }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> s_;
};

inline Word multiply(const Word& u, const Word& v) { return u * v; }

/// Cyclic reduction: conjugate so that first and last syllables do not
/// cancel or merge.
inline Word cyclically_reduce(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    long e = s[lo].exp + s[hi - 1].exp;
    if (e == 0) {
      ++lo;
      --hi;
    } else {
      s[lo].exp = e;
      --hi;
      break;
    }
  }
  return Word(std::vector<Syllable>(s.begin() + static_cast<long>(lo), s.begin() + static_cast<long>(hi)));
}

/// Substitute word images for generators.
inline Word substitute(const Word& w, const std::vector<Word>& images) {
  Word r;
  for (const auto& [g, e] : w.syllables()) {
    const Word& img = images.at(g);
    Word base = e > 0 ? img : img.inverse();
    for (long k = 0; k < (e > 0 ? e : -e); ++k) r = r * base;
  }
  return r;
}

/// Raised for malformed presentation text; carries a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class GroupPresentation {
 public:
  GroupPresentation() = default;
  GroupPresentation(std::vector<std::string> names, std::vector<Word> relators)
      : names_(std::move(names)) {
    for (auto& r : relators) add_relator(std::move(r));
  }

  std::size_t num_generators() const { return names_.size(); }
  std::size_t num_relators() const { return relators_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }

  std::size_t add_generator(std::string name) {
    names_.push_back(std::move(name));
    return names_.size() - 1;
  }
  void add_relator(Word r) {
    if (r.max_generator() > names_.size())
      throw std::invalid_argument("relator uses an undeclared generator");
    relators_.push_back(cyclically_reduce(r));
  }

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Whether inverse letters may be written by upper-casing the name.
inline bool uppercase_inverse_available(const std::vector<std::string>& names, std::size_t g) {
  std::string up = names[g];
  bool changed = false;
  for (auto& c : up) {
    if (std::islower(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      changed = true;
    }
  }
  if (!changed) return false;
  return std::find(names.begin(), names.end(), up) == names.end();
}

inline std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

inline std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    bool up = uppercase_inverse_available(names, g);
    if (e == 1) {
      os << names[g];
    } else if (e == -1 && up) {
      os << upper(names[g]);
    } else if (e < 0 && up) {
      os << upper(names[g]) << '^' << -e;
    } else {
      os << names[g] << '^' << e;
    }
  }
  return os.str();
}

inline std::string render(const GroupPresentation& p) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < p.num_generators(); ++i) os << (i ? "," : "") << p.generator_names()[i];
  os << " |";
  for (std::size_t i = 0; i < p.num_relators(); ++i)
    os << (i ? ", " : " ") << render_word(p.relators()[i], p.generator_names());
  os << '>';
  return os.str();
}

namespace detail {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : s_(text) {}

  GroupPresentation parse() {
    expect('<');
    std::vector<std::string> names;
    skip();
    if (peek() == '|') fail("empty generator list");
    for (;;) {
      names.push_back(identifier());
      if (std::find(names.begin(), names.end() - 1, names.back()) != names.end() - 1)
        fail("duplicate generator '" + names.back() + "'");
      skip();
      if (peek() == ',') {
        get();
        continue;
      }
      break;
    }
    expect('|');
    build_lexicon(names);
    GroupPresentation p(names, {});
    skip();
    if (peek() != '>') {
      for (;;) {
        p.add_relator(word());
        skip();
        if (peek() == ',') {
          get();
          continue;
        }
        break;
      }
    }
    expect('>');
    skip();
    if (pos_ != s_.size()) fail("trailing input after '>'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string identifier() {
    skip();
    if (!ident_start(peek())) fail("expected generator name");
    std::size_t start = pos_;
    while (ident_char(peek())) get();
    return std::string(s_.substr(start, pos_ - start));
  }

  void build_lexicon(const std::vector<std::string>& names) {
    for (std::size_t g = 0; g < names.size(); ++g) {
      lexicon_.push_back({names[g], g, 1});
      if (uppercase_inverse_available(names, g)) lexicon_.push_back({upper(names[g]), g, -1});
    }
    // longest match first
    std::stable_sort(lexicon_.begin(), lexicon_.end(),
                     [](const auto& a, const auto& b) { return a.token.size() > b.token.size(); });
  }

  long exponent() {
    skip();
    bool paren = false;
    if (peek() == '(' || peek() == '{') {
      paren = true;
      get();
      skip();
    }
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
    if (paren) {
      skip();
      if (peek() != ')' && peek() != '}') fail("expected ')'");
      get();
    }
    return neg ? -v : v;
  }

  Word word() {
    Word w;
    skip();
    if (peek() == '1') {
      get();
      return w;
    }
    bool any = false;
    for (;;) {
      skip();
      if (!ident_start(peek())) break;
      const Lex* hit = nullptr;
      for (const auto& l : lexicon_) {
        if (s_.substr(pos_, l.token.size()) == l.token) {
          hit = &l;
          break;
        }
      }
      if (!hit) {
        std::size_t save = pos_;
        std::string id = identifier();
        pos_ = save;
        fail("undeclared generator '" + id + "'");
      }
      pos_ += hit->token.size();
      long e = hit->sign;
      skip();
      if (peek() == '^') {
        get();
        e *= exponent();
      }
      w.push(hit->gen, e);
      any = true;
    }
    if (!any) fail("expected a relator word");
    return w;
  }

  struct Lex {
    std::string token;
    std::size_t gen;
    long sign;
  };
  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<Lex> lexicon_;
};

}  // namespace detail

/// Parse `<g1,g2,... | w1, w2, ...>`. Inverse letters are upper case
/// (a^-1 = A) or written with a negative exponent; `#` starts a comment.
inline GroupPresentation parse_presentation(std::string_view text) {
  return detail::PresentationParser(text).parse();
}

/// Record of a Tietze simplification: how each original generator is
/// expressed in the generators of the simplified presentation.
struct TietzeTrace {
  GroupPresentation result;
  std::vector<Word> images;  // indexed by original generator
  std::vector<std::optional<std::size_t>> kept;  // original -> new index
};

/// Shrink a presentation using only moves that never enlarge relators:
/// drop trivial relators, and eliminate a generator occurring exactly
/// once in some relator when its expression has length <= 1 or it occurs
/// in no other relator.
inline TietzeTrace tietze_simplify_traced(const GroupPresentation& p) {
  std::size_t n = p.num_generators();
  std::vector<Word> images(n);
  for (std::size_t g = 0; g < n; ++g) images[g] = Word::letter(g);
  std::vector<bool> alive(n, true);
  std::vector<Word> rels;
  for (const auto& r : p.relators()) rels.push_back(cyclically_reduce(r));

  for (bool changed = true; changed;) {
    changed = false;
    std::erase_if(rels, [](const Word& w) { return w.empty(); });
    for (std::size_t ri = 0; ri < rels.size() && !changed; ++ri) {
      const Word& r = rels[ri];
      // scan from the right so later generators are eliminated first
      for (std::size_t si = r.size(); si-- > 0 && !changed;) {
        auto [g, e] = r.syllables()[si];
        if ((e != 1 && e != -1) || r.occurrences(g) != 1) continue;
        // r = u g^e v, so g = (v u)^{-e} after rotating
        std::vector<Syllable> s = r.syllables();
        std::vector<Syllable> rot(s.begin() + static_cast<long>(si) + 1, s.end());
        rot.insert(rot.end(), s.begin(), s.begin() + static_cast<long>(si));
        Word rest(rot);
        Word expr = e == 1 ? rest.inverse() : rest;
        bool elsewhere = false;
        for (std::size_t rj = 0; rj < rels.size(); ++rj)
          if (rj != ri && rels[rj].occurrences(g) > 0) elsewhere = true;
        if (expr.length() > 1 && elsewhere) continue;

        std::vector<Word> sub(n);
        for (std::size_t h = 0; h < n; ++h) sub[h] = Word::letter(h);
        sub[g] = expr;
        std::vector<Word> next;
        for (std::size_t rj = 0; rj < rels.size(); ++rj)
          if (rj != ri) next.push_back(cyclically_reduce(substitute(rels[rj], sub)));
        rels = std::move(next);
        for (auto& img : images) img = substitute(img, sub);
        alive[g] = false;
        changed = true;
      }
    }
  }

  TietzeTrace out;
  out.kept.assign(n, std::nullopt);
  std::vector<std::string> names;
  std::vector<Word> relabel(n);
  for (std::size_t g = 0; g < n; ++g) {
    if (!alive[g]) continue;
    out.kept[g] = names.size();
    relabel[g] = Word::letter(names.size());
    names.push_back(p.generator_names()[g]);
  }
  std::vector<Word> new_rels;
  for (const auto& r : rels) new_rels.push_back(substitute(r, relabel));
  out.result = GroupPresentation(std::move(names), std::move(new_rels));
  for (auto& img : images) img = substitute(img, relabel);
  out.images = std::move(images);
  return out;
}

inline GroupPresentation tietze_simplify(const GroupPresentation& p) {
  return tietze_simplify_traced(p).result;
}

/// Free product of two presentations; generators of b follow those of a.
inline GroupPresentation free_product(const GroupPresentation& a, const GroupPresentation& b) {
  std::vector<std::string> names = a.generator_names();
  std::vector<Word> shift(b.num_generators());
  for (std::size_t g = 0; g < b.num_generators(); ++g) {
    std::string nm = b.generator_names()[g];
    while (std::find(names.begin(), names.end(), nm) != names.end()) nm += "_";
    shift[g] = Word::letter(names.size());
    names.push_back(nm);
  }
  std::vector<Word> rels = a.relators();
  for (const auto& r : b.relators()) rels.push_back(substitute(r, shift));
  return GroupPresentation(std::move(names), std::move(rels));
}

}  // namespace thurston
