#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "flip/errors.hpp"

namespace flip {

// Generators of the standard presentations: x_i for the exceptional fiber
// sections, a_i/b_i for the base surface handles, h for the regular fiber.
struct Generator {
  enum class Kind : std::uint8_t { x, a, b, h };

  Kind kind = Kind::h;
  int index = 0;  // 1-based for x/a/b; 0 for h

  static Generator x(int i) { return {Kind::x, i}; }
  static Generator a(int i) { return {Kind::a, i}; }
  static Generator b(int i) { return {Kind::b, i}; }
  static Generator h() { return {Kind::h, 0}; }

  std::string name() const {
    switch (kind) {
      case Kind::x: return "x" + std::to_string(index);
      case Kind::a: return "a" + std::to_string(index);
      case Kind::b: return "b" + std::to_string(index);
      case Kind::h: return "h";
    }
    return "?";
  }

  auto operator<=>(const Generator&) const = default;
};

// Parses "x12", "a3", "b1", "h". Anything else is a schema error.
inline Generator generator_from_name(const std::string& s) {
  if (s == "h") return Generator::h();
  if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'a' || s[0] == 'b')) {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') fail(errc::parse_error, "bad generator name: " + s);
    long idx = std::strtol(s.c_str() + 1, nullptr, 10);
    if (idx < 1 || (s[1] == '0'))
      fail(errc::parse_error, "bad generator index in: " + s);
    switch (s[0]) {
      case 'x': return Generator::x(static_cast<int>(idx));
      case 'a': return Generator::a(static_cast<int>(idx));
      case 'b': return Generator::b(static_cast<int>(idx));
    }
  }
  fail(errc::parse_error, "bad generator name: " + s);
}

struct Syllable {
  Generator gen;
  long long exp = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A word in the free group on the generators, as a syllable sequence.
// Freely reduced means: no zero exponents, no two adjacent equal generators.
using Word = std::vector<Syllable>;

inline Word free_reduce(const Word& w) {
  Word out;
  for (const auto& s : w) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

// Letter length: total number of letters once exponents are unrolled.
inline long long word_length(const Word& w) {
  long long n = 0;
  for (const auto& s : w) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

inline Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

inline Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return free_reduce(out);
}

// [u, v] = u v u^-1 v^-1
inline Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(word_inverse(u), word_inverse(v)));
}

inline Word power(Generator g, long long e) {
  if (e == 0) return {};
  return {Syllable{g, e}};
}

inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& syl : w) {
    if (!s.empty()) s += " ";
    s += syl.gen.name();
    if (syl.exp != 1) s += "^" + std::to_string(syl.exp);
  }
  return s;
}

// Presentation <generators | relators>. Relators are freely reduced words in
// the listed generators; generator order is semantically meaningful (it fixes
// matrix columns in the abelianization and display order everywhere).
struct FinitePresentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;

  friend bool operator==(const FinitePresentation&, const FinitePresentation&) = default;
};

// An ordered tuple of words representing elements of a group.
using GeneratingSystem = std::vector<Word>;

}  // namespace flip
