#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "flip/errors.hpp"
#include "flip/words.hpp"

namespace flip {

// A finite group as an explicit multiplication table. Element 0 is the
// identity; inverses are derived from the table, never supplied. Construction
// verifies the group axioms: exhaustively for order <= 64, associativity by
// fixed-seed sampling above that.
struct FiniteGroupTable {
  int order = 1;
  std::vector<int> table;     // row-major: table[a*order + b] = a*b
  std::vector<int> inverses;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
  int inv(int a) const { return inverses[static_cast<std::size_t>(a)]; }

  int pow(int a, long long e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    int acc = 0;
    while (e > 0) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  static FiniteGroupTable from_multiplication(const std::vector<std::vector<int>>& mul) {
    FiniteGroupTable g;
    g.order = static_cast<int>(mul.size());
    if (g.order < 1) fail(errc::bad_group_table, "empty multiplication table");
    g.table.resize(static_cast<std::size_t>(g.order) * g.order);
    for (int a = 0; a < g.order; ++a) {
      if (static_cast<int>(mul[a].size()) != g.order)
        fail(errc::bad_group_table, "row " + std::to_string(a) + " has wrong length");
      for (int b = 0; b < g.order; ++b) {
        int v = mul[a][b];
        if (v < 0 || v >= g.order)
          fail(errc::bad_group_table, "entry out of range at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "): " + std::to_string(v));
        g.table[static_cast<std::size_t>(a) * g.order + b] = v;
      }
    }
    for (int a = 0; a < g.order; ++a)
      if (g.mul(0, a) != a || g.mul(a, 0) != a)
        fail(errc::bad_group_table, "element 0 is not a two-sided identity");
    g.inverses.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a) {
      for (int b = 0; b < g.order; ++b)
        if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
          g.inverses[a] = b;
          break;
        }
      if (g.inverses[a] < 0)
        fail(errc::bad_group_table, "element " + std::to_string(a) + " has no two-sided inverse");
    }
    if (g.order <= 64) {
      for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
          for (int c = 0; c < g.order; ++c)
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
              fail(errc::bad_group_table, "associativity fails at (" + std::to_string(a) + "," +
                                              std::to_string(b) + "," + std::to_string(c) + ")");
    } else {
      std::mt19937 rng(0x5eed);
      std::uniform_int_distribution<int> pick(0, g.order - 1);
      for (int i = 0; i < 200000; ++i) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          fail(errc::bad_group_table, "associativity fails at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
    return g;
  }
};

// Z/m with elements 0..m-1 under addition.
inline FiniteGroupTable cyclic_group(int m) {
  if (m < 1) fail(errc::bad_group_table, "cyclic group order must be >= 1, got " + std::to_string(m));
  FiniteGroupTable g;
  g.order = m;
  g.table.resize(static_cast<std::size_t>(m) * m);
  g.inverses.resize(m);
  for (int a = 0; a < m; ++a) {
    g.inverses[a] = (m - a) % m;
    for (int b = 0; b < m; ++b) g.table[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
  }
  return g;
}

// An ordered tuple of group elements, by id.
using ElementTuple = std::vector<int>;

inline void check_tuple(const FiniteGroupTable& g, const ElementTuple& t) {
  if (t.empty()) fail(errc::bad_tuple, "element tuple must be nonempty");
  for (int e : t)
    if (e < 0 || e >= g.order)
      fail(errc::bad_tuple, "element id " + std::to_string(e) + " out of range for order " +
                                std::to_string(g.order));
}

// Image of a word under a generator assignment, multiplied left to right.
inline int evaluate_word(const FiniteGroupTable& g, const std::map<Generator, int>& assignment,
                         const Word& w) {
  int acc = 0;
  for (const auto& syl : w) {
    auto it = assignment.find(syl.gen);
    if (it == assignment.end())
      fail(errc::unassigned_generator, "no image for generator " + syl.gen.name());
    if (it->second < 0 || it->second >= g.order)
      fail(errc::bad_tuple, "image of " + syl.gen.name() + " out of range");
    acc = g.mul(acc, g.pow(it->second, syl.exp));
  }
  return acc;
}

// One elementary Nielsen move away from t, in a fixed order: swaps of
// positions i < j, inversions of each position, then left products
// t_i <- t_i * t_j for ordered pairs i != j. Duplicates are not filtered.
inline std::vector<ElementTuple> nielsen_neighbors(const ElementTuple& t,
                                                   const FiniteGroupTable& g) {
  check_tuple(g, t);
  const std::size_t k = t.size();
  std::vector<ElementTuple> out;
  out.reserve(k * k + k);
  for (std::size_t i = 0; i + 1 < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      ElementTuple n = t;
      std::swap(n[i], n[j]);
      out.push_back(std::move(n));
    }
  for (std::size_t i = 0; i < k; ++i) {
    ElementTuple n = t;
    n[i] = g.inv(n[i]);
    out.push_back(std::move(n));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      ElementTuple n = t;
      n[i] = g.mul(t[i], t[j]);
      out.push_back(std::move(n));
    }
  return out;
}

// Does the tuple generate the whole group? Closure of {identity} under right
// multiplication by tuple elements; in a finite group that closure is the
// generated subgroup.
inline bool generates(const FiniteGroupTable& g, const ElementTuple& t) {
  check_tuple(g, t);
  std::vector<char> seen(g.order, 0);
  seen[0] = 1;
  std::vector<int> frontier{0};
  int count = 1;
  while (!frontier.empty()) {
    int a = frontier.back();
    frontier.pop_back();
    for (int e : t) {
      int b = g.mul(a, e);
      if (!seen[b]) {
        seen[b] = 1;
        ++count;
        frontier.push_back(b);
      }
    }
  }
  return count == g.order;
}

enum class Equivalence { equivalent, not_equivalent, exhausted };

inline const char* equivalence_name(Equivalence e) {
  switch (e) {
    case Equivalence::equivalent: return "equivalent";
    case Equivalence::not_equivalent: return "not_equivalent";
    case Equivalence::exhausted: return "exhausted";
  }
  return "unknown";
}

inline constexpr std::uint64_t default_node_cap = 10'000'000;

namespace detail {
struct TupleHash {
  std::size_t operator()(const ElementTuple& t) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : t) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};
}  // namespace detail

// Breadth-first search over the Nielsen move graph from a, looking for b.
// Both tuples must have the same length and generate g. The search visits at
// most node_cap tuples; hitting the cap yields Equivalence::exhausted. The
// outcome does not depend on neighbor ordering.
inline Equivalence nielsen_equivalent_finite(const FiniteGroupTable& g, const ElementTuple& a,
                                             const ElementTuple& b,
                                             std::uint64_t node_cap = default_node_cap) {
  check_tuple(g, a);
  check_tuple(g, b);
  if (a.size() != b.size())
    fail(errc::length_mismatch, "tuples have lengths " + std::to_string(a.size()) + " and " +
                                    std::to_string(b.size()));
  if (!generates(g, a)) fail(errc::not_generating, "first tuple does not generate the group");
  if (!generates(g, b)) fail(errc::not_generating, "second tuple does not generate the group");
  if (a == b) return Equivalence::equivalent;

  std::unordered_set<ElementTuple, detail::TupleHash> visited;
  std::deque<ElementTuple> queue;
  visited.insert(a);
  queue.push_back(a);
  std::uint64_t nodes = 1;
  while (!queue.empty()) {
    ElementTuple t = std::move(queue.front());
    queue.pop_front();
    for (auto& n : nielsen_neighbors(t, g)) {
      if (n == b) return Equivalence::equivalent;
      if (visited.insert(n).second) {
        if (++nodes > node_cap) return Equivalence::exhausted;
        queue.push_back(std::move(n));
      }
    }
  }
  return Equivalence::not_equivalent;
}

}  // namespace flip
