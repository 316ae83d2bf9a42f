#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "flip/errors.hpp"
#include "flip/numeric.hpp"
#include "flip/seifert.hpp"
#include "flip/words.hpp"

namespace flip {

namespace detail {

inline std::vector<Generator> surface_generators(long long genus) {
  std::vector<Generator> gens;
  for (int i = 1; i <= genus; ++i) {
    gens.push_back(Generator::a(i));
    gens.push_back(Generator::b(i));
  }
  return gens;
}

// prod_i [a_i, b_i] as a single reduced word.
inline Word surface_relator_part(long long genus) {
  Word w;
  for (int i = 1; i <= genus; ++i)
    w = concat(w, commutator(power(Generator::a(i), 1), power(Generator::b(i), 1)));
  return w;
}

inline void push_nonempty(std::vector<Word>& relators, Word w) {
  w = free_reduce(w);
  if (!w.empty()) relators.push_back(std::move(w));
}

}  // namespace detail

// Fundamental group of the Seifert fibered space with the given invariants:
//   generators x_1..x_l, a_1, b_1, .., a_g, b_g, h
//   relators    h^-b [a_1,b_1]..[a_g,b_g] x_1..x_l,
//               [a_i, h], [b_i, h]          (i = 1..g)
//               [x_i, h]                    (i = 1..l)
//               x_i^alpha_i h^beta_i        (i = 1..l)
// Relators that reduce to the empty word are dropped (only the first one can,
// and only for <g=0, b=0, []>), so the relator count is 1 + 2g + 2l otherwise.
inline FinitePresentation fundamental_group(const SeifertInvariants& inv) {
  validate(inv);
  const long long l = inv.fiber_count();
  FinitePresentation pres;
  for (int i = 1; i <= l; ++i) pres.generators.push_back(Generator::x(i));
  for (const auto& g : detail::surface_generators(inv.genus)) pres.generators.push_back(g);
  pres.generators.push_back(Generator::h());

  Word first = power(Generator::h(), -inv.euler_b);
  first = concat(first, detail::surface_relator_part(inv.genus));
  for (int i = 1; i <= l; ++i) first = concat(first, power(Generator::x(i), 1));
  detail::push_nonempty(pres.relators, first);

  for (int i = 1; i <= inv.genus; ++i) {
    detail::push_nonempty(pres.relators,
                          commutator(power(Generator::a(i), 1), power(Generator::h(), 1)));
    detail::push_nonempty(pres.relators,
                          commutator(power(Generator::b(i), 1), power(Generator::h(), 1)));
  }
  for (int i = 1; i <= l; ++i)
    detail::push_nonempty(pres.relators,
                          commutator(power(Generator::x(i), 1), power(Generator::h(), 1)));
  for (int i = 1; i <= l; ++i) {
    const auto& f = inv.fibers[i - 1];
    detail::push_nonempty(
        pres.relators, concat(power(Generator::x(i), f.alpha), power(Generator::h(), f.beta)));
  }
  return pres;
}

// Quotient by the cyclic subgroup generated by the regular fiber h:
//   < x_1..x_l, a_1, b_1, .., a_g, b_g | [a_1,b_1]..[a_g,b_g] x_1..x_l,
//                                        x_1^alpha_1, .., x_l^alpha_l >
inline FinitePresentation quotient_by_h(const SeifertInvariants& inv) {
  validate(inv);
  const long long l = inv.fiber_count();
  FinitePresentation pres;
  for (int i = 1; i <= l; ++i) pres.generators.push_back(Generator::x(i));
  for (const auto& g : detail::surface_generators(inv.genus)) pres.generators.push_back(g);

  Word first = detail::surface_relator_part(inv.genus);
  for (int i = 1; i <= l; ++i) first = concat(first, power(Generator::x(i), 1));
  detail::push_nonempty(pres.relators, first);
  for (int i = 1; i <= l; ++i)
    detail::push_nonempty(pres.relators, power(Generator::x(i), inv.fibers[i - 1].alpha));
  return pres;
}

// Quotient by the horizontal subgroup, defined for exactly one exceptional
// fiber: the fiber class h then generates a cyclic group of order
// |b*alpha_1 + beta_1|, with 0 meaning infinite (nullopt).
inline std::optional<Integer> quotient_by_horizontal(const SeifertInvariants& inv) {
  validate(inv);
  if (inv.fiber_count() != 1)
    fail(errc::wrong_fiber_count, "horizontal quotient needs exactly one exceptional fiber, got " +
                                      std::to_string(inv.fiber_count()));
  Integer n = Integer(inv.euler_b) * inv.fibers[0].alpha + inv.fibers[0].beta;
  if (n == 0) return std::nullopt;
  return iabs(n);
}

// Smith normal form diagonal of an integer matrix: the nonzero invariant
// factors d_1 | d_2 | .. | d_r, each positive, r = rank. Exact arithmetic
// throughout; the input is consumed.
inline std::vector<Integer> smith_invariant_factors(std::vector<std::vector<Integer>> m) {
  std::vector<Integer> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) fail(errc::invalid_invariants, "ragged matrix");

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pick the entry of smallest nonzero magnitude as the pivot.
    std::size_t pi = t, pj = t;
    Integer best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Integer a = iabs(m[i][j]);
        if (best == 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;  // submatrix is zero
    std::swap(m[pi], m[t]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][t]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder smaller than pivot: promote the row
          std::swap(m[i], m[t]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][t]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry. If not,
      // fold the offending row into row t and go around again.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            clean = false;
          }
    }
    diag.push_back(iabs(m[t][t]));
    ++t;
  }
  return diag;
}

// Exponent-sum matrix: one row per relator, one column per generator.
inline std::vector<std::vector<Integer>> abelianized_matrix(const FinitePresentation& pres) {
  std::vector<std::vector<Integer>> m(pres.relators.size(),
                                      std::vector<Integer>(pres.generators.size(), Integer(0)));
  for (std::size_t r = 0; r < pres.relators.size(); ++r)
    for (const auto& syl : pres.relators[r]) {
      auto it = std::find(pres.generators.begin(), pres.generators.end(), syl.gen);
      if (it == pres.generators.end())
        fail(errc::invalid_invariants, "relator uses unlisted generator " + syl.gen.name());
      m[r][static_cast<std::size_t>(it - pres.generators.begin())] += syl.exp;
    }
  return m;
}

// Invariant factors of the abelianized group: the Smith normal form factors
// with trivial (= 1) entries dropped, padded with one 0 per free rank. The
// empty list is the trivial group; [0,0,0] is Z^3; [3] is Z/3.
inline std::vector<Integer> abelianization(const FinitePresentation& pres) {
  std::vector<Integer> diag =
      pres.relators.empty() ? std::vector<Integer>{} : smith_invariant_factors(abelianized_matrix(pres));
  std::vector<Integer> factors;
  for (const auto& d : diag)
    if (d != 1) factors.push_back(d);
  std::size_t rank = diag.size();
  for (std::size_t i = rank; i < pres.generators.size(); ++i) factors.push_back(0);
  return factors;
}

}  // namespace flip
