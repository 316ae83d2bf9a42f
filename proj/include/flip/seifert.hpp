#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "flip/errors.hpp"
#include "flip/numeric.hpp"

namespace flip {

// One exceptional fiber, recorded as the unnormalized Seifert pair
// (alpha, beta): alpha is the multiplicity, beta the meridian slope.
struct ExceptionalFiber {
  long long alpha = 1;
  long long beta = 0;

  friend bool operator==(const ExceptionalFiber&, const ExceptionalFiber&) = default;
};

// Closed-form invariants <g, b, (alpha_1,beta_1), ..., (alpha_l,beta_l)> of a
// totally orientable Seifert fibered space: orientable base of genus g,
// obstruction term b, and l exceptional fibers.
struct SeifertInvariants {
  long long genus = 0;
  long long euler_b = 0;
  std::vector<ExceptionalFiber> fibers;

  long long fiber_count() const { return static_cast<long long>(fibers.size()); }

  friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

// Checks the type invariants and hands the same object back so calls can be
// chained. alpha = 1 fibers are legal here; normalized() folds them away.
inline const SeifertInvariants& validate(const SeifertInvariants& inv) {
  if (inv.genus < 0)
    fail(errc::invalid_invariants, "genus must be non-negative, got " + std::to_string(inv.genus));
  for (std::size_t i = 0; i < inv.fibers.size(); ++i) {
    const auto& f = inv.fibers[i];
    if (f.alpha < 1)
      fail(errc::invalid_multiplicity,
           "fiber " + std::to_string(i + 1) + ": alpha must be >= 1, got " + std::to_string(f.alpha));
    if (f.alpha > 1 && gcd_ll(f.alpha, f.beta) != 1)
      fail(errc::non_coprime_slope,
           "fiber " + std::to_string(i + 1) + ": gcd(" + std::to_string(f.alpha) + ", |" +
               std::to_string(f.beta) + "|) != 1");
  }
  return inv;
}

// Folds every (1, beta) fiber into the obstruction term (b += beta); such a
// fiber is a regular fiber in disguise. Relative order of the alpha >= 2
// fibers is preserved, so downstream fiber indices refer to this list.
inline SeifertInvariants normalized(const SeifertInvariants& inv) {
  validate(inv);
  SeifertInvariants out;
  out.genus = inv.genus;
  out.euler_b = inv.euler_b;
  for (const auto& f : inv.fibers) {
    if (f.alpha == 1)
      out.euler_b += f.beta;
    else
      out.fibers.push_back(f);
  }
  return out;
}

// Euler number e = b + sum(beta_i / alpha_i), exact. Invariant under fiber
// permutation and under normalized().
inline Rational euler_number(const SeifertInvariants& inv) {
  validate(inv);
  Rational e(Integer(inv.euler_b));
  for (const auto& f : inv.fibers) e += Rational(Integer(f.beta), Integer(f.alpha));
  return e;
}

// Order of the first homology group; nullopt means infinite. Finite orders
// only occur over genus 0, where the order is the determinant
// |b*prod(alpha_i) + sum_i beta_i*prod_{j!=i} alpha_j|.
inline std::optional<Integer> first_homology_order(const SeifertInvariants& inv) {
  validate(inv);
  if (inv.genus > 0) return std::nullopt;
  Integer det = inv.euler_b;
  for (const auto& f : inv.fibers) det *= f.alpha;
  for (std::size_t i = 0; i < inv.fibers.size(); ++i) {
    Integer term = inv.fibers[i].beta;
    for (std::size_t j = 0; j < inv.fibers.size(); ++j)
      if (j != i) term *= inv.fibers[j].alpha;
    det += term;
  }
  if (det == 0) return std::nullopt;
  return iabs(det);
}

// Lens space parameters with q reduced mod p into [0, p). The q = 0 residue
// only occurs for p = 1 (the 3-sphere); otherwise 0 < q < p and gcd(p,q) = 1.
struct LensParams {
  Integer p;
  Integer q;

  friend bool operator==(const LensParams&, const LensParams&) = default;
};

inline LensParams normalize_lens(const Integer& p, const Integer& q) {
  if (p < 1) fail(errc::inconsistent_descriptor, "lens parameter p must be >= 1, got " + p.str());
  Integer r = q % p;
  if (r < 0) r += p;
  if (p > 1 && r == 0)
    fail(errc::inconsistent_descriptor, "lens parameter q must be nonzero mod p");
  if (boost::multiprecision::gcd(p, r) != 1 && p > 1)
    fail(errc::inconsistent_descriptor,
         "lens parameters must be coprime, got p=" + p.str() + " q=" + q.str());
  return {p, r};
}

enum class ManifoldKind { product, circle_bundle, lens_space, general };

inline const char* manifold_kind_name(ManifoldKind k) {
  switch (k) {
    case ManifoldKind::product: return "product";
    case ManifoldKind::circle_bundle: return "circle_bundle";
    case ManifoldKind::lens_space: return "lens_space";
    case ManifoldKind::general: return "general";
  }
  return "unknown";
}

struct ManifoldClass {
  ManifoldKind kind = ManifoldKind::general;
  std::optional<LensParams> lens;  // set iff kind == lens_space

  friend bool operator==(const ManifoldClass&, const ManifoldClass&) = default;
};

// Coarse manifold recognition on normalized invariants, in dispatch order:
//   product       l = 0, b = 0   (surface x S^1)
//   circle_bundle l = 0, b != 0
//   lens_space    genus 0, l <= 2, finite first homology
//   general       everything else
// For l = 1 the lens parameters are p = |b*alpha + beta| and q = alpha mod p;
// the q residue is a fixed convention of this library, chosen so that the
// q = 1 (mod p) criterion is well defined. For l = 2 there is no implemented
// derivation: callers must pass lens_override, else lens_parameter_unknown.
inline ManifoldClass classify_manifold(const SeifertInvariants& inv,
                                       const std::optional<LensParams>& lens_override = {}) {
  SeifertInvariants n = normalized(inv);
  const long long l = n.fiber_count();
  if (lens_override) {
    if (n.genus != 0 || l > 2)
      fail(errc::inconsistent_descriptor,
           "lens override requires genus 0 and at most two exceptional fibers");
    return {ManifoldKind::lens_space, normalize_lens(lens_override->p, lens_override->q)};
  }
  if (l == 0 && n.euler_b == 0) return {ManifoldKind::product, std::nullopt};
  if (l == 0) return {ManifoldKind::circle_bundle, std::nullopt};
  if (n.genus == 0 && l <= 2) {
    auto order = first_homology_order(n);
    if (order) {
      if (l == 2)
        fail(errc::lens_parameter_unknown,
             "lens space of order " + order->str() +
                 " with two exceptional fibers: q is not derivable, pass explicit (p, q)");
      // l == 1 here: p >= 1 and gcd(p, alpha mod p) = gcd(beta, alpha) = 1.
      return {ManifoldKind::lens_space, normalize_lens(*order, Integer(n.fibers[0].alpha))};
    }
  }
  return {ManifoldKind::general, std::nullopt};
}

// Canonical invariants realizing L(p, q): <g=0, b=1, [(q', p-q')]> with
// q' = q mod p, so the derived parameters round-trip through
// classify_manifold. For q' <= 1 that fiber would be regular, so the circle
// bundle form <0, p, []> is returned instead.
inline SeifertInvariants lens_space_invariants(const LensParams& lens) {
  LensParams L = normalize_lens(lens.p, lens.q);
  if (L.p > (std::numeric_limits<long long>::max)())
    fail(errc::invalid_invariants, "lens parameter p too large to realize: " + L.p.str());
  long long p = static_cast<long long>(L.p);
  long long q = static_cast<long long>(L.q);
  SeifertInvariants inv;
  inv.genus = 0;
  if (q <= 1) {
    inv.euler_b = p;
    return inv;
  }
  inv.euler_b = 1;
  inv.fibers.push_back({q, p - q});
  return inv;
}

}  // namespace flip
