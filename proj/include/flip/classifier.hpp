#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flip/errors.hpp"
#include "flip/nielsen.hpp"
#include "flip/presentations.hpp"
#include "flip/seifert.hpp"
#include "flip/splittings.hpp"
#include "flip/words.hpp"

namespace flip {

enum class Outcome { flippable, not_flippable, undetermined };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::flippable: return "flippable";
    case Outcome::not_flippable: return "not_flippable";
    case Outcome::undetermined: return "undetermined";
  }
  return "unknown";
}

// The rules, in evaluation order R1..R8. The first matching rule decides.
enum class RuleId {
  stabilized,        // R1
  horizontal,        // R2
  product,           // R3
  circle_bundle,     // R4
  lens,              // R5
  vertical_coprime,  // R6
  vertical_fg_prime, // R7
  fallback,          // R8
};

inline const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::stabilized: return "R1";
    case RuleId::horizontal: return "R2";
    case RuleId::product: return "R3";
    case RuleId::circle_bundle: return "R4";
    case RuleId::lens: return "R5";
    case RuleId::vertical_coprime: return "R6";
    case RuleId::vertical_fg_prime: return "R7";
    case RuleId::fallback: return "R8";
  }
  return "R?";
}

inline const char* rule_label(RuleId r) {
  switch (r) {
    case RuleId::stabilized: return "stabilized";
    case RuleId::horizontal: return "horizontal";
    case RuleId::product: return "product";
    case RuleId::circle_bundle: return "circle-bundle";
    case RuleId::lens: return "lens";
    case RuleId::vertical_coprime: return "vertical-coprime";
    case RuleId::vertical_fg_prime: return "vertical-fg-prime";
    case RuleId::fallback: return "fallback";
  }
  return "?";
}

// The mathematical fact each rule applies, quoted in verdict traces.
inline const char* rule_citation(RuleId r) {
  switch (r) {
    case RuleId::stabilized:
      return "stabilized Heegaard splittings are flippable";
    case RuleId::horizontal:
      return "horizontal Heegaard splittings of Seifert fibered spaces are flippable";
    case RuleId::product:
      return "the standard splitting of a trivial circle bundle is flippable";
    case RuleId::circle_bundle:
      return "vertical splittings of circle bundles over surfaces are flippable";
    case RuleId::lens:
      return "a genus-1 splitting of L(p,q) is flippable iff q = 1 (mod p)";
    case RuleId::vertical_coprime:
      return "irreducible vertical splittings with pairwise coprime multiplicities >= 3 "
             "(and l >= 3 or g >= 1) are not flippable";
    case RuleId::vertical_fg_prime:
      return "Nielsen rigidity of the induced generating systems, multiplicity-2 fibers "
             "allowed, forbids flipping when coprime multiplicities >= 3 sit in opposite "
             "handlebodies";
    case RuleId::fallback:
      return "no implemented criterion applies";
  }
  return "";
}

struct RuleFiring {
  RuleId rule;
  bool matched = false;
  std::string detail;

  friend bool operator==(const RuleFiring&, const RuleFiring&) = default;
};

// Result of the rule pipeline. The trace lists every rule that was evaluated,
// in order; the last entry is the one that fired (matched) and determined the
// outcome, except that R8 fires as Undetermined.
struct Verdict {
  Outcome outcome = Outcome::undetermined;
  std::vector<RuleFiring> trace;
};

namespace detail {

inline std::string alphas_str(const SeifertInvariants& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.fibers.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(n.fibers[i].alpha);
  }
  return s + ")";
}

}  // namespace detail

// Decides flippability of the splitting d of the manifold given by inv.
// lens_override asserts the manifold is L(p, q); it takes precedence over the
// derived classification and requires genus 0 with at most two exceptional
// fibers. Throws inconsistent_descriptor when d (or the override) does not
// fit the invariants.
inline Verdict classify_flippability(const SeifertInvariants& inv, const SplittingDescriptor& d,
                                     const std::optional<LensParams>& lens_override = {}) {
  SeifertInvariants n = normalized(inv);
  validate_descriptor(d, n);
  const long long l = n.fiber_count();

  Verdict v;
  auto evaluated = [&v](RuleId r, bool matched, std::string detail) {
    v.trace.push_back({r, matched, std::move(detail)});
    return matched;
  };

  // R1: any stabilized splitting flips.
  if (evaluated(RuleId::stabilized, is_stabilized(d, n),
                d.kind == SplittingDescriptor::Kind::stabilized
                    ? "descriptor is declared stabilized"
                    : "splitting genus does not exceed the vertical minimum")) {
    v.outcome = Outcome::flippable;
    return v;
  }

  // R2: horizontal splittings flip.
  if (evaluated(RuleId::horizontal, d.kind == SplittingDescriptor::Kind::horizontal,
                d.kind == SplittingDescriptor::Kind::horizontal ? "descriptor is horizontal"
                                                                : "descriptor is not horizontal")) {
    v.outcome = Outcome::flippable;
    return v;
  }

  // Manifold recognition; for two exceptional fibers over genus 0 the lens
  // parameter q may be underivable, which R5/R8 report rather than error.
  std::optional<ManifoldClass> cls;
  bool lens_q_unknown = false;
  try {
    cls = classify_manifold(n, lens_override);
  } catch (const Error& e) {
    if (e.code() != errc::lens_parameter_unknown) throw;
    lens_q_unknown = true;
  }

  // R3: trivial bundle (surface x S^1).
  bool is_product = cls && cls->kind == ManifoldKind::product;
  if (evaluated(RuleId::product, is_product,
                is_product ? "manifold is a trivial circle bundle"
                           : "manifold is not a trivial circle bundle")) {
    v.outcome = Outcome::flippable;
    return v;
  }

  // R4: nontrivial circle bundle.
  bool is_bundle = cls && cls->kind == ManifoldKind::circle_bundle;
  if (evaluated(RuleId::circle_bundle, is_bundle,
                is_bundle ? "manifold is a circle bundle with e = " + std::to_string(n.euler_b)
                          : "manifold is not a nontrivial circle bundle")) {
    v.outcome = Outcome::flippable;
    return v;
  }

  // R5: genus-1 splittings of lens spaces, by the residue of q mod p.
  bool genus1_vertical =
      d.kind == SplittingDescriptor::Kind::vertical && genus_of(*d.vertical, n) == 1;
  bool lens_shape = (cls && cls->kind == ManifoldKind::lens_space) || lens_q_unknown;
  if (lens_shape && genus1_vertical && !lens_q_unknown) {
    const LensParams& L = *cls->lens;
    bool flips = L.q % L.p == Integer(1) % L.p;
    std::string src = lens_override ? "override" : "derived, q = alpha mod p convention";
    evaluated(RuleId::lens, true,
              "L(" + L.p.str() + "," + L.q.str() + ") (" + src + "): q = 1 (mod p) " +
                  (flips ? "holds" : "fails"));
    v.outcome = flips ? Outcome::flippable : Outcome::not_flippable;
    return v;
  }
  evaluated(RuleId::lens, false,
            lens_q_unknown
                ? (genus1_vertical
                       ? "lens space with two exceptional fibers: q underivable, pass explicit (p, q)"
                       : "lens space with underivable q and splitting is not genus 1")
                : (lens_shape ? "splitting is not genus 1" : "manifold is not a recognized lens space"));

  // R6 and R7 concern generic vertical splittings only.
  bool generic = d.kind == SplittingDescriptor::Kind::vertical &&
                 d.vertical->construction_case == VerticalCase::generic;

  bool all_ge3 = true, pairwise_coprime = true;
  for (const auto& f : n.fibers) all_ge3 = all_ge3 && f.alpha >= 3;
  for (std::size_t i = 0; i < n.fibers.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < n.fibers.size(); ++j)
      if (gcd_ll(n.fibers[i].alpha, n.fibers[j].alpha) != 1) {
        pairwise_coprime = false;
        break;
      }
  bool big_enough = l >= 3 || n.genus >= 1;

  bool r6 = generic && big_enough && all_ge3 && pairwise_coprime;
  if (evaluated(RuleId::vertical_coprime, r6,
                !generic ? "not a generic vertical splitting"
                         : (std::string("alphas ") + detail::alphas_str(n) +
                            (r6 ? ": pairwise coprime, all >= 3"
                                : (!big_enough ? ": needs l >= 3 or genus >= 1"
                                               : (!all_ge3 ? ": some alpha < 3"
                                                           : ": not pairwise coprime"))))) ) {
    v.outcome = Outcome::not_flippable;
    return v;
  }

  // R7: multiplicity-2 fibers allowed, with threshold counts
  // m = #{alpha >= 3}, t = #{alpha = 2}: t > 0 and m >= 5 for even t,
  // m >= 7 for odd t, plus a coprime pair of alphas >= 3 split across the
  // two handlebodies.
  long long m_count = 0, two_count = 0;
  for (const auto& f : n.fibers) {
    if (f.alpha >= 3) ++m_count;
    if (f.alpha == 2) ++two_count;
  }
  bool threshold = two_count > 0 && (two_count % 2 == 0 ? m_count >= 5 : m_count >= 7);
  bool cross_pair = false;
  if (generic) {
    std::vector<int> h1 = d.vertical->h1_fibers;
    std::sort(h1.begin(), h1.end());
    std::vector<int> comp = detail::complement_of(h1, l);
    for (int i : h1)
      for (int j : comp) {
        long long ai = n.fibers[i - 1].alpha, aj = n.fibers[j - 1].alpha;
        if (ai >= 3 && aj >= 3 && gcd_ll(ai, aj) == 1) cross_pair = true;
      }
  }
  bool r7 = generic && threshold && cross_pair;
  {
    std::string reading = "reading m = #{alpha >= 3} = " + std::to_string(m_count) +
                          ", n = #{alpha = 2} = " + std::to_string(two_count);
    std::string det;
    if (!generic)
      det = "not a generic vertical splitting";
    else if (r7)
      det = reading + ": threshold met and coprime alphas >= 3 sit in opposite handlebodies";
    else if (!threshold)
      det = reading + ": threshold requires n > 0 and m >= " + (two_count % 2 == 0 ? "5" : "7");
    else
      det = reading + ": no coprime pair of alphas >= 3 in opposite handlebodies";
    if (evaluated(RuleId::vertical_fg_prime, r7, det)) {
      v.outcome = Outcome::not_flippable;
      return v;
    }
  }

  // R8: nothing applied.
  std::string nearest;
  if (lens_q_unknown && genus1_vertical)
    nearest = "nearest rule R5 (lens): supply explicit (p, q) to decide";
  else if (generic && all_ge3)
    nearest = "nearest rule R6 (vertical-coprime): multiplicities are not pairwise coprime";
  else if (generic)
    nearest = "nearest rule R7 (vertical-fg-prime): threshold or partition condition unmet";
  else
    nearest = "no classification rule applies to this descriptor";
  evaluated(RuleId::fallback, true, nearest);
  v.outcome = Outcome::undetermined;
  return v;
}

struct OracleOptions {
  std::optional<LensParams> lens_override;
  std::vector<long long> exponents;  // empty = all ones
  std::optional<int> omitted_index;
  std::uint64_t node_cap = default_node_cap;
};

// Outcome of replaying a verdict against the Nielsen-equivalence oracle in a
// finite quotient. Equivalence of the images is necessary for flippability,
// so the only inconsistency is flippable + not_equivalent.
struct ConsistencyReport {
  Verdict verdict;
  Equivalence oracle = Equivalence::exhausted;
  bool contradiction = false;
  std::string note;
  ElementTuple tuple_a, tuple_b;
};

// Replays the classifier against the oracle.
//
// With lens_override: models L(p, q) directly. G must have order p; the two
// solid torus cores map to q (or the image the single-entry assignment picks)
// and to 1, and the relator x^p is checked against the assignment.
//
// Without: d must be a generic vertical splitting. The assignment must send
// the generators of quotient_by_h(inv) into G killing every relator; the two
// induced generating systems are evaluated and compared.
inline ConsistencyReport oracle_consistency_check(const SeifertInvariants& inv,
                                                  const SplittingDescriptor& d,
                                                  const FiniteGroupTable& G,
                                                  const std::map<Generator, int>& assignment,
                                                  const OracleOptions& opt = {}) {
  SeifertInvariants n = normalized(inv);
  validate_descriptor(d, n);

  ConsistencyReport rep;
  rep.verdict = classify_flippability(inv, d, opt.lens_override);

  if (opt.lens_override) {
    LensParams L = normalize_lens(opt.lens_override->p, opt.lens_override->q);
    if (Integer(G.order) != L.p)
      fail(errc::inconsistent_descriptor,
           "lens oracle needs a group of order p = " + L.p.str() + ", got order " +
               std::to_string(G.order));
    int image = static_cast<int>(L.q);
    if (assignment.size() == 1) {
      image = assignment.begin()->second;
      if (image < 0 || image >= G.order) fail(errc::bad_tuple, "assigned image out of range");
    } else if (!assignment.empty()) {
      fail(errc::inconsistent_descriptor, "lens oracle takes a single-generator assignment");
    }
    if (G.pow(image, static_cast<long long>(G.order)) != 0)
      fail(errc::relator_violation, "assignment does not kill the lens relator x^p");
    rep.tuple_a = {image};
    rep.tuple_b = {1 % G.order};
  } else {
    if (d.kind != SplittingDescriptor::Kind::vertical ||
        d.vertical->construction_case != VerticalCase::generic)
      fail(errc::wrong_case,
           "oracle needs a generic vertical splitting, or a lens override for genus-1 cases");
    FinitePresentation Q = quotient_by_h(n);
    for (const auto& r : Q.relators)
      if (evaluate_word(G, assignment, r) != 0)
        fail(errc::relator_violation, "assignment does not kill relator " + word_str(r));
    std::vector<long long> exps =
        opt.exponents.empty() ? std::vector<long long>(n.fibers.size(), 1) : opt.exponents;
    auto [A, B] = induced_generating_systems(*d.vertical, n, exps, opt.omitted_index);
    for (const auto& w : A) rep.tuple_a.push_back(evaluate_word(G, assignment, w));
    for (const auto& w : B) rep.tuple_b.push_back(evaluate_word(G, assignment, w));
  }

  rep.oracle = nielsen_equivalent_finite(G, rep.tuple_a, rep.tuple_b, opt.node_cap);
  rep.contradiction =
      rep.verdict.outcome == Outcome::flippable && rep.oracle == Equivalence::not_equivalent;
  if (rep.contradiction)
    rep.note = "contradiction: classifier says flippable but the image systems are not Nielsen equivalent";
  else if (rep.verdict.outcome == Outcome::not_flippable && rep.oracle == Equivalence::equivalent)
    rep.note = "oracle is necessary-condition only: equivalence here does not make the splitting flippable";
  else if (rep.oracle == Equivalence::exhausted)
    rep.note = "orbit search hit the node cap before reaching a conclusion";
  else
    rep.note = "consistent";
  return rep;
}

}  // namespace flip
