#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flip/errors.hpp"
#include "flip/seifert.hpp"
#include "flip/words.hpp"

namespace flip {

// How a vertical Heegaard surface is built from the fibration:
//   product      no exceptional fibers, b = 0: spine = fiber over a spine of
//                the base surface
//   generic      l >= 2: a proper nonempty subset of the exceptional fibers
//                (joined by arcs) spans one handlebody, the rest the other
//   single_spine l <= 1 (including nontrivial circle bundles): one fiber,
//                exceptional if present, spans a side on its own
enum class VerticalCase { product, generic, single_spine };

inline const char* vertical_case_name(VerticalCase c) {
  switch (c) {
    case VerticalCase::product: return "product";
    case VerticalCase::generic: return "generic";
    case VerticalCase::single_spine: return "single_spine";
  }
  return "unknown";
}

// A vertical splitting, identified by which exceptional fibers sit in the
// first handlebody. h1_fibers holds sorted 1-based indices into the
// normalized fiber list. canonical means h1_fibers is the lexicographically
// smaller of subset/complement.
struct VerticalSplitting {
  VerticalCase construction_case = VerticalCase::single_spine;
  std::vector<int> h1_fibers;
  bool canonical = false;

  friend bool operator==(const VerticalSplitting&, const VerticalSplitting&) = default;
};

// A Heegaard splitting as handed to the classifier: vertical, horizontal, or
// an n-fold stabilization of another splitting.
struct SplittingDescriptor {
  enum class Kind { vertical, horizontal, stabilized };

  Kind kind = Kind::horizontal;
  std::optional<VerticalSplitting> vertical;        // kind == vertical
  std::shared_ptr<const SplittingDescriptor> base;  // kind == stabilized
  long long extra_genus = 0;                        // kind == stabilized, >= 1

  static SplittingDescriptor make_vertical(VerticalSplitting v) {
    SplittingDescriptor d;
    d.kind = Kind::vertical;
    d.vertical = std::move(v);
    return d;
  }
  static SplittingDescriptor make_horizontal() {
    SplittingDescriptor d;
    d.kind = Kind::horizontal;
    return d;
  }
  static SplittingDescriptor make_stabilized(SplittingDescriptor base, long long extra_genus) {
    SplittingDescriptor d;
    d.kind = Kind::stabilized;
    d.base = std::make_shared<SplittingDescriptor>(std::move(base));
    d.extra_genus = extra_genus;
    return d;
  }
};

namespace detail {

inline std::vector<int> complement_of(const std::vector<int>& subset, long long l) {
  std::vector<int> out;
  for (int i = 1; i <= l; ++i)
    if (!std::binary_search(subset.begin(), subset.end(), i)) out.push_back(i);
  return out;
}

inline std::string indices_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

}  // namespace detail

// Replaces h1_fibers by its complement if the complement is lexicographically
// smaller (as sorted index sequences), and marks the result canonical.
// Idempotent; the two labelings describe the same splitting surface.
inline VerticalSplitting canonicalize(VerticalSplitting s, const SeifertInvariants& inv) {
  SeifertInvariants n = normalized(inv);
  std::sort(s.h1_fibers.begin(), s.h1_fibers.end());
  if (s.construction_case == VerticalCase::generic) {
    std::vector<int> comp = detail::complement_of(s.h1_fibers, n.fiber_count());
    if (std::lexicographical_compare(comp.begin(), comp.end(), s.h1_fibers.begin(),
                                     s.h1_fibers.end()))
      s.h1_fibers = std::move(comp);
  }
  s.canonical = true;
  return s;
}

// All canonical vertical splittings, on normalized invariants:
//   l = 0, b  = 0  ->  the single product splitting
//   l = 0, b != 0  ->  the single single-spine splitting (circle bundle)
//   l = 1          ->  the single single-spine splitting around the fiber
//   l >= 2         ->  one generic splitting per unordered partition of the
//                      fibers into two nonempty sets: 2^(l-1) - 1 of them,
//                      each stored with the part containing fiber 1.
inline std::vector<VerticalSplitting> enumerate_vertical(const SeifertInvariants& inv) {
  SeifertInvariants n = normalized(inv);
  const long long l = n.fiber_count();
  std::vector<VerticalSplitting> out;
  if (l == 0) {
    out.push_back({n.euler_b == 0 ? VerticalCase::product : VerticalCase::single_spine, {}, true});
    return out;
  }
  if (l == 1) {
    out.push_back({VerticalCase::single_spine, {1}, true});
    return out;
  }
  if (l > 24)
    fail(errc::invalid_invariants,
         "refusing to enumerate 2^" + std::to_string(l - 1) + " - 1 splittings");
  // Subsets containing fiber 1 (that's exactly the lex-smaller part), proper.
  const unsigned long long masks = 1ull << (l - 1);
  for (unsigned long long mask = 0; mask + 1 < masks; ++mask) {
    VerticalSplitting s{VerticalCase::generic, {1}, true};
    for (long long bit = 0; bit < l - 1; ++bit)
      if (mask & (1ull << bit)) s.h1_fibers.push_back(static_cast<int>(bit + 2));
    out.push_back(std::move(s));
  }
  return out;
}

// The construction case a vertical splitting of these invariants must have;
// used when a descriptor arrives without one.
inline VerticalCase infer_vertical_case(const SeifertInvariants& inv) {
  SeifertInvariants n = normalized(inv);
  if (n.fiber_count() >= 2) return VerticalCase::generic;
  if (n.fiber_count() == 1) return VerticalCase::single_spine;
  return n.euler_b == 0 ? VerticalCase::product : VerticalCase::single_spine;
}

// Heegaard genus of the splitting surface: 2g + l - 1 for generic splittings,
// 2g + 1 for product and single-spine ones.
inline long long genus_of(const VerticalSplitting& s, const SeifertInvariants& inv) {
  SeifertInvariants n = normalized(inv);
  if (s.construction_case == VerticalCase::generic) return 2 * n.genus + n.fiber_count() - 1;
  return 2 * n.genus + 1;
}

// Checks a descriptor against the (normalized) invariants it claims to
// describe; throws inconsistent_descriptor on any mismatch.
inline void validate_descriptor(const SplittingDescriptor& d, const SeifertInvariants& inv) {
  SeifertInvariants n = normalized(inv);
  const long long l = n.fiber_count();
  switch (d.kind) {
    case SplittingDescriptor::Kind::horizontal:
      return;
    case SplittingDescriptor::Kind::stabilized:
      if (!d.base) fail(errc::inconsistent_descriptor, "stabilized splitting needs a base");
      if (d.extra_genus < 1)
        fail(errc::inconsistent_descriptor, "stabilization must add at least one handle");
      validate_descriptor(*d.base, inv);
      return;
    case SplittingDescriptor::Kind::vertical:
      break;
  }
  if (!d.vertical) fail(errc::inconsistent_descriptor, "vertical splitting data missing");
  const VerticalSplitting& s = *d.vertical;
  std::vector<int> idx = s.h1_fibers;
  std::sort(idx.begin(), idx.end());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > l)
      fail(errc::inconsistent_descriptor,
           "fiber index " + std::to_string(idx[i]) + " out of range 1.." + std::to_string(l));
    if (i && idx[i] == idx[i - 1])
      fail(errc::inconsistent_descriptor, "duplicate fiber index " + std::to_string(idx[i]));
  }
  switch (s.construction_case) {
    case VerticalCase::product:
      if (l != 0 || n.euler_b != 0)
        fail(errc::inconsistent_descriptor, "product splittings need l = 0 and b = 0");
      break;
    case VerticalCase::single_spine:
      if (l > 1)
        fail(errc::inconsistent_descriptor, "single-spine splittings need at most one exceptional fiber");
      if (l == 0 && n.euler_b == 0)
        fail(errc::inconsistent_descriptor, "trivial bundle has a product splitting, not single-spine");
      if (l == 1 && idx != std::vector<int>{1})
        fail(errc::inconsistent_descriptor, "single-spine splitting must contain the exceptional fiber");
      break;
    case VerticalCase::generic:
      if (l < 2) fail(errc::inconsistent_descriptor, "generic splittings need l >= 2");
      if (idx.empty() || static_cast<long long>(idx.size()) >= l)
        fail(errc::inconsistent_descriptor, "generic splittings need a proper nonempty fiber subset");
      break;
  }
}

// True when the descriptor is declared stabilized, or when it is a vertical
// splitting of strictly larger genus than some enumerated vertical splitting.
inline bool is_stabilized(const SplittingDescriptor& d, const SeifertInvariants& inv) {
  if (d.kind == SplittingDescriptor::Kind::stabilized) return true;
  if (d.kind != SplittingDescriptor::Kind::vertical) return false;
  validate_descriptor(d, inv);
  long long g = genus_of(*d.vertical, inv);
  long long min_genus = g;
  for (const auto& s : enumerate_vertical(inv)) min_genus = std::min(min_genus, genus_of(s, inv));
  return g > min_genus;
}

// The two generating systems induced on pi_1 / <h> by a generic vertical
// splitting. With k = |h1_fibers| and one distinguished complement index
// omitted entirely:
//   A = x_i^nu_i for i in h1_fibers ascending,
//       x_j for the remaining complement indices ascending,
//       a_1, b_1, .., a_g, b_g
//   B = x_j^nu_j for the remaining complement indices descending,
//       x_i for i in h1_fibers descending,
//       a_1, b_1, .., a_g, b_g
// Both have 2g + l - 1 entries. exponents supplies nu_i per fiber (index i-1);
// the default omitted index is the smallest complement index.
inline std::pair<GeneratingSystem, GeneratingSystem> induced_generating_systems(
    const VerticalSplitting& s, const SeifertInvariants& inv,
    const std::vector<long long>& exponents, std::optional<int> omitted_index = {}) {
  SeifertInvariants n = normalized(inv);
  const long long l = n.fiber_count();
  if (s.construction_case != VerticalCase::generic)
    fail(errc::wrong_case, "induced generating systems are defined for generic vertical splittings");
  validate_descriptor(SplittingDescriptor::make_vertical(s), n);
  if (static_cast<long long>(exponents.size()) != l)
    fail(errc::exponent_count_mismatch, "need one exponent per fiber: got " +
                                            std::to_string(exponents.size()) + ", want " +
                                            std::to_string(l));

  std::vector<int> h1 = s.h1_fibers;
  std::sort(h1.begin(), h1.end());
  std::vector<int> comp = detail::complement_of(h1, l);
  int omit = omitted_index.value_or(comp.front());
  if (!std::binary_search(comp.begin(), comp.end(), omit))
    fail(errc::inconsistent_descriptor,
         "omitted index " + std::to_string(omit) + " is not in the complement " +
             detail::indices_str(comp));

  GeneratingSystem A, B;
  for (int i : h1) A.push_back(power(Generator::x(i), exponents[i - 1]));
  for (int j : comp)
    if (j != omit) A.push_back(power(Generator::x(j), 1));
  for (auto it = comp.rbegin(); it != comp.rend(); ++it)
    if (*it != omit) B.push_back(power(Generator::x(*it), exponents[*it - 1]));
  for (auto it = h1.rbegin(); it != h1.rend(); ++it) B.push_back(power(Generator::x(*it), 1));
  for (int i = 1; i <= n.genus; ++i) {
    A.push_back(power(Generator::a(i), 1));
    A.push_back(power(Generator::b(i), 1));
    B.push_back(power(Generator::a(i), 1));
    B.push_back(power(Generator::b(i), 1));
  }
  return {std::move(A), std::move(B)};
}

inline std::pair<GeneratingSystem, GeneratingSystem> induced_generating_systems(
    const VerticalSplitting& s, const SeifertInvariants& inv,
    std::optional<int> omitted_index = {}) {
  return induced_generating_systems(
      s, inv, std::vector<long long>(normalized(inv).fibers.size(), 1), omitted_index);
}

}  // namespace flip
