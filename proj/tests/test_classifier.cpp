#include <catch2/catch_amalgamated.hpp>
#include <flip/flip.hpp>

#include <random>

#include "helpers.hpp"

using namespace flip;
using testutil::expect_errc;

namespace {

SeifertInvariants inv357() { return {0, -1, {{3, 1}, {5, 1}, {7, 1}}}; }

SplittingDescriptor generic_split(std::vector<int> h1) {
  return SplittingDescriptor::make_vertical({VerticalCase::generic, std::move(h1), false});
}

SplittingDescriptor spine_split(std::vector<int> h1 = {1}) {
  return SplittingDescriptor::make_vertical({VerticalCase::single_spine, std::move(h1), false});
}

// (rule, matched) pairs, for comparing whole traces
std::vector<std::pair<std::string, bool>> trace_shape(const Verdict& v) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& f : v.trace) out.push_back({rule_name(f.rule), f.matched});
  return out;
}

const RuleFiring& last_firing(const Verdict& v) { return v.trace.back(); }

using Shape = std::vector<std::pair<std::string, bool>>;

}  // namespace

TEST_CASE("stabilized splittings flip") {
  auto d = SplittingDescriptor::make_stabilized(generic_split({1}), 1);
  Verdict v = classify_flippability(inv357(), d);
  CHECK(v.outcome == Outcome::flippable);
  CHECK(trace_shape(v) == Shape{{"R1", true}});
  CHECK(last_firing(v).detail == "descriptor is declared stabilized");
}

TEST_CASE("horizontal splittings flip") {
  Verdict v = classify_flippability(inv357(), SplittingDescriptor::make_horizontal());
  CHECK(v.outcome == Outcome::flippable);
  CHECK(trace_shape(v) == Shape{{"R1", false}, {"R2", true}});
}

TEST_CASE("trivial bundle splittings flip") {
  auto d = SplittingDescriptor::make_vertical({VerticalCase::product, {}, false});
  Verdict v = classify_flippability({1, 0, {}}, d);
  CHECK(v.outcome == Outcome::flippable);
  CHECK(trace_shape(v) == Shape{{"R1", false}, {"R2", false}, {"R3", true}});
}

TEST_CASE("circle bundle splittings flip") {
  Verdict v = classify_flippability({1, 2, {}}, spine_split({}));
  CHECK(v.outcome == Outcome::flippable);
  CHECK(trace_shape(v) == Shape{{"R1", false}, {"R2", false}, {"R3", false}, {"R4", true}});
  CHECK(last_firing(v).detail.find("e = 2") != std::string::npos);
}

TEST_CASE("lens spaces flip exactly when q is 1 mod p") {
  // override asserts L(4,1); without it these invariants read as a circle bundle
  Verdict v =
      classify_flippability(lens_space_invariants({4, 1}), spine_split({}), LensParams{4, 1});
  CHECK(v.outcome == Outcome::flippable);
  CHECK(trace_shape(v) ==
        Shape{{"R1", false}, {"R2", false}, {"R3", false}, {"R4", false}, {"R5", true}});
  CHECK(last_firing(v).detail.find("L(4,1) (override)") != std::string::npos);
  CHECK(last_firing(v).detail.find("holds") != std::string::npos);

  // derived parameters from a one-fiber description
  Verdict w = classify_flippability(lens_space_invariants({7, 2}), spine_split());
  CHECK(w.outcome == Outcome::not_flippable);
  CHECK(last_firing(w).rule == RuleId::lens);
  CHECK(last_firing(w).detail.find("L(7,2) (derived, q = alpha mod p convention)") !=
        std::string::npos);
  CHECK(last_firing(w).detail.find("fails") != std::string::npos);

  // one-fiber forms with q = alpha mod p landing on either side of 1
  Verdict l51 = classify_flippability({0, 1, {{6, -1}}}, spine_split());  // L(5,1)
  CHECK(l51.outcome == Outcome::flippable);
  CHECK(last_firing(l51).detail.find("L(5,1)") != std::string::npos);
  CHECK(classify_flippability(lens_space_invariants({5, 4}), spine_split()).outcome ==
        Outcome::not_flippable);  // q = -1 does not count
  Verdict rp3 = classify_flippability({0, 1, {{3, -1}}}, spine_split());  // L(2,1)
  CHECK(rp3.outcome == Outcome::flippable);
  CHECK(last_firing(rp3).detail.find("L(2,1)") != std::string::npos);
}

TEST_CASE("pairwise coprime multiplicities block flipping") {
  for (const auto& s : enumerate_vertical(inv357())) {
    Verdict v = classify_flippability(inv357(), SplittingDescriptor::make_vertical(s));
    CHECK(v.outcome == Outcome::not_flippable);
    CHECK(trace_shape(v) == Shape{{"R1", false},
                                  {"R2", false},
                                  {"R3", false},
                                  {"R4", false},
                                  {"R5", false},
                                  {"R6", true}});
    CHECK(last_firing(v).detail == "alphas (3,5,7): pairwise coprime, all >= 3");
  }

  // genus >= 1 substitutes for the fiber count
  SeifertInvariants g1{1, 0, {{3, 1}, {5, 1}}};
  Verdict v = classify_flippability(g1, generic_split({1}));
  CHECK(v.outcome == Outcome::not_flippable);
  CHECK(last_firing(v).rule == RuleId::vertical_coprime);

  // two fibers over genus 0 are not enough
  SeifertInvariants small{0, 1, {{3, 1}, {5, 1}}};
  Verdict s = classify_flippability(small, generic_split({1}));
  bool found = false;
  for (const auto& f : s.trace)
    if (f.rule == RuleId::vertical_coprime) {
      found = true;
      CHECK(!f.matched);
      CHECK(f.detail.find("needs l >= 3 or genus >= 1") != std::string::npos);
    }
  CHECK(found);
}

TEST_CASE("multiplicity-2 fibers push the decision to the counting rule") {
  SeifertInvariants odd{0, -1, {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}}};

  // n = 1 (odd), m = 7: threshold met; the 2-fiber and a 3-fiber share a side
  Verdict v = classify_flippability(odd, generic_split({1, 2}));
  CHECK(v.outcome == Outcome::not_flippable);
  CHECK(last_firing(v).rule == RuleId::vertical_fg_prime);
  CHECK(last_firing(v).matched);
  CHECK(last_firing(v).detail.find("m = #{alpha >= 3} = 7") != std::string::npos);
  CHECK(last_firing(v).detail.find("n = #{alpha = 2} = 1") != std::string::npos);
  CHECK(last_firing(v).detail.find("opposite handlebodies") != std::string::npos);
  // R6 must have declined for the right reason
  CHECK(v.trace[5].rule == RuleId::vertical_coprime);
  CHECK(v.trace[5].detail.find("some alpha < 3") != std::string::npos);

  // the lone 2-fiber on its own side leaves no coprime pair across the surface
  Verdict lone = classify_flippability(odd, generic_split({1}));
  CHECK(lone.outcome == Outcome::undetermined);
  CHECK(lone.trace[6].rule == RuleId::vertical_fg_prime);
  CHECK(!lone.trace[6].matched);
  CHECK(lone.trace[6].detail.find("no coprime pair") != std::string::npos);
  CHECK(last_firing(lone).detail.find("nearest rule R7") != std::string::npos);

  // n = 2 (even) needs only m >= 5
  SeifertInvariants even{0, -1, {{2, 1}, {2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}};
  Verdict e = classify_flippability(even, generic_split({1, 3}));
  CHECK(e.outcome == Outcome::not_flippable);
  CHECK(last_firing(e).rule == RuleId::vertical_fg_prime);
  CHECK(last_firing(e).detail.find("m = #{alpha >= 3} = 5") != std::string::npos);

  // thresholds just missed
  SeifertInvariants evenshort{0, -1, {{2, 1}, {2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}}};
  Verdict es = classify_flippability(evenshort, generic_split({1, 3}));
  CHECK(es.outcome == Outcome::undetermined);
  CHECK(es.trace[6].detail.find("threshold requires n > 0 and m >= 5") != std::string::npos);

  SeifertInvariants oddshort{0, -1, {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}};
  Verdict os = classify_flippability(oddshort, generic_split({1, 2}));
  CHECK(os.outcome == Outcome::undetermined);
  CHECK(os.trace[6].detail.find("threshold requires n > 0 and m >= 7") != std::string::npos);
}

TEST_CASE("two-fiber lens spaces without explicit parameters") {
  SeifertInvariants inv{0, 1, {{2, 1}, {3, 1}}};  // first homology Z/11
  Verdict v = classify_flippability(inv, generic_split({1}));
  CHECK(v.outcome == Outcome::undetermined);
  REQUIRE(v.trace.size() == 8);
  CHECK(v.trace[4].rule == RuleId::lens);
  CHECK(!v.trace[4].matched);
  CHECK(v.trace[4].detail.find("q underivable") != std::string::npos);
  CHECK(last_firing(v).detail.find("nearest rule R5") != std::string::npos);

  // explicit parameters resolve it either way
  CHECK(classify_flippability(inv, generic_split({1}), LensParams{11, 3}).outcome ==
        Outcome::not_flippable);
  CHECK(classify_flippability(inv, generic_split({1}), LensParams{11, 1}).outcome ==
        Outcome::flippable);
}

TEST_CASE("shared multiplicity factors leave the verdict open") {
  SeifertInvariants duo{0, 1, {{3, 1}, {3, 2}, {5, 1}, {5, 2}}};
  Verdict v = classify_flippability(duo, generic_split({1, 3}));
  CHECK(v.outcome == Outcome::undetermined);
  REQUIRE(v.trace.size() == 8);
  CHECK(v.trace[5].rule == RuleId::vertical_coprime);
  CHECK(v.trace[5].detail.find("not pairwise coprime") != std::string::npos);
  CHECK(v.trace[6].detail.find("threshold requires") != std::string::npos);
  CHECK(last_firing(v).detail.find("nearest rule R6") != std::string::npos);
}

TEST_CASE("descriptors outside every rule fall through") {
  Verdict v = classify_flippability({1, 1, {{3, 1}}}, spine_split());
  CHECK(v.outcome == Outcome::undetermined);
  CHECK(last_firing(v).rule == RuleId::fallback);
  CHECK(last_firing(v).detail == "no classification rule applies to this descriptor");
}

TEST_CASE("classifier rejects broken input") {
  expect_errc([] { classify_flippability(inv357(), generic_split({9})); },
              errc::inconsistent_descriptor);
  // override demands a genus-0 base
  expect_errc(
      [] {
        auto prod = SplittingDescriptor::make_vertical({VerticalCase::product, {}, false});
        classify_flippability({1, 0, {}}, prod, LensParams{4, 1});
      },
      errc::inconsistent_descriptor);
  expect_errc([] { classify_flippability(inv357(), generic_split({1}), LensParams{4, 1}); },
              errc::inconsistent_descriptor);
}

TEST_CASE("coprime rule never fires past a blocked hypothesis") {
  std::mt19937 rng(271);
  const long long primes[] = {3, 5, 7, 11, 13};
  for (int trial = 0; trial < 40; ++trial) {
    SeifertInvariants inv;
    inv.genus = rng() % 2;
    inv.euler_b = static_cast<long long>(rng() % 7) - 3;
    int l = 3 + rng() % 2;
    bool plant_two = rng() % 2 == 0;
    if (plant_two) {
      inv.fibers.push_back({2, 1});
      for (int i = 1; i < l; ++i) inv.fibers.push_back({primes[rng() % 5], 1});
    } else {
      long long p = primes[rng() % 5];
      inv.fibers.push_back({p, 1});
      inv.fibers.push_back({p, 1});  // shared factor
      for (int i = 2; i < l; ++i) inv.fibers.push_back({primes[rng() % 5], 1});
    }
    for (const auto& s : enumerate_vertical(inv)) {
      Verdict v = classify_flippability(inv, SplittingDescriptor::make_vertical(s));
      for (const auto& f : v.trace)
        if (f.rule == RuleId::vertical_coprime) CHECK(!f.matched);
    }
  }
}

TEST_CASE("trace structure is uniform") {
  std::mt19937 rng(515);
  const long long primes[] = {2, 3, 5, 7, 9, 11};
  for (int trial = 0; trial < 60; ++trial) {
    SeifertInvariants inv;
    inv.genus = rng() % 3;
    inv.euler_b = static_cast<long long>(rng() % 9) - 4;
    int l = rng() % 5;
    for (int i = 0; i < l; ++i) {
      long long alpha = primes[rng() % 6];
      long long beta;
      do {
        beta = 1 + rng() % 9;
      } while (gcd_ll(alpha, beta) != 1);
      inv.fibers.push_back({alpha, beta});
    }
    if (inv.genus == 0 && inv.euler_b == 0 && l == 0) continue;

    std::vector<SplittingDescriptor> ds;
    ds.push_back(SplittingDescriptor::make_horizontal());
    for (const auto& s : enumerate_vertical(inv))
      ds.push_back(SplittingDescriptor::make_vertical(s));
    ds.push_back(SplittingDescriptor::make_stabilized(ds[1], 1 + rng() % 2));

    for (const auto& d : ds) {
      Verdict v = classify_flippability(inv, d);
      REQUIRE(!v.trace.empty());
      for (std::size_t i = 0; i + 1 < v.trace.size(); ++i) {
        CHECK(!v.trace[i].matched);  // only the last rule fires
        CHECK(static_cast<int>(v.trace[i].rule) < static_cast<int>(v.trace[i + 1].rule));
      }
      const RuleFiring& last = last_firing(v);
      CHECK(last.matched);
      CHECK(!last.detail.empty());
      switch (last.rule) {
        case RuleId::stabilized:
        case RuleId::horizontal:
        case RuleId::product:
        case RuleId::circle_bundle:
          CHECK(v.outcome == Outcome::flippable);
          break;
        case RuleId::lens:
          CHECK(v.outcome != Outcome::undetermined);
          break;
        case RuleId::vertical_coprime:
        case RuleId::vertical_fg_prime:
          CHECK(v.outcome == Outcome::not_flippable);
          break;
        case RuleId::fallback:
          CHECK(v.outcome == Outcome::undetermined);
          break;
      }
    }
  }
}
