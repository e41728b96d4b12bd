#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "modalg/catalog.hpp"
#include "modalg/error.hpp"
#include "modalg/group_ops.hpp"
#include "modalg/oracle.hpp"
#include "test_support.hpp"

using namespace modalg;
using modalg::testing::catalog_groups;

namespace {

// Element order by repeated multiplication through the table.
std::uint64_t naive_order(const PGroup& g, Element x) {
  std::uint64_t n = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++n;
  return n;
}

std::set<Element> naive_center(const PGroup& g) {
  std::set<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.insert(a);
  }
  return z;
}

std::set<Element> as_set(const Subgroup& h) { return {h.elements().begin(), h.elements().end()}; }

}  // namespace

TEST(Catalog, CyclicFour) {
  const auto c4 = catalog_build("cyclic", std::vector{2, 2});
  EXPECT_EQ(c4.order(), 4u);
  EXPECT_EQ(c4.element_order(1), 4u);
}

TEST(Catalog, DihedralEightHasTwoElementsOfOrderFour) {
  const auto d8 = catalog_build("dihedral", std::vector{8});
  int count = 0;
  for (Element x = 0; x < d8.order(); ++x) count += naive_order(d8, x) == 4;
  EXPECT_EQ(count, 2);
}

TEST(Catalog, DirectProductC2C4) {
  const auto g = direct_product(parse_group_spec("C2"), parse_group_spec("C4"));
  EXPECT_EQ(g.order(), 8u);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(abelian_invariants(g).exponents, (std::vector<std::uint64_t>{4, 2}));
}

TEST(Catalog, RejectsBadFamilies) {
  EXPECT_THROW(catalog_build("sporadic", std::vector{2}), InvalidInput);
  EXPECT_THROW(catalog_build("dihedral", std::vector{12}), InvalidInput);
  EXPECT_THROW(catalog_build("cyclic", std::vector{2, 9}), InvalidInput);
  EXPECT_THROW(catalog_build("cyclic", std::vector{6, 1}), InvalidInput);
}

TEST(Catalog, EveryEntryMatchesItsRecordedOrder) {
  for (unsigned p : {2u, 3u, 5u})
    for (const auto& e : standard_catalog(p, 256)) {
      const auto g = parse_group_spec(e.spec);
      EXPECT_EQ(g.order(), e.order) << e.spec;
      EXPECT_EQ(g.prime(), p) << e.spec;
    }
}

TEST(Catalog, FamilyOrdersAndCenters) {
  EXPECT_EQ(naive_center(parse_group_spec("Q8")).size(), 2u);
  EXPECT_EQ(naive_center(parse_group_spec("SD16")).size(), 2u);
  EXPECT_EQ(naive_center(parse_group_spec("M16")).size(), 4u);
  EXPECT_EQ(naive_center(parse_group_spec("Heis3")).size(), 3u);
  EXPECT_EQ(naive_center(parse_group_spec("E32+")).size(), 2u);
  EXPECT_EQ(parse_group_spec("Heis3").exponent(), 3u);
  EXPECT_EQ(parse_group_spec("M27").exponent(), 9u);
}

TEST(PGroupTable, RejectsInvalidTable) {
  const std::vector<std::vector<int>> t{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}};
  const std::vector<std::vector<int>> bad{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  EXPECT_NO_THROW(PGroup::from_table(2, t, "ok"));
  EXPECT_THROW(PGroup::from_table(2, bad, "bad"), InvalidInput);
}

TEST(PGroupTable, NamesAssociativityFailure) {
  // Z/8 with one intercalate swapped: still a Latin square with identity 0.
  const std::vector<std::vector<int>> loop{
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 6, 3, 4, 5, 2, 7, 0}, {2, 3, 4, 5, 6, 7, 0, 1},
      {3, 4, 5, 6, 7, 0, 1, 2}, {4, 5, 6, 7, 0, 1, 2, 3}, {5, 2, 7, 0, 1, 6, 3, 4},
      {6, 7, 0, 1, 2, 3, 4, 5}, {7, 0, 1, 2, 3, 4, 5, 6}};
  try {
    PGroup::from_table(2, loop, "loop");
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("associativity fails for ("), std::string::npos) << e.what();
  }
}

TEST(PGroupTable, IdentityReindexedToZero) {
  // C2 with identity stored at index 1.
  const std::vector<std::vector<int>> t{{1, 0}, {0, 1}};
  const auto g = PGroup::from_table(2, t, "C2");
  EXPECT_EQ(g.mul(0, 1), 1u);
  EXPECT_EQ(g.mul(1, 1), 0u);
}

TEST(PGroupTable, RejectsNonPrimePowerOrder) {
  const std::vector<std::vector<int>> c3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  EXPECT_THROW(PGroup::from_table(2, c3, "C3"), InvalidInput);
}

TEST(ElementOrder, Examples) {
  const auto c4 = parse_group_spec("C4");
  EXPECT_EQ(element_order(c4, 1), 4u);
  const auto d8 = parse_group_spec("D8");
  for (Element x = 0; x < d8.order(); ++x) EXPECT_EQ(element_order(d8, x), naive_order(d8, x));
  EXPECT_EQ(element_order(d8, 0), 1u);
}

TEST(CharacteristicSubgroup, DihedralCenterIsDerived) {
  const auto d8 = parse_group_spec("D8");
  const auto z = characteristic_subgroup(d8, SubgroupKind::center);
  EXPECT_EQ(z.size(), 2u);
  EXPECT_EQ(as_set(z), naive_center(d8));
  EXPECT_EQ(z, characteristic_subgroup(d8, SubgroupKind::derived));
}

TEST(CharacteristicSubgroup, AgemoOfC2xC4) {
  const auto g = parse_group_spec("C2xC4");
  const auto a = characteristic_subgroup(g, SubgroupKind::agemo, 1);
  std::set<Element> squares;
  for (Element x = 0; x < g.order(); ++x) squares.insert(g.mul(x, x));
  EXPECT_EQ(as_set(a), squares);
  EXPECT_EQ(a.size(), 2u);
  // Lexicographic indexing: (0, b^2) has index 2.
  EXPECT_EQ(as_set(a), (std::set<Element>{0, 2}));
}

TEST(CharacteristicSubgroup, ElementaryAbelianFrattiniTrivial) {
  for (const char* spec : {"C2^3", "C3^2", "C5^2"})
    EXPECT_TRUE(characteristic_subgroup(parse_group_spec(spec), SubgroupKind::frattini).is_trivial()) << spec;
}

TEST(CharacteristicSubgroup, OmegaAndAgemoRequirePositiveIndex) {
  EXPECT_THROW(characteristic_subgroup(parse_group_spec("C4"), SubgroupKind::omega, 0), InvalidInput);
}

TEST(CharacteristicSubgroup, DerivedMatchesCommutatorClosure) {
  for (const auto& g : catalog_groups(2, 32)) {
    ElementSet seed;
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b) seed.set(g.commutator(a, b));
    EXPECT_EQ(derived_subgroup(g).mask(), closure(g, seed)) << g.name();
    std::set<Element> z = naive_center(g);
    EXPECT_EQ(as_set(center(g)), z) << g.name();
  }
}

TEST(CharacteristicSubgroupProperty, OmegaAgemoNormalAndNested) {
  for (unsigned p : {2u, 3u, 5u})
    for (const auto& g : catalog_groups(p, 81)) {
      unsigned e = 0;
      for (std::uint64_t q = 1; q < g.exponent(); q *= p) ++e;
      for (unsigned i = 1; i <= e + 1; ++i) {
        const auto om = omega(g, i);
        const auto ag = agemo(g, i);
        EXPECT_TRUE(om.is_normal()) << g.name();
        EXPECT_TRUE(ag.is_normal()) << g.name();
        for (unsigned j = 1; j <= e + 1; ++j)
          if (i + j >= e) EXPECT_TRUE(ag.is_subgroup_of(omega(g, j))) << g.name() << " i=" << i << " j=" << j;
      }
    }
}

TEST(QuotientGroup, DihedralModCenter) {
  const auto d8 = parse_group_spec("D8");
  const auto q = quotient_group(d8, center(d8));
  EXPECT_EQ(q.group.order(), 4u);
  EXPECT_EQ(abelian_invariants(q.group).exponents, (std::vector<std::uint64_t>{2, 2}));
}

TEST(QuotientGroup, TrivialAndWhole) {
  const auto g = parse_group_spec("Q8");
  const auto q1 = quotient_group(g, Subgroup::trivial(g));
  EXPECT_EQ(q1.group.order(), 8u);
  EXPECT_EQ(fingerprint(q1.group), fingerprint(g));
  EXPECT_EQ(quotient_group(g, Subgroup::whole(g)).group.order(), 1u);
}

TEST(QuotientGroup, RejectsNonNormal) {
  const auto d8 = parse_group_spec("D8");
  // Some reflection generates a non-normal subgroup of order 2.
  bool found = false;
  for (Element x = 1; x < d8.order() && !found; ++x) {
    const auto h = Subgroup::generated(d8, std::vector{x});
    if (!h.is_normal()) {
      found = true;
      EXPECT_THROW(quotient_group(d8, h), InvalidInput);
    }
  }
  EXPECT_TRUE(found);
}

TEST(QuotientGroupProperty, KernelRecoversNormalSubgroup) {
  for (unsigned p : {2u, 3u})
    for (const auto& g : catalog_groups(p, 32))
      for (const auto& n : normal_subgroups(g)) {
        const auto q = quotient_group(g, n);
        EXPECT_EQ(q.group.order() * n.size(), g.order());
        q.projection.validate();
        EXPECT_EQ(q.projection.kernel(), n) << g.name();
      }
}

TEST(RSubquotient, Examples) {
  EXPECT_EQ(r_subquotient(parse_group_spec("D8"), 1).group.order(), 1u);
  EXPECT_EQ(r_subquotient(parse_group_spec("C2xC4"), 1).group.order(), 2u);
  EXPECT_EQ(r_subquotient(parse_group_spec("C3^2"), 1).group.order(), 9u);
  EXPECT_EQ(r_subquotient(parse_group_spec("C2^2"), 1).group.order(), 4u);
}

TEST(RSubquotientProperty, ExponentBounded) {
  for (unsigned p : {2u, 3u})
    for (const auto& g : catalog_groups(p, 64))
      for (unsigned i = 1; i <= 3; ++i) {
        const auto r = r_subquotient(g, i);
        std::uint64_t bound = 1;
        for (unsigned k = 0; k < i; ++k) bound *= p;
        EXPECT_LE(abelian_invariants(r.group).exponent(), bound) << g.name();
        EXPECT_EQ(r.in_quotient.size(), r.group.order());
      }
}

TEST(DirectFactorOracle, Examples) {
  EXPECT_TRUE(direct_factor_oracle(parse_group_spec("D8")).empty());
  EXPECT_TRUE(direct_factor_oracle(parse_group_spec("Q8")).empty());
  const auto pairs = direct_factor_oracle(parse_group_spec("C2xC4"));
  bool found = false;
  for (const auto& [h, k] : pairs) {
    const auto a = abelian_invariants(h), b = abelian_invariants(k);
    const std::vector<std::uint64_t> two{2}, four{4};
    found |= (a.exponents == two && b.exponents == four) || (a.exponents == four && b.exponents == two);
  }
  EXPECT_TRUE(found);
}

TEST(DirectFactorOracle, CapEnforced) {
  EXPECT_THROW(direct_factor_oracle(parse_group_spec("C2^7")), CapExceeded);
  EXPECT_EQ(direct_factor_oracle(parse_group_spec("C64xC2"), 128).size(), 4u);
}

TEST(DirectFactorOracleProperty, ContainsConstructingPair) {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"C2", "D8"}, {"C4", "Q8"}, {"C2", "C4"}, {"D8", "C2^2"}, {"C3", "Heis3"}, {"C2", "Q16"}};
  for (const auto& [a, b] : pairs) {
    const auto ga = parse_group_spec(a), gb = parse_group_spec(b);
    const auto g = direct_product(ga, gb);
    if (g.order() > kDefaultOracleCap && g.prime() == 2) continue;
    ElementSet first, second;
    for (Element x = 0; x < ga.order(); ++x) first.set(x * gb.order());
    for (Element y = 0; y < gb.order(); ++y) second.set(y);
    const std::size_t cap = std::max<std::size_t>(g.order(), kDefaultOracleCap);
    bool found = false;
    for (const auto& [h, k] : direct_factor_oracle(g, cap))
      found |= (h.mask() == first && k.mask() == second) || (h.mask() == second && k.mask() == first);
    EXPECT_TRUE(found) << a << "x" << b;
  }
}

TEST(DirectFactorOracle, IndecomposableFactors) {
  const auto f = indecomposable_factors(parse_group_spec("C2xC4xD8"));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].order(), 8u);
  EXPECT_TRUE(has_cyclic_factor_of_order(parse_group_spec("C2xC4xD8"), 4));
  EXPECT_FALSE(has_cyclic_factor_of_order(parse_group_spec("C2xC4xD8"), 8));
  EXPECT_FALSE(has_cyclic_factor_of_order(parse_group_spec("Q16"), 2));
}

TEST(RetractionComplement, Examples) {
  const auto g = parse_group_spec("C2xC4");
  const auto k = retraction_complement(g, 1);  // (0,b) has order 4
  EXPECT_EQ(k.size(), 2u);
  const auto c4 = parse_group_spec("C4");
  EXPECT_TRUE(retraction_complement(c4, 1).is_trivial());
  try {
    retraction_complement(c4, 2);
    FAIL() << "expected CheckFailed";
  } catch (const CheckFailed& e) {
    EXPECT_EQ(e.step(), "retraction");
  }
}

TEST(RetractionComplement, OracleEnumeratesHomsC4ToC2) {
  // No hom C4 -> <g^2> sends g^2 to itself: every hom kills squares.
  const auto c4 = parse_group_spec("C4");
  int good = 0;
  for (Element image_of_gen : {0u, 2u}) {
    const Element image_of_square = c4.mul(image_of_gen, image_of_gen);
    good += image_of_square == 2;
  }
  EXPECT_EQ(good, 0);
}

TEST(RetractionComplementProperty, ComplementContract) {
  for (unsigned p : {2u, 3u})
    for (const auto& g : catalog_groups(p, 64)) {
      const auto z = center(g);
      for (Element h : z.elements()) {
        if (h == 0) continue;
        Subgroup k;
        try {
          k = retraction_complement(g, h);
        } catch (const CheckFailed&) {
          continue;
        }
        const auto hh = Subgroup::generated(g, std::vector{h});
        EXPECT_TRUE(meet(hh, k).is_trivial()) << g.name();
        EXPECT_EQ(k.size() * hh.size(), g.order()) << g.name();
        for (Element x : k.elements()) EXPECT_EQ(g.mul(x, h), g.mul(h, x));
      }
    }
}

TEST(AbelianInvariants, Examples) {
  EXPECT_EQ(abelian_invariants(parse_group_spec("C2xC4")).exponents, (std::vector<std::uint64_t>{4, 2}));
  EXPECT_TRUE(abelian_invariants(r_subquotient(parse_group_spec("D8"), 1).group).exponents.empty());
  EXPECT_EQ(abelian_invariants(parse_group_spec("C3^3")).exponents, (std::vector<std::uint64_t>{3, 3, 3}));
  EXPECT_THROW(abelian_invariants(parse_group_spec("D8")), InvalidInput);
}

TEST(AbelianInvariantsProperty, OrderAndElementCountsMatch) {
  // Invariants determine how many elements have order dividing p^k.
  for (unsigned p : {2u, 3u, 5u})
    for (const auto& g : catalog_groups(p, 256)) {
      if (!g.is_abelian()) continue;
      const auto inv = abelian_invariants(g);
      EXPECT_EQ(inv.order(), g.order());
      for (std::uint64_t q = p; q <= g.exponent(); q *= p) {
        std::uint64_t predicted = 1;
        for (auto e : inv.exponents) predicted *= std::min(e, q);
        std::uint64_t actual = 0;
        for (Element x = 0; x < g.order(); ++x) actual += q % g.element_order(x) == 0;
        EXPECT_EQ(predicted, actual) << g.name();
      }
    }
}

TEST(GeneratorRank, MatchesFrattiniIndex) {
  EXPECT_EQ(generator_rank(parse_group_spec("D8")), 2u);
  EXPECT_EQ(generator_rank(parse_group_spec("C2^4")), 4u);
  EXPECT_EQ(generator_rank(parse_group_spec("E32+")), 4u);
  EXPECT_EQ(generator_rank(parse_group_spec("C9")), 1u);
}
