#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "modalg/algebra.hpp"
#include "modalg/catalog.hpp"
#include "modalg/error.hpp"
#include "modalg/group_ops.hpp"
#include "modalg/ideals.hpp"
#include "modalg/oracle.hpp"
#include "test_support.hpp"

using namespace modalg;
using modalg::testing::all_members;
using modalg::testing::catalog_groups;
using modalg::testing::random_vector;

namespace {

// Convolution written out directly over the Cayley table.
std::vector<int> naive_multiply(const PGroup& g, const FpVector& a, const FpVector& b) {
  std::vector<int> out(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      out[g.mul(x, y)] = (out[g.mul(x, y)] + static_cast<int>(a[x] * b[y])) % static_cast<int>(g.prime());
  return out;
}

FpVector e(const GroupAlgebra& ctx, Element g) { return ctx.basis(g); }

// Dimensions of I^1, I^2, ... until zero.
std::vector<std::size_t> radical_dims(const GroupAlgebra& ctx) {
  std::vector<std::size_t> dims;
  for (unsigned m = 1;; ++m) {
    dims.push_back(ctx.augmentation_power(m).dim());
    if (dims.back() == 0) break;
  }
  return dims;
}

}  // namespace

TEST(Arithmetic, SquareOfGMinusOneInF2C4) {
  const GroupAlgebra ctx(parse_group_spec("C4"));
  const auto x = ctx.basis_minus_one(1);
  EXPECT_EQ(ctx.multiply(x, x), e(ctx, 2) + e(ctx, 0));
  EXPECT_EQ(ctx.augmentation(x), 0u);
  EXPECT_FALSE(ctx.power(x, 3).is_zero());
  EXPECT_TRUE(ctx.power(x, 4).is_zero());
  EXPECT_EQ(ctx.nilpotency_index(), 4u);
}

TEST(Arithmetic, MultiplyMatchesNaiveConvolution) {
  std::mt19937 rng(1);
  for (const char* spec : {"D8", "Q16", "Heis3", "C5^2", "M27"}) {
    const GroupAlgebra ctx(parse_group_spec(spec));
    for (int t = 0; t < 20; ++t) {
      const auto a = random_vector(rng, ctx.prime(), ctx.dim());
      const auto b = random_vector(rng, ctx.prime(), ctx.dim());
      EXPECT_EQ(ctx.multiply(a, b).coords(), naive_multiply(ctx.group(), a, b)) << spec;
    }
  }
}

TEST(Arithmetic, AssociativeOnRandomTriples) {
  std::mt19937 rng(2);
  for (const char* spec : {"SD16", "E27+", "C2xQ8"}) {
    const GroupAlgebra ctx(parse_group_spec(spec));
    for (int t = 0; t < 10; ++t) {
      const auto a = random_vector(rng, ctx.prime(), ctx.dim());
      const auto b = random_vector(rng, ctx.prime(), ctx.dim());
      const auto c = random_vector(rng, ctx.prime(), ctx.dim());
      EXPECT_EQ(ctx.multiply(ctx.multiply(a, b), c), ctx.multiply(a, ctx.multiply(b, c)));
    }
  }
}

TEST(Arithmetic, PPowerIsIteratedPower) {
  const GroupAlgebra ctx(parse_group_spec("C9"));
  const auto x = ctx.basis_minus_one(1);
  EXPECT_EQ(ctx.p_power(x, 1), ctx.power(x, 3));
  EXPECT_EQ(ctx.p_power(x, 2), ctx.power(x, 9));
  EXPECT_TRUE(ctx.p_power(x, 2).is_zero());
}

TEST(Arithmetic, DimensionMismatchRejected) {
  const GroupAlgebra ctx(parse_group_spec("C4"));
  EXPECT_THROW(ctx.multiply(FpVector(2, 3), FpVector(2, 4)), InvalidInput);
}

TEST(AugmentationIdeal, Dimensions) {
  EXPECT_EQ(GroupAlgebra(parse_group_spec("C2")).augmentation_ideal().dim(), 1u);
  EXPECT_EQ(GroupAlgebra(parse_group_spec("D8")).augmentation_ideal().dim(), 7u);
}

TEST(AugmentationIdeal, CubesVanishInF3C3) {
  const GroupAlgebra ctx(parse_group_spec("C3"));
  const auto ideal = ctx.augmentation_ideal();
  EXPECT_EQ(ideal.dim(), 2u);
  // Every a(g-1) + b(g^2-1), expanded through the table.
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) {
      const FpVector x = a * ctx.basis_minus_one(1) + b * ctx.basis_minus_one(2);
      const auto x2 = naive_multiply(ctx.group(), x, x);
      const auto x3 = naive_multiply(ctx.group(), FpVector::from_coords(3, x2), x);
      EXPECT_EQ(x3, (std::vector<int>{0, 0, 0}));
    }
}

TEST(AugmentationIdeal, MatchesSpanOfGMinusOne) {
  for (const auto& g : catalog_groups(3, 27)) {
    const GroupAlgebra ctx(g);
    std::vector<FpVector> gens;
    for (Element x = 1; x < g.order(); ++x) gens.push_back(ctx.basis_minus_one(x));
    EXPECT_EQ(ctx.augmentation_ideal(), FpSubspace::span(3, g.order(), gens));
  }
}

TEST(IdealCalculus, AugmentationPowersOfF2C4) {
  const GroupAlgebra ctx(parse_group_spec("C4"));
  const auto i = ctx.augmentation_ideal();
  EXPECT_EQ(radical_dims(ctx), (std::vector<std::size_t>{3, 2, 1, 0}));
  for (unsigned m = 1; m <= 4; ++m) EXPECT_EQ(subspace_power(ctx, i, m), ctx.augmentation_power(m));
}

TEST(IdealCalculus, CommutatorSpanAbelianIsZero) {
  const GroupAlgebra ctx(parse_group_spec("C4xC2"));
  EXPECT_TRUE(commutator_span(ctx, ctx.whole(), ctx.whole()).is_zero());
}

TEST(IdealCalculus, CommutatorSpanD8) {
  const auto d8 = parse_group_spec("D8");
  const GroupAlgebra ctx(d8);
  EchelonBuilder brute(2, 8);
  for (Element g = 0; g < 8; ++g)
    for (Element h = 0; h < 8; ++h) brute.insert(e(ctx, d8.mul(g, h)) - e(ctx, d8.mul(h, g)));
  const auto span = commutator_span(ctx, ctx.whole(), ctx.whole());
  EXPECT_EQ(span, FpSubspace::from_builder(brute));
  EXPECT_EQ(span.dim(), 3u);
  EXPECT_EQ(span.dim(), d8.order() - conjugacy_classes(d8).size());
}

TEST(IdealCalculus, IdealGeneratedIsSmallestTwoSided) {
  const GroupAlgebra ctx(parse_group_spec("D8"));
  const auto x = FpSubspace::span(2, 8, std::vector{ctx.basis_minus_one(1)});
  const auto j = ideal_generated(ctx, x);
  EXPECT_TRUE(is_two_sided_ideal(ctx, j));
  EXPECT_TRUE(j.contains(x));
  // Oracle: close under multiplication by every basis element on both sides.
  EchelonBuilder b(2, 8);
  b.insert(ctx.basis_minus_one(1));
  for (std::size_t k = 0; k < b.rank(); ++k)
    for (Element g = 0; g < 8; ++g) {
      const FpVector row = b.rows()[k];
      b.insert(ctx.left_translate(g, row));
      b.insert(ctx.right_translate(row, g));
    }
  EXPECT_EQ(j, FpSubspace::from_builder(b));
}

TEST(NormalSubgroupIdeal, Examples) {
  const auto d8 = parse_group_spec("D8");
  const GroupAlgebra ctx(d8);
  EXPECT_TRUE(normal_subgroup_ideal(ctx, Subgroup::trivial(d8)).is_zero());
  EXPECT_EQ(normal_subgroup_ideal(ctx, Subgroup::whole(d8)), ctx.augmentation_ideal());
  EXPECT_EQ(normal_subgroup_ideal(ctx, center(d8)).dim(), 4u);
}

TEST(NormalSubgroupIdealProperty, DimensionAndKernel) {
  for (unsigned p : {2u, 3u})
    for (const auto& g : catalog_groups(p, 32)) {
      const GroupAlgebra ctx(g);
      for (const auto& n : normal_subgroups(g)) {
        const auto ideal = normal_subgroup_ideal(ctx, n);
        EXPECT_EQ(ideal.dim(), g.order() - g.order() / n.size()) << g.name();
        // Kernel of the induced map F_pG -> F_p(G/N).
        const auto q = quotient_group(g, n);
        std::vector<FpVector> dom, img;
        for (Element x = 0; x < g.order(); ++x) {
          dom.push_back(ctx.basis(x));
          img.push_back(FpVector::unit(p, q.group.order(), q.projection(x)));
        }
        EXPECT_EQ(LinearMap(dom, img, q.group.order()).kernel(), ideal) << g.name();
      }
    }
}

TEST(NormalSubgroupIdeal, RejectsNonNormal) {
  const auto d8 = parse_group_spec("D8");
  const GroupAlgebra ctx(d8);
  for (Element x = 1; x < 8; ++x) {
    const auto h = Subgroup::generated(d8, std::vector{x});
    if (!h.is_normal()) {
      EXPECT_THROW(normal_subgroup_ideal(ctx, h), InvalidInput);
      return;
    }
  }
  FAIL() << "no non-normal subgroup found";
}

TEST(Center, AbelianIsWhole) {
  const GroupAlgebra ctx(parse_group_spec("C3xC9"));
  EXPECT_EQ(center_subspace(ctx), ctx.whole());
}

TEST(Center, D8ClassSums) {
  const auto d8 = parse_group_spec("D8");
  const GroupAlgebra ctx(d8);
  std::vector<FpVector> sums;
  for (const auto& cls : conjugacy_classes(d8)) {
    FpVector s = ctx.zero();
    for (Element x : cls) s += ctx.basis(x);
    sums.push_back(s);
  }
  const auto z = center_subspace(ctx);
  EXPECT_EQ(z.dim(), 5u);
  EXPECT_EQ(z, FpSubspace::span(2, 8, sums));
  // Brute force: members commuting with every basis element.
  std::size_t commuting = 0;
  for (const auto& m : all_members(ctx.whole())) {
    const auto v = FpVector::from_coords(2, m);
    bool ok = true;
    for (Element g = 0; g < 8 && ok; ++g) ok = ctx.multiply(v, ctx.basis(g)) == ctx.multiply(ctx.basis(g), v);
    commuting += ok;
  }
  EXPECT_EQ(commuting, 32u);
  EXPECT_EQ(central_augmentation(ctx).dim(), 4u);
}

TEST(CenterProperty, CentralAugmentationSplits) {
  for (unsigned p : {2u, 3u})
    for (const auto& g : catalog_groups(p, 64)) {
      const GroupAlgebra ctx(g);
      const auto z = center(g);
      std::vector<FpVector> izg;
      for (Element x : z.elements())
        if (x) izg.push_back(ctx.basis_minus_one(x));
      const auto i_of_center = FpSubspace::span(p, g.order(), izg);
      const auto rest = commutator_span(ctx, ctx.whole(), ctx.whole()).intersect(center_subspace(ctx));
      EXPECT_EQ(central_augmentation(ctx), i_of_center + rest) << g.name();
      EXPECT_TRUE(i_of_center.intersect(rest).is_zero()) << g.name();
      EXPECT_TRUE(normal_subgroup_ideal(ctx, z).contains(i_of_center)) << g.name();
    }
}

TEST(CommutatorIdealProperty, EqualsDerivedSubgroupIdeal) {
  for (unsigned p : {2u, 3u})
    for (const auto& g : catalog_groups(p, 32)) {
      const GroupAlgebra ctx(g);
      const auto closed = ideal_generated(ctx, commutator_span(ctx, ctx.whole(), ctx.whole()));
      EXPECT_EQ(closed, normal_subgroup_ideal(ctx, derived_subgroup(g))) << g.name();
      EXPECT_EQ(commutator_ideal(ctx), closed) << g.name();
    }
}

TEST(QuotientAlgebra, DihedralModDerivedLooksLikeKleinFour) {
  const auto d8 = parse_group_spec("D8");
  const GroupAlgebra ctx(d8);
  const QuotientAlgebra q(ctx, normal_subgroup_ideal(ctx, derived_subgroup(d8)));
  EXPECT_EQ(q.dim(), 4u);
  EXPECT_TRUE(q.is_commutative());
  // Radical filtration of the quotient vs F_2(C2 x C2).
  const auto rad = q.image(ctx.augmentation_ideal());
  std::vector<std::size_t> dims;
  for (unsigned m = 1; m <= 4; ++m) dims.push_back(subspace_power(q, rad, m).dim());
  const GroupAlgebra klein(parse_group_spec("C2^2"));
  std::vector<std::size_t> expected;
  for (unsigned m = 1; m <= 4; ++m) expected.push_back(klein.augmentation_power(m).dim());
  EXPECT_EQ(dims, expected);
}

TEST(QuotientAlgebra, ZeroAndAugmentation) {
  const GroupAlgebra ctx(parse_group_spec("Q8"));
  const QuotientAlgebra same(ctx, FpSubspace::zero(2, 8));
  EXPECT_EQ(same.dim(), 8u);
  std::mt19937 rng(4);
  const auto a = random_vector(rng, 2, 8), b = random_vector(rng, 2, 8);
  EXPECT_EQ(same.lift(same.multiply(same.project(a), same.project(b))), ctx.multiply(a, b));
  const QuotientAlgebra field(ctx, ctx.augmentation_ideal());
  EXPECT_EQ(field.dim(), 1u);
}

TEST(QuotientAlgebra, RejectsNonIdeal) {
  const GroupAlgebra ctx(parse_group_spec("D8"));
  const auto x = FpSubspace::span(2, 8, std::vector{ctx.basis_minus_one(1)});
  EXPECT_THROW(QuotientAlgebra(ctx, x), CheckFailed);
}

TEST(QuotientAlgebraProperty, ProjectionIsMultiplicative) {
  std::mt19937 rng(8);
  for (const char* spec : {"D16", "Heis3", "C2xQ8"}) {
    const auto g = parse_group_spec(spec);
    const GroupAlgebra ctx(g);
    const QuotientAlgebra q(ctx, commutator_ideal(ctx));
    for (int t = 0; t < 10; ++t) {
      const auto a = random_vector(rng, ctx.prime(), ctx.dim());
      const auto b = random_vector(rng, ctx.prime(), ctx.dim());
      EXPECT_EQ(q.project(ctx.multiply(a, b)), q.multiply(q.project(a), q.project(b))) << spec;
    }
  }
}

TEST(OmegaCentral, LargeIndexGivesWholeCentralIdeal) {
  const GroupAlgebra ctx(parse_group_spec("Q8"));
  const auto zi = central_augmentation(ctx);
  EXPECT_EQ(omega_central(ctx, 4), subalgebra_generated(ctx, zi));
}

TEST(OmegaCentral, F2C4GeneratedBySquareClass) {
  const GroupAlgebra ctx(parse_group_spec("C4"));
  // Enumerate the 8 elements of I(C4) and keep those squaring to zero.
  std::vector<FpVector> keep;
  for (const auto& m : all_members(ctx.augmentation_ideal())) {
    const auto z = FpVector::from_coords(2, m);
    if (FpVector::from_coords(2, naive_multiply(ctx.group(), z, z)).is_zero()) keep.push_back(z);
  }
  const auto expected = subalgebra_generated(ctx, FpSubspace::span(2, 4, keep));
  EXPECT_EQ(expected, ideal_generated(ctx, FpSubspace::span(2, 4, std::vector{ctx.basis_minus_one(2)})));
  EXPECT_EQ(expected.dim(), 2u);
  EXPECT_EQ(omega_central(ctx, 1), expected);
  EXPECT_EQ(omega_central_enumerated(ctx, 1), expected);
}

TEST(OmegaCentral, C2xC4MatchesGroupSide) {
  const auto g = parse_group_spec("C2xC4");
  const GroupAlgebra ctx(g);
  const auto algebra_side = ideal_generated(ctx, omega_central(ctx, 1)) + commutator_ideal(ctx);
  const auto group_side = normal_subgroup_ideal(ctx, join(omega_of(center(g), 1), derived_subgroup(g)));
  EXPECT_EQ(algebra_side, group_side);
}

TEST(OmegaCentral, EnumerationCap) {
  const GroupAlgebra ctx(parse_group_spec("C2^5"));
  EXPECT_THROW(omega_central_enumerated(ctx, 1, 1u << 20), CapExceeded);
}

TEST(OmegaCentralProperty, LinearAgreesWithEnumeration) {
  for (unsigned p : {2u, 3u})
    for (const auto& g : catalog_groups(p, 27)) {
      const GroupAlgebra ctx(g);
      if (central_augmentation(ctx).dim() > 15) continue;
      for (unsigned i = 1; i <= 3; ++i)
        EXPECT_EQ(omega_central(ctx, i), omega_central_enumerated(ctx, i)) << g.name() << " i=" << i;
    }
}

TEST(MhoIdeal, Examples) {
  EXPECT_TRUE(mho_ideal_mod_derived(GroupAlgebra(parse_group_spec("C2^3")), 1).is_zero());
  const GroupAlgebra c4(parse_group_spec("C4"));
  const auto m = mho_ideal_mod_derived(c4, 1);
  EXPECT_EQ(m.dim(), 2u);
  EXPECT_EQ(m, ideal_generated(c4, FpSubspace::span(2, 4, std::vector{e(c4, 2) + e(c4, 0)})));
  const auto d8 = parse_group_spec("D8");
  const GroupAlgebra ctx(d8);
  EXPECT_EQ(mho_ideal_mod_derived(ctx, 1), normal_subgroup_ideal(ctx, join(agemo(d8, 1), derived_subgroup(d8))));
}

TEST(UnitExponent, Examples) {
  const GroupAlgebra c2(parse_group_spec("C2"));
  EXPECT_EQ(unit_exponent_commutative(c2, c2.augmentation_ideal()), 2u);
  const GroupAlgebra c4(parse_group_spec("C4"));
  EXPECT_EQ(unit_exponent_commutative(c4, c4.augmentation_ideal()), 4u);
  const GroupAlgebra d8(parse_group_spec("D8"));
  EXPECT_THROW(unit_exponent_commutative(d8, d8.augmentation_ideal()), InvalidInput);
}

TEST(UnitExponent, RSubquotientIdealOfC2xC4) {
  const auto g = parse_group_spec("C2xC4");
  const auto r = r_subquotient(g, 1);
  const GroupAlgebra kq(r.quotient.group);
  const auto ideal = normal_subgroup_ideal(kq, r.in_quotient);
  EXPECT_EQ(unit_exponent_commutative(kq, ideal), 2u);
}

TEST(UnitExponentProperty, EqualsGroupExponentForAbelian) {
  for (unsigned p : {2u, 3u, 5u})
    for (const auto& g : catalog_groups(p, 81)) {
      if (!g.is_abelian()) continue;
      const GroupAlgebra ctx(g);
      EXPECT_EQ(unit_exponent_commutative(ctx, ctx.augmentation_ideal()), g.exponent()) << g.name();
    }
}

TEST(DimensionSubgroup, Examples) {
  const auto d8 = parse_group_spec("D8");
  const GroupAlgebra ctx(d8);
  EXPECT_TRUE(dimension_subgroup(ctx, 1).is_whole());
  EXPECT_EQ(dimension_subgroup(ctx, 2), frattini(d8));
  EXPECT_EQ(dimension_subgroup(ctx, 2), center(d8));
  EXPECT_TRUE(dimension_subgroup(ctx, ctx.nilpotency_index() + 1).is_trivial());
}

TEST(DimensionSubgroupProperty, SecondTermIsFrattini) {
  for (unsigned p : {2u, 3u, 5u})
    for (const auto& g : catalog_groups(p, 64)) {
      const GroupAlgebra ctx(g);
      EXPECT_EQ(dimension_subgroup(ctx, 2), frattini(g)) << g.name();
    }
}

TEST(FrattiniCorrespondence, GroupModFrattiniToRadicalLayer) {
  for (unsigned p : {2u, 3u})
    for (const auto& g : catalog_groups(p, 32)) {
      const GroupAlgebra ctx(g);
      const QuotientSpace layer(ctx.augmentation_ideal(), ctx.augmentation_power(2));
      const auto phi = frattini(g);
      const auto q = quotient_group(g, phi);
      std::map<Element, std::vector<unsigned>> image;
      for (Element x = 0; x < g.order(); ++x) {
        const auto c = layer.project(ctx.basis_minus_one(x));
        const Element coset = q.projection(x);
        if (image.count(coset)) EXPECT_EQ(image[coset], c) << g.name();
        image[coset] = c;
      }
      std::set<std::vector<unsigned>> distinct;
      for (const auto& [k, v] : image) distinct.insert(v);
      std::size_t layer_size = 1;
      for (std::size_t k = 0; k < layer.dim(); ++k) layer_size *= p;
      EXPECT_EQ(distinct.size(), q.group.order()) << g.name();
      EXPECT_EQ(layer_size, q.group.order()) << g.name();
      for (Element a = 0; a < q.group.order(); ++a)
        for (Element b = 0; b < q.group.order(); ++b) {
          std::vector<unsigned> sum(layer.dim());
          for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = (image[a][k] + image[b][k]) % p;
          EXPECT_EQ(image[q.group.mul(a, b)], sum) << g.name();
        }
    }
}

TEST(AugmentedSubalgebra, ChecksClosureAndUnit) {
  const GroupAlgebra ctx(parse_group_spec("C4"));
  const auto b = FpSubspace::span(2, 4, std::vector{ctx.one(), ctx.basis(2)});
  const AugmentedSubalgebra sub(ctx, b);
  EXPECT_EQ(sub.augmentation_ideal().dim(), 1u);
  EXPECT_TRUE(sub.is_commutative());
  EXPECT_THROW(AugmentedSubalgebra(ctx, FpSubspace::span(2, 4, std::vector{ctx.one(), ctx.basis(1)})), CheckFailed);
  EXPECT_THROW(AugmentedSubalgebra(ctx, FpSubspace::span(2, 4, std::vector{ctx.basis(2)})), CheckFailed);
}
