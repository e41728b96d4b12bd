#include "modalg/ideals.hpp"

#include "modalg/group_ops.hpp"
#include "modalg/linear_map.hpp"

namespace modalg {

namespace {

void check_space(const GroupAlgebra& ctx, const FpSubspace& x) {
  if (x.prime() != ctx.prime() || x.ambient_dim() != ctx.dim())
    throw InvalidInput("subspace does not live in the group algebra");
}

}  // namespace

FpSubspace ideal_generated(const GroupAlgebra& ctx, const FpSubspace& x) {
  check_space(ctx, x);
  EchelonBuilder builder(ctx.prime(), ctx.dim());
  for (const auto& v : x.basis()) builder.insert(v);
  for (std::size_t i = 0; i < builder.rank(); ++i) {
    const FpVector row = builder.rows()[i];
    for (Element s : ctx.generators()) {
      builder.insert(ctx.left_translate(s, row));
      builder.insert(ctx.right_translate(row, s));
    }
  }
  return FpSubspace::from_builder(builder);
}

FpSubspace right_ideal_generated(const GroupAlgebra& ctx, const FpSubspace& x) {
  check_space(ctx, x);
  EchelonBuilder builder(ctx.prime(), ctx.dim());
  for (const auto& v : x.basis()) builder.insert(v);
  for (std::size_t i = 0; i < builder.rank(); ++i) {
    const FpVector row = builder.rows()[i];
    for (Element s : ctx.generators()) builder.insert(ctx.right_translate(row, s));
  }
  return FpSubspace::from_builder(builder);
}

bool is_two_sided_ideal(const GroupAlgebra& ctx, const FpSubspace& x) {
  check_space(ctx, x);
  for (const auto& v : x.basis())
    for (Element s : ctx.generators())
      if (!x.contains(ctx.left_translate(s, v)) || !x.contains(ctx.right_translate(v, s))) return false;
  return true;
}

FpSubspace normal_subgroup_ideal(const GroupAlgebra& ctx, const Subgroup& n) {
  if (!n.parent().same_table(ctx.group())) throw InvalidInput("normal_subgroup_ideal: subgroup of a different group");
  if (!n.is_normal()) throw InvalidInput("normal_subgroup_ideal: subgroup is not normal");
  const PGroup& g = ctx.group();
  EchelonBuilder builder(ctx.prime(), ctx.dim());
  for (Element m : n.elements()) {
    if (m == 0) continue;
    for (Element x = 0; x < g.order(); ++x) {
      // (e_m - e_1) e_x = e_{mx} - e_x
      FpVector v = ctx.basis(g.mul(m, x));
      v -= ctx.basis(x);
      builder.insert(std::move(v));
    }
  }
  return FpSubspace::from_builder(builder);
}

FpSubspace center_subspace(const GroupAlgebra& ctx) {
  const std::size_t n = ctx.dim();
  const auto& gens = ctx.generators();
  std::vector<FpVector> domain, images;
  for (Element g = 0; g < n; ++g) {
    const FpVector e = ctx.basis(g);
    FpVector image(ctx.prime(), n * gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const FpVector c = ctx.right_translate(e, gens[k]) - ctx.left_translate(gens[k], e);
      c.for_each_nonzero([&](std::size_t i, unsigned v) { image.set(k * n + i, v); });
    }
    domain.push_back(e);
    images.push_back(std::move(image));
  }
  if (gens.empty()) return ctx.whole();
  return LinearMap(std::move(domain), std::move(images), n * gens.size()).kernel();
}

FpSubspace central_augmentation(const GroupAlgebra& ctx) {
  return center_subspace(ctx).intersect(ctx.augmentation_ideal());
}

FpSubspace commutator_ideal(const GroupAlgebra& ctx) {
  const PGroup& g = ctx.group();
  EchelonBuilder builder(ctx.prime(), ctx.dim());
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b) {
      const Element ab = g.mul(a, b), ba = g.mul(b, a);
      if (ab == ba) continue;
      FpVector v = ctx.basis(ab);
      v -= ctx.basis(ba);
      builder.insert(std::move(v));
    }
  return ideal_generated(ctx, FpSubspace::from_builder(builder));
}

FpSubspace omega_central(const GroupAlgebra& ctx, unsigned i) {
  const FpSubspace zi = central_augmentation(ctx);
  if (zi.is_zero()) return zi;
  std::vector<FpVector> images;
  for (const auto& z : zi.basis()) images.push_back(ctx.p_power(z, i));
  const LinearMap frobenius(zi.basis(), std::move(images), ctx.dim());
  return subalgebra_generated(ctx, frobenius.kernel());
}

FpSubspace omega_central_enumerated(const GroupAlgebra& ctx, unsigned i, std::uint64_t cap) {
  const FpSubspace zi = central_augmentation(ctx);
  const unsigned p = ctx.prime();
  const std::size_t d = zi.dim();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < d; ++k) {
    total *= p;
    if (total > cap)
      throw CapExceeded("omega_central: p^dim Z(I(G)) = " + std::to_string(p) + "^" + std::to_string(d) +
                        " exceeds the enumeration cap");
  }
  EchelonBuilder builder(p, ctx.dim());
  std::vector<unsigned> c(d, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    FpVector z(p, ctx.dim());
    for (std::size_t k = 0; k < d; ++k) z.add_scaled(zi.basis()[k], c[k]);
    if (ctx.p_power(z, i).is_zero()) builder.insert(std::move(z));
    for (std::size_t k = 0; k < d && ++c[k] == p; ++k) c[k] = 0;
  }
  return subalgebra_generated(ctx, FpSubspace::from_builder(builder));
}

FpSubspace mho_ideal_mod_derived(const GroupAlgebra& ctx, unsigned i) {
  std::vector<FpVector> powers;
  for (Element g = 1; g < ctx.dim(); ++g) powers.push_back(ctx.p_power(ctx.basis_minus_one(g), i));
  const FpSubspace generated = ideal_generated(ctx, FpSubspace::span(ctx.prime(), ctx.dim(), powers));
  return generated + commutator_ideal(ctx);
}

Subgroup dimension_subgroup(const GroupAlgebra& ctx, unsigned m) {
  if (m < 1) throw InvalidInput("dimension_subgroup: m must be >= 1");
  const FpSubspace power = ctx.augmentation_power(m);
  ElementSet members;
  for (Element g = 0; g < ctx.dim(); ++g)
    if (power.contains(ctx.basis_minus_one(g))) members.set(g);
  return Subgroup(ctx.group(), members);
}

}  // namespace modalg
