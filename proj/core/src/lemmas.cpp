#include "modalg/lemmas.hpp"

#include <algorithm>

#include "modalg/error.hpp"
#include "modalg/group_ops.hpp"
#include "modalg/ideals.hpp"

namespace modalg {

bool IdentityReport::holds() const {
  return equal && std::all_of(side_checks.begin(), side_checks.end(), [](const auto& c) { return c.second; });
}

namespace {

std::optional<FpVector> first_outside(const FpSubspace& from, const FpSubspace& target) {
  for (const auto& v : from.basis())
    if (!target.contains(v)) return v;
  return std::nullopt;
}

Subgroup agemo_or_whole(const PGroup& g, unsigned s) { return s == 0 ? Subgroup::whole(g) : agemo(g, s); }

}  // namespace

IdentityReport compare_subspaces(std::string id, const FpSubspace& left, const FpSubspace& right) {
  IdentityReport r;
  r.id = std::move(id);
  r.left_dim = left.dim();
  r.right_dim = right.dim();
  r.equal = left == right;
  if (!r.equal) {
    r.witness = first_outside(left, right);
    if (!r.witness) r.witness = first_outside(right, left);
  }
  return r;
}

IdentityReport check_containment(std::string id, const FpSubspace& left, const FpSubspace& right) {
  IdentityReport r;
  r.id = std::move(id);
  r.relation = "subset";
  r.left_dim = left.dim();
  r.right_dim = right.dim();
  r.witness = first_outside(left, right);
  r.equal = !r.witness;
  return r;
}

IdentityReport lemma_identity_check(const GroupAlgebra& ctx, int item, unsigned i, unsigned j) {
  if (i == 0 || j == 0) throw InvalidInput("lemma_identity_check: i and j must be positive");
  const PGroup& g = ctx.group();
  const Subgroup derived = derived_subgroup(g);
  const Subgroup omega_z = omega_of(center(g), i);

  Subgroup n;
  FpSubspace right;
  switch (item) {
    case 1:
      n = join(agemo(g, i), derived);
      right = mho_ideal_mod_derived(ctx, i);
      break;
    case 2:
      n = join(omega_z, derived);
      right = right_ideal_generated(ctx, omega_central(ctx, i)) + commutator_ideal(ctx);
      break;
    case 3:
      n = join(join(omega_z, agemo(g, j)), derived);
      right = right_ideal_generated(ctx, omega_central(ctx, i)) + mho_ideal_mod_derived(ctx, j);
      break;
    default:
      throw InvalidInput("lemma_identity_check: item must be 1, 2 or 3");
  }
  auto report = compare_subspaces("lemma" + std::to_string(item), normal_subgroup_ideal(ctx, n), right);
  report.params["i"] = i;
  if (item == 3) report.params["j"] = j;
  return report;
}

CyclicFactorResult cyclic_factor_test(const PGroup& g, unsigned i) {
  if (i == 0) throw InvalidInput("cyclic_factor_test: i must be positive");
  const RSubquotient r = r_subquotient(g, i);
  const GroupAlgebra kq(r.quotient.group);
  const FpSubspace ideal = normal_subgroup_ideal(kq, r.in_quotient);

  CyclicFactorResult out;
  out.i = i;
  out.exponent_found = unit_exponent_commutative(kq, ideal);
  out.r_exponent = abelian_invariants(r.group).exponent();
  std::uint64_t target = 1;
  for (unsigned k = 0; k < i; ++k) target *= g.prime();
  out.has_factor = out.exponent_found >= target;
  return out;
}

TensorFactorization verify_tensor_factorization(const GroupAlgebra& ctx, const AugmentedSubalgebra& b,
                                                const AugmentedSubalgebra& c) {
  if (!b.context().group().same_table(ctx.group()) || !c.context().group().same_table(ctx.group()))
    throw InvalidInput("verify_tensor_factorization: subalgebras of a different group algebra");
  if (b.dim() * c.dim() != ctx.dim())
    throw CheckFailed("dimension", "dim B * dim C = " + std::to_string(b.dim() * c.dim()) +
                                       " but |G| = " + std::to_string(ctx.dim()));
  if (!commutes_elementwise(ctx, b.space(), c.space()))
    throw CheckFailed("commute", "B and C do not commute elementwise");
  const FpSubspace products = subspace_product(ctx, b.space(), c.space());
  if (products.dim() != ctx.dim())
    throw CheckFailed("product-span", "products bc span a subspace of dimension " + std::to_string(products.dim()));

  const FpSubspace& ib = b.augmentation_ideal();
  const FpSubspace& ic = c.augmentation_ideal();
  const FpSubspace ibic = subspace_product(ctx, ib, ic);
  const FpSubspace sum = ib + ic + ibic;
  if (ib.dim() + ic.dim() + ibic.dim() != sum.dim() || sum != ctx.augmentation_ideal())
    throw CheckFailed("decomposition", "I(G) is not I(B) + I(C) + I(B)I(C) as a direct sum");
  return TensorFactorization{ctx, b, c};
}

unsigned unit_exponent_log(const AugmentedSubalgebra& b) {
  const GroupAlgebra& ctx = b.context();
  std::uint64_t q = unit_exponent_commutative(ctx, b.augmentation_ideal());
  unsigned s = 0;
  while (q > 1) {
    q /= ctx.prime();
    ++s;
  }
  return s;
}

IdentityReport babelian_checks(const TensorFactorization& fact, char part) {
  const GroupAlgebra& ctx = fact.ctx;
  if (!fact.b.is_commutative()) throw InvalidInput("babelian_checks: B is not commutative");
  const FpSubspace& ib = fact.b.augmentation_ideal();
  const FpSubspace& ic = fact.c.augmentation_ideal();
  const FpSubspace target = ic + subspace_product(ctx, ib, ic);

  switch (part) {
    case 'a': {
      const FpSubspace whole = ctx.whole();
      const FpSubspace commutators = commutator_span(ctx, whole, whole);
      const FpSubspace icc = commutator_span(ctx, ic, ic);
      auto report = compare_subspaces("prop-a", commutators, icc + subspace_product(ctx, icc, ib));
      report.side_checks.emplace_back("contained in I(C)+I(B)I(C)", target.contains(commutators));
      return report;
    }
    case 'c': {
      const unsigned s = unit_exponent_log(fact.b);
      const PGroup& g = ctx.group();
      const Subgroup n = join(agemo_or_whole(g, s), derived_subgroup(g));
      auto report = check_containment("prop-c", normal_subgroup_ideal(ctx, n), target);
      report.params["s"] = s;
      return report;
    }
    case 'd': {
      const unsigned s = unit_exponent_log(fact.b);
      IdentityReport report;
      report.id = "prop-d";
      report.relation = "cyclic-factor";
      report.params["s"] = s;
      if (s == 0) {
        report.equal = true;
        report.params["exponent_found"] = 1;
        return report;
      }
      const CyclicFactorResult r = cyclic_factor_test(ctx.group(), s);
      report.equal = r.has_factor;
      report.params["exponent_found"] = r.exponent_found;
      return report;
    }
    default:
      throw InvalidInput(std::string("babelian_checks: unknown part '") + part + "'");
  }
}

}  // namespace modalg
