#include "modalg/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "modalg/error.hpp"

namespace modalg {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

unsigned ilog(std::uint64_t value, unsigned p) {
  unsigned e = 0;
  while (value > 1) {
    value /= p;
    ++e;
  }
  return e;
}

FpVector random_member(std::mt19937_64& rng, const FpSubspace& space) {
  FpVector v(space.prime(), space.ambient_dim());
  for (const auto& b : space.basis()) v.add_scaled(b, static_cast<unsigned>(rng() % space.prime()));
  return v;
}

FpSubspace line(const FpVector& v) { return FpSubspace::span(v.prime(), v.dim(), std::span<const FpVector>(&v, 1)); }

FpSubspace group_span(const GroupAlgebra& ctx, const Subgroup& h) {
  std::vector<FpVector> vs;
  for (Element x : h.elements()) vs.push_back(ctx.basis(x));
  return FpSubspace::span(ctx.prime(), ctx.dim(), vs);
}

// I(Omega_s(Z(G)) G') kG
FpSubspace omega_side(const GroupAlgebra& ctx, unsigned s) {
  const PGroup& g = ctx.group();
  return normal_subgroup_ideal(ctx, join(omega_of(center(g), s), derived_subgroup(g)));
}

// I(mho_s(G) G') kG
FpSubspace mho_side(const GroupAlgebra& ctx, unsigned s) {
  const PGroup& g = ctx.group();
  return normal_subgroup_ideal(ctx, join(agemo(g, s), derived_subgroup(g)));
}

// The subgroup of `whole` given by indices of an induced copy.
Subgroup embed(const PGroup& whole, const std::vector<Element>& to_whole, const Subgroup& local) {
  ElementSet mask;
  for (Element x : local.elements()) mask.set(to_whole[x]);
  return Subgroup(whole, mask);
}

}  // namespace

FpSubspace LambdaData::kernel_ambient() const {
  FpSubspace out = domain.sub();
  for (const auto& k : kernel.basis()) out = out.with(domain.lift(k));
  return out;
}

LambdaData lambda_map(const GroupAlgebra& ctx, unsigned s, std::uint64_t seed) {
  const PGroup& g = ctx.group();
  const unsigned p = ctx.prime();
  if (s == 0 || ipow(p, s) > g.exponent())
    throw InvalidInput("lambda_map: need 1 <= s and p^s <= exp(G)");
  const std::uint64_t q = ipow(p, s - 1);
  const FpSubspace i2 = ctx.augmentation_power(2);
  QuotientSpace domain(omega_side(ctx, s) + i2, i2);
  const FpSubspace m = mho_side(ctx, s);
  const auto qi = static_cast<unsigned>(q);
  QuotientSpace codomain(ctx.augmentation_power(qi) + m, ctx.augmentation_power(qi + 1) + m);

  const std::size_t n = domain.dim();
  std::vector<FpVector> units, images;
  for (std::size_t k = 0; k < n; ++k) {
    units.push_back(FpVector::unit(p, n, k));
    images.push_back(codomain.project_vector(ctx.power(domain.section().basis()[k], q)));
  }

  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < n; ++k) {
    const FpVector shifted = domain.section().basis()[k] + random_member(rng, i2);
    if (codomain.project_vector(ctx.power(shifted, q)) != images[k])
      throw CheckFailed("lambda-well-defined", "representative shifted by I(G)^2 has a different image");
  }
  if (n > 0) {
    FpVector z(p, ctx.dim()), expected(p, codomain.dim());
    for (std::size_t k = 0; k < n; ++k) {
      const auto c = static_cast<unsigned>(rng() % p);
      z.add_scaled(domain.section().basis()[k], c);
      expected.add_scaled(images[k], c);
    }
    if (codomain.project_vector(ctx.power(z, q)) != expected)
      throw CheckFailed("lambda-well-defined", "map is not additive on a random combination");
  }

  LinearMap map(units, images, codomain.dim());
  FpSubspace kernel = map.kernel();
  return LambdaData{s, q, std::move(domain), std::move(codomain), std::move(map), std::move(kernel)};
}

SplitResult split_cyclic(const GroupAlgebra& ctx, Element h, const std::optional<FpVector>& j_generator) {
  const PGroup& g = ctx.group();
  Subgroup complement = retraction_complement(g, h);
  Subgroup cyclic = Subgroup::generated(g, std::span<const Element>(&h, 1));
  if (!is_internal_direct_product(cyclic, complement))
    throw CheckFailed("split", "<h> and the retraction kernel do not form a direct product");
  const FpVector gen = j_generator ? *j_generator : ctx.basis_minus_one(h);
  FpSubspace j = ideal_generated(ctx, line(gen));
  if (j.dim() + complement.size() != g.order())
    throw CheckFailed("split", "codim J = " + std::to_string(g.order() - j.dim()) + " but |G_0| = " +
                                   std::to_string(complement.size()));
  if (!j.intersect(group_span(ctx, complement)).is_zero()) throw CheckFailed("split", "J meets F_pG_0");
  return SplitResult{std::move(cyclic), std::move(complement), std::move(j)};
}

HomocyclicSplit homocyclic_split(const GroupAlgebra& ctx, unsigned s, const FpSubspace& v, std::uint64_t seed) {
  const PGroup& g = ctx.group();
  const unsigned p = ctx.prime();
  const LambdaData lam = lambda_map(ctx, s, seed);
  const FpSubspace& i2 = lam.domain.sub();
  if (!v.contains(i2) || !lam.domain.ambient().contains(v))
    throw CheckFailed("homocyclic-precondition", "V must contain I(G)^2 and lie in the domain of Lambda");
  std::vector<FpVector> vclasses;
  for (const auto& x : v.basis()) vclasses.push_back(lam.domain_class(x));
  const FpSubspace vbar = FpSubspace::span(p, lam.domain.dim(), vclasses);
  if (!vbar.intersect(lam.kernel).is_zero() || vbar.dim() + lam.kernel.dim() != lam.domain.dim())
    throw CheckFailed("homocyclic-precondition", "V/I(G)^2 is not a complement of ker Lambda");

  const std::uint64_t order = ipow(p, s);
  const QuotientSpace layer(ctx.augmentation_ideal(), i2);
  std::vector<FpVector> classes(g.order());
  for (Element x = 0; x < g.order(); ++x) classes[x] = layer.project_vector(ctx.basis_minus_one(x));
  const Subgroup z = center(g);

  Subgroup rest = Subgroup::whole(g);
  FpSubspace chosen = FpSubspace::zero(p, layer.dim());
  std::vector<Element> gens;
  for (const auto& vb : vbar.basis()) {
    const FpVector target = layer.project_vector(lam.domain.lift(vb));
    const InducedGroup local = induced_group(rest);
    bool found = false;
    for (Element i = 1; i < local.group.order() && !found; ++i) {
      const Element x = local.embedding(i);
      if (g.element_order(x) != order || !z.contains(x) || !chosen.contains(classes[x] - target)) continue;
      Subgroup complement;
      try {
        complement = retraction_complement(local.group, i);
      } catch (const CheckFailed&) {
        continue;
      }
      rest = embed(g, local.embedding.images, complement);
      chosen = chosen.with(classes[x]);
      gens.push_back(x);
      found = true;
    }
    if (!found) throw CheckFailed("homocyclic-lift", "no order-p^s central element with a complement in the class");
  }

  Subgroup h = Subgroup::generated(g, gens);
  if (!is_internal_direct_product(h, rest)) throw CheckFailed("homocyclic-verify", "H x K is not G");
  const AbelianInvariants inv = abelian_invariants(h);
  if (inv.exponents.size() != vbar.dim() ||
      std::any_of(inv.exponents.begin(), inv.exponents.end(), [&](std::uint64_t e) { return e != order; }))
    throw CheckFailed("homocyclic-verify", "H is not homocyclic of the expected rank, got " + inv.to_string());
  if (normal_subgroup_ideal(ctx, h) + i2 != v) throw CheckFailed("homocyclic-verify", "V != I(H)kG + I(G)^2");
  if (cyclic_factor_test(induced_group(rest).group, s).has_factor)
    throw CheckFailed("homocyclic-verify", "K still has a cyclic direct factor of order p^s");
  return HomocyclicSplit{std::move(h), std::move(rest), std::move(gens)};
}

AbelianInvariants GroupBasis::invariants() const {
  AbelianInvariants inv;
  for (auto o : orders)
    if (o > 1) inv.exponents.push_back(o);
  std::sort(inv.exponents.rbegin(), inv.exponents.rend());
  return inv;
}

std::vector<FpVector> group_basis_elements(const GroupAlgebra& ctx, const GroupBasis& basis) {
  std::vector<FpVector> out{ctx.one()};
  for (std::size_t k = 0; k < basis.generators.size(); ++k) {
    std::vector<FpVector> next;
    next.reserve(out.size() * basis.orders[k]);
    FpVector power = ctx.one();
    for (std::uint64_t e = 0; e < basis.orders[k]; ++e) {
      for (const auto& x : out) next.push_back(ctx.multiply(x, power));
      power = ctx.multiply(power, basis.generators[k]);
    }
    out = std::move(next);
  }
  return out;
}

GroupBasis find_group_basis_commutative(const AugmentedSubalgebra& b, const GroupBasisOptions& options) {
  const GroupAlgebra& ctx = b.context();
  if (!b.is_commutative()) throw InvalidInput("find_group_basis_commutative: B is not commutative");
  const unsigned p = ctx.prime();
  const FpSubspace& ib = b.augmentation_ideal();
  const std::size_t m = ib.dim();
  GroupBasis result;
  if (m == 0) return result;
  const FpSubspace ib2 = subspace_product(ctx, ib, ib);

  // x -> x^p is additive on B, so orders come from the images of a basis.
  std::vector<std::vector<FpVector>> frob{ib.basis()};
  while (std::any_of(frob.back().begin(), frob.back().end(), [](const FpVector& x) { return !x.is_zero(); })) {
    std::vector<FpVector> next;
    for (const auto& x : frob.back()) next.push_back(frobenius_power(ctx, x, 1));
    frob.push_back(std::move(next));
  }
  auto element = [&](const std::vector<unsigned>& c, std::size_t level) {
    FpVector x(p, ctx.dim());
    for (std::size_t i = 0; i < m; ++i)
      if (c[i]) x.add_scaled(frob[level][i], c[i]);
    return x;
  };

  struct Candidate {
    FpVector x;
    std::uint64_t order;
  };
  auto make_candidate = [&](const std::vector<unsigned>& c) -> std::optional<Candidate> {
    FpVector x = element(c, 0);
    if (x.is_zero() || ib2.contains(x)) return std::nullopt;
    std::size_t k = 1;
    while (!element(c, k).is_zero()) ++k;
    return Candidate{std::move(x), ipow(p, static_cast<unsigned>(k))};
  };

  auto search = [&](std::vector<Candidate> pool) -> bool {
    std::stable_sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& c) { return a.order > c.order; });
    std::size_t budget = options.search_budget;
    std::vector<std::size_t> picked;
    std::function<bool(std::size_t, const std::vector<FpVector>&, const FpSubspace&)> dfs =
        [&](std::size_t start, const std::vector<FpVector>& elements, const FpSubspace& frattini) -> bool {
      if (elements.size() == b.dim()) return true;
      for (std::size_t i = start; i < pool.size(); ++i) {
        if (budget-- == 0) throw CheckFailed("group-basis", "search budget exhausted");
        const Candidate& cand = pool[i];
        if (elements.size() * cand.order > b.dim() || b.dim() % (elements.size() * cand.order) != 0) continue;
        if (frattini.contains(cand.x)) continue;
        const FpVector u = ctx.one() + cand.x;
        std::vector<FpVector> next;
        EchelonBuilder independent(p, ctx.dim());
        FpVector power = ctx.one();
        bool ok = true;
        for (std::uint64_t e = 0; e < cand.order && ok; ++e) {
          for (const auto& y : elements) {
            FpVector prod = ctx.multiply(y, power);
            if (!independent.insert(prod)) {
              ok = false;
              break;
            }
            next.push_back(std::move(prod));
          }
          power = ctx.multiply(power, u);
        }
        if (!ok) continue;
        picked.push_back(i);
        if (dfs(i + 1, next, frattini.with(cand.x))) return true;
        picked.pop_back();
      }
      return false;
    };
    if (!dfs(0, {ctx.one()}, ib2)) return false;
    for (std::size_t i : picked) {
      result.generators.push_back(ctx.one() + pool[i].x);
      result.orders.push_back(pool[i].order);
    }
    return true;
  };

  const double log_size = static_cast<double>(m) * std::log2(static_cast<double>(p));
  bool found = false;
  if (log_size < 63 && ipow(p, static_cast<unsigned>(m)) <= options.enum_cap) {
    std::vector<Candidate> pool;
    std::vector<unsigned> c(m, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < m && ++c[i] == p) c[i++] = 0;
      if (i == m) break;
      if (auto cand = make_candidate(c)) pool.push_back(std::move(*cand));
    }
    found = search(std::move(pool));
  } else {
    result.sampled = true;
    std::mt19937_64 rng(options.seed);
    for (unsigned round = 0; round < options.sample_rounds && !found; ++round) {
      std::vector<Candidate> pool;
      std::set<std::vector<unsigned>> seen;
      for (std::size_t t = 0; t < options.sample_size; ++t) {
        std::vector<unsigned> c(m);
        for (auto& x : c) x = static_cast<unsigned>(rng() % p);
        if (!seen.insert(c).second) continue;
        if (auto cand = make_candidate(c)) pool.push_back(std::move(*cand));
      }
      found = search(std::move(pool));
    }
  }
  if (!found) throw CheckFailed("group-basis", "no group basis found for B");

  const auto elements = group_basis_elements(ctx, result);
  if (FpSubspace::span(p, ctx.dim(), elements) != b.space())
    throw CheckFailed("group-basis", "products of the chosen units do not span B");
  return result;
}

DecompositionReport recover_decomposition(const TensorFactorization& fact, const RecoverOptions& options) {
  if (!fact.b.is_commutative()) throw InvalidInput("recover_decomposition: B is not commutative");
  const PGroup& top = fact.ctx.group();
  const unsigned p = top.prime();

  DecompositionReport report;
  GroupBasis basis = find_group_basis_commutative(fact.b, options.basis);
  report.basis_invariants = basis.invariants();
  report.group_basis_sampled = basis.sampled;

  PGroup cur = top;
  std::vector<Element> to_top(top.order());
  for (Element x = 0; x < top.order(); ++x) to_top[x] = x;
  FpSubspace c_space = fact.c.space();
  std::vector<Element> hs;

  for (unsigned level = 0; !basis.generators.empty(); ++level) {
    const GroupAlgebra ctx = level == 0 ? fact.ctx : GroupAlgebra(cur);
    const AugmentedSubalgebra bk(ctx, FpSubspace::span(p, ctx.dim(), group_basis_elements(ctx, basis)));
    if (level > 0) {
      try {
        verify_tensor_factorization(ctx, bk, AugmentedSubalgebra(ctx, c_space));
      } catch (const CheckFailed& e) {
        throw CheckFailed("recursion", "level " + std::to_string(level) + ": " + e.what());
      }
    }

    DecompositionStep step;
    step.level = level;
    step.group_order = cur.order();
    const FpVector b = basis.generators.front();
    step.b_order = basis.orders.front();
    const unsigned s = ilog(step.b_order, p);
    step.s = s;
    const std::uint64_t q = step.b_order / p;
    const FpVector bm1 = b - ctx.one();

    if (!omega_side(ctx, s).contains(bk.augmentation_ideal()))
      throw CheckFailed("omega-containment", "I(B) is not inside I(Omega_s(Z(G))G')kG");
    step.omega_containment = true;

    const FpSubspace jennings_target =
        ctx.augmentation_power(static_cast<unsigned>(q) + 1) + mho_side(ctx, s);
    if (jennings_target.contains(ctx.power(bm1, q)))
      throw CheckFailed("jennings", "(b-1)^(p^(s-1)) lies in I(G)^(p^(s-1)+1) + I(mho_s(G)G')kG");
    step.jennings_nonmembership = true;

    const LambdaData lam = lambda_map(ctx, s, options.seed + level);
    const FpVector cb = lam.domain_class(bm1);
    if (lam.map.apply(cb).is_zero()) throw CheckFailed("lambda-kernel", "class of b-1 lies in ker Lambda");
    step.lambda_nonkernel = true;
    step.lambda_domain_dim = lam.domain.dim();
    step.lambda_kernel_dim = lam.kernel.dim();

    const FpSubspace vbar = lam.kernel.complement_within(FpSubspace::full(p, lam.domain.dim()), line(cb));
    step.v_dim = vbar.dim();
    if (options.homocyclic_crosscheck) {
      FpSubspace v = lam.domain.sub();
      for (const auto& x : vbar.basis()) v = v.with(lam.domain.lift(x));
      step.homocyclic_rank = homocyclic_split(ctx, s, v, options.seed + level).generators.size();
    }

    // h: first central element of order p^s in the Frattini class of b - 1
    // that splits off together with kG = J ⊕ F_pG_0.
    const FpSubspace& i2 = lam.domain.sub();
    const QuotientSpace layer(ctx.augmentation_ideal(), i2);
    const FpVector target = layer.project_vector(bm1);
    const Subgroup z = center(cur);
    std::optional<SplitResult> split;
    Element h = 0;
    for (Element x = 1; x < cur.order() && !split; ++x) {
      if (cur.element_order(x) != step.b_order || !z.contains(x)) continue;
      if (layer.project_vector(ctx.basis_minus_one(x)) != target) continue;
      try {
        SplitResult r = split_cyclic(ctx, x, bm1);
        if (r.ideal + i2 != normal_subgroup_ideal(ctx, r.cyclic) + i2) continue;
        split = std::move(r);
        h = x;
      } catch (const CheckFailed&) {
      }
    }
    if (!split) throw CheckFailed("lift", "no element of order p^s in the class of b-1 splits off");
    step.h = to_top[h];
    step.h_order = step.b_order;
    step.j_dim = split->ideal.dim();
    step.complement_order = split->complement.size();
    hs.push_back(step.h);

    // kG -> kG/J ≅ F_pG_0, written in the coordinates of G_0.
    const QuotientAlgebra qa(ctx, split->ideal, group_span(ctx, split->complement));
    const InducedGroup g0 = induced_group(split->complement);
    std::vector<std::size_t> local(cur.order(), 0);
    for (Element i = 0; i < g0.group.order(); ++i) local[g0.embedding(i)] = i;
    auto to_local = [&](const FpVector& x) {
      const FpVector y = qa.section_component(x);
      FpVector out(p, g0.group.order());
      y.for_each_nonzero([&](std::size_t i, unsigned c) { out.set(local[i], c); });
      return out;
    };

    GroupBasis next;
    for (std::size_t k = 1; k < basis.generators.size(); ++k) {
      next.generators.push_back(to_local(basis.generators[k]));
      next.orders.push_back(basis.orders[k]);
    }
    std::vector<FpVector> cs;
    for (const auto& x : c_space.basis()) cs.push_back(to_local(x));
    FpSubspace next_c = FpSubspace::span(p, g0.group.order(), cs);
    if (next_c.dim() != c_space.dim()) throw CheckFailed("projection", "C does not embed into kG/J");

    std::vector<Element> next_top(g0.group.order());
    for (Element i = 0; i < g0.group.order(); ++i) next_top[i] = to_top[g0.embedding(i)];
    report.steps.push_back(step);
    basis = std::move(next);
    c_space = std::move(next_c);
    to_top = std::move(next_top);
    cur = g0.group;
  }

  if (c_space.dim() != cur.order()) throw CheckFailed("final", "C does not fill the last group algebra");
  report.c_side = embed(top, to_top, Subgroup::whole(cur));
  report.b_side = Subgroup::generated(top, hs);
  report.b_generators = hs;
  report.c_generators = greedy_generators(report.c_side);
  if (!is_internal_direct_product(report.b_side, report.c_side))
    throw CheckFailed("verify", "B-side and C-side do not form an internal direct product");
  if (report.b_side.size() != fact.b.dim() || report.c_side.size() != fact.c.dim())
    throw CheckFailed("verify", "subgroup orders do not match dim B and dim C");
  report.b_invariants = abelian_invariants(report.b_side);
  if (report.b_invariants != report.basis_invariants)
    throw CheckFailed("invariants", "B-side " + report.b_invariants.to_string() + " vs group basis " +
                                        report.basis_invariants.to_string());
  report.verified = true;
  return report;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::three_generated:
      return "three_generated";
    case CertificateKind::cyclic_derived:
      return "cyclic_derived";
    case CertificateKind::none:
      break;
  }
  return "none";
}

Certificate certify_indecomposable(const PGroup& g, std::size_t oracle_cap) {
  Certificate cert;
  cert.directly_indecomposable = !find_direct_factor(g, oracle_cap).has_value();
  const GroupAlgebra ctx(g);
  cert.d = static_cast<unsigned>(ctx.augmentation_ideal().dim() - ctx.augmentation_power(2).dim());
  if (cert.d != generator_rank(g))
    throw CheckFailed("frattini-rank", "dim I(G)/I(G)^2 differs from the generator rank");
  cert.three_generated = cert.d <= 3;
  const Subgroup derived = derived_subgroup(g);
  cert.derived_order = derived.size();
  for (Element x : derived.elements())
    if (g.element_order(x) == derived.size()) {
      cert.derived_generator = x;
      break;
    }
  cert.derived_cyclic = cert.derived_generator.has_value();
  if (cert.directly_indecomposable && cert.three_generated)
    cert.kind = CertificateKind::three_generated;
  else if (cert.directly_indecomposable && cert.derived_cyclic)
    cert.kind = CertificateKind::cyclic_derived;
  return cert;
}

}  // namespace modalg
