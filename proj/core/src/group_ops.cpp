#include "modalg/group_ops.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "modalg/error.hpp"

namespace modalg {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

Subgroup from_mask(const PGroup& g, const ElementSet& m) { return Subgroup(g, m); }

Subgroup generated_by_set(const PGroup& g, const ElementSet& seed) { return from_mask(g, closure(g, seed)); }

}  // namespace

std::uint64_t element_order(const PGroup& g, Element x) {
  if (x >= g.order()) throw InvalidInput("element index out of range");
  return g.element_order(x);
}

Subgroup center(const PGroup& g) { return center_of(Subgroup::whole(g)); }

Subgroup center_of(const Subgroup& h) {
  const PGroup& g = h.parent();
  ElementSet m;
  for (Element x : h.elements()) {
    bool central = true;
    for (Element y : h.elements())
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) m.set(x);
  }
  return from_mask(g, m);
}

Subgroup derived_subgroup(const PGroup& g) {
  ElementSet seed;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) seed.set(g.commutator(a, b));
  return generated_by_set(g, seed);
}

Subgroup omega_of(const Subgroup& h, unsigned i) {
  const PGroup& g = h.parent();
  const std::uint64_t q = ipow(g.prime(), i);
  ElementSet seed;
  for (Element x : h.elements())
    if (q % g.element_order(x) == 0) seed.set(x);
  return generated_by_set(g, seed);
}

Subgroup agemo_of(const Subgroup& h, unsigned i) {
  const PGroup& g = h.parent();
  const std::uint64_t q = ipow(g.prime(), i);
  ElementSet seed;
  for (Element x : h.elements()) seed.set(g.pow(x, q));
  return generated_by_set(g, seed);
}

Subgroup omega(const PGroup& g, unsigned i) { return omega_of(Subgroup::whole(g), i); }
Subgroup agemo(const PGroup& g, unsigned i) { return agemo_of(Subgroup::whole(g), i); }
Subgroup frattini(const PGroup& g) { return join(agemo(g, 1), derived_subgroup(g)); }

Subgroup characteristic_subgroup(const PGroup& g, SubgroupKind kind, unsigned i) {
  switch (kind) {
    case SubgroupKind::center:
      return center(g);
    case SubgroupKind::derived:
      return derived_subgroup(g);
    case SubgroupKind::frattini:
      return frattini(g);
    case SubgroupKind::omega:
    case SubgroupKind::agemo:
      if (i < 1) throw InvalidInput("omega/agemo need i >= 1");
      return kind == SubgroupKind::omega ? omega(g, i) : agemo(g, i);
  }
  throw InvalidInput("unknown subgroup kind");
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  return generated_by_set(a.parent(), a.mask() | b.mask());
}

Subgroup meet(const Subgroup& a, const Subgroup& b) { return from_mask(a.parent(), a.mask() & b.mask()); }

Subgroup normal_closure(const PGroup& g, const ElementSet& seed) {
  ElementSet conj;
  for (Element x = 0; x < g.order(); ++x)
    if (seed.test(x))
      for (Element y = 0; y < g.order(); ++y) conj.set(g.conj(x, y));
  return generated_by_set(g, conj);
}

std::vector<std::vector<Element>> conjugacy_classes(const PGroup& g) {
  std::vector<std::vector<Element>> classes;
  ElementSet seen;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen.test(x)) continue;
    ElementSet cls;
    for (Element y = 0; y < g.order(); ++y) cls.set(g.conj(x, y));
    std::vector<Element> members;
    for (Element z = 0; z < g.order(); ++z)
      if (cls.test(z)) members.push_back(z);
    seen |= cls;
    classes.push_back(std::move(members));
  }
  return classes;
}

Quotient quotient_group(const PGroup& g, const Subgroup& n) {
  if (!n.parent().same_table(g)) throw InvalidInput("quotient_group: subgroup of a different group");
  if (!n.is_normal()) throw InvalidInput("quotient_group: subgroup is not normal");
  const std::size_t order = g.order();
  std::vector<Element> rep_of(order, 0);
  std::vector<Element> reps;
  std::vector<Element> coset_index(order, 0);
  std::vector<bool> assigned(order, false);
  for (Element x = 0; x < order; ++x) {
    if (assigned[x]) continue;
    const auto idx = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : n.elements()) {
      const Element y = g.mul(x, m);
      assigned[y] = true;
      coset_index[y] = idx;
    }
  }
  const std::size_t q = reps.size();
  std::vector<Element> flat(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) flat[i * q + j] = coset_index[g.mul(reps[i], reps[j])];
  PGroup quotient = PGroup::from_flat_table(g.prime(), q, std::move(flat), g.name() + "/N");
  GroupHom projection{g, quotient, coset_index};
  return Quotient{quotient, std::move(projection), n};
}

InducedGroup induced_group(const Subgroup& h) {
  const PGroup& g = h.parent();
  const auto& elems = h.elements();
  const std::size_t m = elems.size();
  std::vector<Element> index(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) index[elems[i]] = static_cast<Element>(i);
  std::vector<Element> flat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) flat[i * m + j] = index[g.mul(elems[i], elems[j])];
  PGroup sub = PGroup::from_flat_table(g.prime(), m, std::move(flat), g.name() + ".sub");
  return InducedGroup{sub, GroupHom{sub, g, elems}};
}

PGroup direct_product(const PGroup& a, const PGroup& b) {
  if (a.prime() != b.prime()) throw InvalidInput("direct_product: factors over different primes");
  const std::size_t na = a.order(), nb = b.order();
  const std::size_t n = na * nb;
  if (n > kMaxGroupOrder) throw InvalidInput("direct_product: order exceeds 256");
  std::vector<Element> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
      const auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      flat[x * n + y] = static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  return PGroup::from_flat_table(a.prime(), n, std::move(flat), a.name() + "x" + b.name());
}

RSubquotient r_subquotient(const PGroup& g, unsigned i) {
  if (i < 1) throw InvalidInput("r_subquotient: i must be positive");
  const Subgroup base = join(agemo(g, i), derived_subgroup(g));
  Quotient q = quotient_group(g, base);
  const Subgroup omega_center = omega_of(center(g), i);
  Subgroup image = q.projection.image(omega_center);
  PGroup r = induced_group(image).group.renamed("R" + std::to_string(i) + "(" + g.name() + ")");
  return RSubquotient{std::move(q), std::move(image), std::move(r)};
}

std::uint64_t AbelianInvariants::order() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{1}, std::multiplies<>());
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
  os << '}';
  return os.str();
}

std::vector<Element> abelian_basis(const PGroup& g) {
  if (!g.is_abelian()) throw InvalidInput("abelian_invariants: group is not abelian");
  const unsigned p = g.prime();
  std::vector<Element> basis;
  ElementSet span;
  span.set(0);
  while (span.count() < g.order()) {
    // Order of each element modulo the current span.
    std::uint64_t best = 1;
    std::vector<std::uint64_t> rel(g.order(), 1);
    for (Element y = 0; y < g.order(); ++y) {
      std::uint64_t q = 1;
      Element z = y;
      while (!span.test(z)) {
        z = g.pow(z, p);
        q *= p;
      }
      rel[y] = q;
      best = std::max(best, q);
    }
    Element chosen = 0;
    for (Element y = 0; y < g.order(); ++y)
      if (rel[y] == best && g.element_order(y) == best) {
        chosen = y;
        break;
      }
    if (chosen == 0) throw CheckFailed("abelian_basis", "no lift of full order found");
    basis.push_back(chosen);
    ElementSet seed = span;
    seed.set(chosen);
    span = closure(g, seed);
  }
  return basis;
}

AbelianInvariants abelian_invariants(const PGroup& g) {
  AbelianInvariants inv;
  for (Element x : abelian_basis(g)) inv.exponents.push_back(g.element_order(x));
  std::sort(inv.exponents.rbegin(), inv.exponents.rend());
  return inv;
}

AbelianInvariants abelian_invariants(const Subgroup& h) { return abelian_invariants(induced_group(h).group); }

bool is_internal_direct_product(const Subgroup& h, const Subgroup& k) {
  if (!h.parent().same_table(k.parent())) return false;
  if (!h.is_normal() || !k.is_normal()) return false;
  if ((h.mask() & k.mask()).count() != 1) return false;
  return h.size() * k.size() == h.parent().order();
}

Subgroup retraction_complement(const PGroup& g, Element h) {
  if (h >= g.order()) throw InvalidInput("retraction_complement: element out of range");
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(x, h) != g.mul(h, x)) throw CheckFailed("retraction", "element is not central");
  const std::uint64_t ord = g.element_order(h);
  const Quotient ab = quotient_group(g, derived_subgroup(g));
  const PGroup& q = ab.group;
  const std::vector<Element> basis = abelian_basis(q);
  const std::size_t r = basis.size();
  // Coordinates of every element of G/G' in the basis.
  std::vector<std::vector<std::uint64_t>> coords(q.order(), std::vector<std::uint64_t>(r, 0));
  {
    std::vector<std::uint64_t> c(r, 0);
    for (;;) {
      Element x = 0;
      for (std::size_t j = 0; j < r; ++j) x = q.mul(x, q.pow(basis[j], c[j]));
      coords[x] = c;
      std::size_t j = 0;
      while (j < r && ++c[j] == q.element_order(basis[j])) c[j++] = 0;
      if (j == r) break;
    }
  }
  // Hom G/G' -> Z/ord: basis[j] -> y_j with order(basis[j]) * y_j = 0 mod ord.
  std::vector<std::uint64_t> step(r), count(r);
  for (std::size_t j = 0; j < r; ++j) {
    const std::uint64_t gcd = std::gcd(q.element_order(basis[j]), ord);
    step[j] = ord / gcd;
    count[j] = gcd;
  }
  const auto& ch = coords[ab.projection(h)];
  std::vector<std::uint64_t> k(r, 0);
  auto value = [&](const std::vector<std::uint64_t>& c) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < r; ++j) v = (v + c[j] * k[j] * step[j]) % ord;
    return v;
  };
  for (;;) {
    if (value(ch) == 1 % ord) {
      ElementSet kernel;
      for (Element x = 0; x < g.order(); ++x)
        if (value(coords[ab.projection(x)]) == 0) kernel.set(x);
      Subgroup complement(g, kernel);
      const Subgroup cyc = Subgroup::generated(g, std::span<const Element>(&h, 1));
      if (!is_internal_direct_product(cyc, complement))
        throw CheckFailed("retraction", "kernel is not a complement");
      return complement;
    }
    std::size_t j = 0;
    while (j < r && ++k[j] == count[j]) k[j++] = 0;
    if (j == r) break;
  }
  throw CheckFailed("retraction", "no homomorphism onto <h> fixing h (h has no direct complement)");
}

Fingerprint fingerprint(const PGroup& g) {
  const Quotient ab = quotient_group(g, derived_subgroup(g));
  return Fingerprint{g.order(), abelian_invariants(ab.group), center(g).size(), g.exponent()};
}

std::vector<Element> greedy_generators(const Subgroup& h) {
  std::vector<Element> out;
  ElementSet span;
  span.set(0);
  for (Element x : h.elements()) {
    if (span.test(x)) continue;
    out.push_back(x);
    span.set(x);
    span = closure(h.parent(), span);
  }
  return out;
}

unsigned generator_rank(const PGroup& g) {
  std::size_t index = g.order() / frattini(g).size();
  unsigned d = 0;
  while (index > 1) {
    index /= g.prime();
    ++d;
  }
  return d;
}

}  // namespace modalg
