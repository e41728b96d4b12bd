#include "modalg/pgroup.hpp"

#include <algorithm>
#include <sstream>

#include "modalg/error.hpp"
#include "modalg/fp_vector.hpp"

namespace modalg {

namespace {

std::string triple(Element a, Element b, Element c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace

PGroup PGroup::from_table(unsigned p, const std::vector<std::vector<int>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidInput("group table is empty");
  if (n > kMaxGroupOrder) throw InvalidInput("group order " + std::to_string(n) + " exceeds 256");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw InvalidInput("group table row " + std::to_string(a) + " has wrong length");
    for (int x : table[a])
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        throw InvalidInput("group table row " + std::to_string(a) + " has an out-of-range entry");
  }
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b)
      ok = table[c][b] == static_cast<int>(b) && table[b][c] == static_cast<int>(b);
    if (ok) e = c;
  }
  if (e == n) throw InvalidInput("group table has no identity element");
  auto relabel = [&](std::size_t x) -> Element {
    if (x == e) return 0;
    if (x == 0) return static_cast<Element>(e);
    return static_cast<Element>(x);
  };
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[relabel(a) * n + relabel(b)] = relabel(static_cast<std::size_t>(table[a][b]));
  return from_flat_table(p, n, std::move(flat), std::move(name));
}

PGroup PGroup::from_flat_table(unsigned p, std::size_t n, std::vector<Element> flat, std::string name) {
  if (!is_supported_prime(p)) throw InvalidInput("unsupported prime " + std::to_string(p));
  if (n == 0 || n > kMaxGroupOrder) throw InvalidInput("group order out of range");
  if (flat.size() != n * n) throw InvalidInput("group table has wrong size");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->order = n;
  d->name = std::move(name);
  {
    std::size_t m = n;
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1) throw InvalidInput("group order " + std::to_string(n) + " is not a power of " + std::to_string(p));
    d->log_order = k;
  }
  for (auto x : flat)
    if (x >= n) throw InvalidInput("group table has an out-of-range entry");
  for (Element b = 0; b < n; ++b)
    if (flat[b] != b || flat[b * n] != b) throw InvalidInput("element 0 is not the identity");
  // Latin square.
  for (std::size_t a = 0; a < n; ++a) {
    ElementSet row, col;
    for (std::size_t b = 0; b < n; ++b) {
      row.set(flat[a * n + b]);
      col.set(flat[b * n + a]);
    }
    if (row.count() != n || col.count() != n)
      throw InvalidInput("group table is not a Latin square at index " + std::to_string(a));
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = flat[a * n + b];
      for (Element c = 0; c < n; ++c)
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]])
          throw InvalidInput("associativity fails for " + triple(a, b, c));
    }
  d->inverse.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (flat[a * n + b] == 0) d->inverse[a] = b;
  d->orders.assign(n, 1);
  for (Element a = 0; a < n; ++a) {
    std::uint64_t k = 1;
    Element x = a;
    while (x != 0) {
      x = flat[x * n + a];
      ++k;
    }
    std::uint64_t m = k;
    while (m % p == 0) m /= p;
    if (m != 1) throw InvalidInput("element " + std::to_string(a) + " has order " + std::to_string(k) + ", not a power of p");
    d->orders[a] = k;
    d->exponent = std::max(d->exponent, k);
  }
  for (Element a = 0; a < n && d->abelian; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (flat[a * n + b] != flat[b * n + a]) {
        d->abelian = false;
        break;
      }
  d->table = std::move(flat);
  return PGroup(std::move(d));
}

PGroup PGroup::trivial(unsigned p) { return from_flat_table(p, 1, {0}, "C1"); }

PGroup PGroup::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  return PGroup(std::move(d));
}

Element PGroup::pow(Element a, std::uint64_t k) const noexcept {
  k %= d_->orders[a];
  Element result = 0;
  Element base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<int>> PGroup::table_rows() const {
  const std::size_t n = order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = static_cast<int>(d_->table[a * n + b]);
  return rows;
}

bool PGroup::same_table(const PGroup& other) const noexcept {
  if (d_ == other.d_) return true;
  if (!d_ || !other.d_) return false;
  return d_->p == other.d_->p && d_->table == other.d_->table;
}

ElementSet closure(const PGroup& g, const ElementSet& seed) {
  ElementSet members;
  members.set(0);
  std::vector<Element> list{0};
  std::vector<Element> gens;
  // Only seeds not yet reached become generators; each new generator
  // re-sweeps the current list, so the cost is O(|H| log^2 |H|).
  for (Element x = 1; x < g.order(); ++x) {
    if (!seed.test(x) || members.test(x)) continue;
    gens.push_back(x);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (Element s : gens) {
        const Element y = g.mul(list[i], s);
        if (!members.test(y)) {
          members.set(y);
          list.push_back(y);
        }
      }
  }
  return members;
}

Subgroup::Subgroup(PGroup parent, const ElementSet& members, std::vector<Element> sorted)
    : parent_(std::move(parent)), mask_(members), elements_(std::move(sorted)) {}

Subgroup::Subgroup(PGroup parent, const ElementSet& members) : parent_(std::move(parent)), mask_(members) {
  const std::size_t n = parent_.order();
  for (Element x = 0; x < n; ++x)
    if (mask_.test(x)) elements_.push_back(x);
  if ((mask_ >> n).any()) throw InvalidInput("subgroup mask has elements outside the group");
  if (!mask_.test(0)) throw InvalidInput("subset does not contain the identity");
  for (Element a : elements_) {
    if (!mask_.test(parent_.inv(a))) throw InvalidInput("subset is not closed under inverses");
    for (Element b : elements_)
      if (!mask_.test(parent_.mul(a, b))) throw InvalidInput("subset is not closed under multiplication");
  }
}

Subgroup Subgroup::trivial(const PGroup& g) {
  ElementSet m;
  m.set(0);
  return Subgroup(g, m, {0});
}

Subgroup Subgroup::whole(const PGroup& g) {
  ElementSet m;
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    m.set(x);
    all[x] = x;
  }
  return Subgroup(g, m, std::move(all));
}

Subgroup Subgroup::generated(const PGroup& g, std::span<const Element> generators) {
  ElementSet seed;
  for (Element x : generators) {
    if (x >= g.order()) throw InvalidInput("generator index out of range");
    seed.set(x);
  }
  const ElementSet m = closure(g, seed);
  std::vector<Element> sorted;
  for (Element x = 0; x < g.order(); ++x)
    if (m.test(x)) sorted.push_back(x);
  return Subgroup(g, m, std::move(sorted));
}

bool Subgroup::is_normal() const {
  for (Element x : elements_)
    for (Element g = 0; g < parent_.order(); ++g)
      if (!mask_.test(parent_.conj(x, g))) return false;
  return true;
}

void GroupHom::validate() const {
  if (images.size() != source.order()) throw InvalidInput("GroupHom: wrong number of images");
  for (Element a = 0; a < source.order(); ++a) {
    if (images[a] >= target.order()) throw InvalidInput("GroupHom: image out of range");
    for (Element b = 0; b < source.order(); ++b)
      if (images[source.mul(a, b)] != target.mul(images[a], images[b]))
        throw InvalidInput("GroupHom: images are not multiplicative");
  }
}

Subgroup GroupHom::kernel() const {
  ElementSet m;
  for (Element a = 0; a < source.order(); ++a)
    if (images[a] == 0) m.set(a);
  return Subgroup(source, m);
}

Subgroup GroupHom::image(const Subgroup& h) const {
  ElementSet m;
  for (Element a : h.elements()) m.set(images[a]);
  return Subgroup(target, m);
}

Subgroup GroupHom::preimage(const Subgroup& h) const {
  ElementSet m;
  for (Element a = 0; a < source.order(); ++a)
    if (h.contains(images[a])) m.set(a);
  return Subgroup(source, m);
}

}  // namespace modalg
