#include "modalg/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "modalg/error.hpp"

namespace modalg {

namespace {

void check_cap(const PGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapExceeded("direct_factor_oracle: |G| = " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cap));
}

bool mask_less(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = 0; i < kMaxGroupOrder; ++i)
    if (a.test(i) != b.test(i)) return a.test(i);
  return false;
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const PGroup& g) {
  const std::size_t n = g.order();
  // Normal closures of single elements generate the lattice under joins.
  std::vector<ElementSet> classes;
  for (Element x = 0; x < n; ++x) {
    ElementSet seed;
    seed.set(x);
    classes.push_back(normal_closure(g, seed).mask());
  }
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> found;
  ElementSet trivial;
  trivial.set(0);
  seen.insert(trivial);
  found.push_back(trivial);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet current = found[i];
    for (Element x = 0; x < n; ++x) {
      if (current.test(x)) continue;
      const ElementSet next = closure(g, current | classes[x]);
      if (seen.insert(next).second) found.push_back(next);
    }
  }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return mask_less(a, b);
  });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& m : found) out.emplace_back(g, m);
  return out;
}

namespace {

template <typename Visit>
void for_each_factor_pair(const PGroup& g, Visit&& visit) {
  const std::vector<Subgroup> normals = normal_subgroups(g);
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const std::size_t hs = normals[i].size();
    if (hs == 1 || hs == n || hs * hs > n) continue;
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      if (normals[j].size() * hs != n) continue;
      if ((normals[i].mask() & normals[j].mask()).count() != 1) continue;
      if (!visit(normals[i], normals[j])) return;
    }
  }
}

}  // namespace

std::vector<std::pair<Subgroup, Subgroup>> direct_factor_oracle(const PGroup& g, std::size_t cap) {
  check_cap(g, cap);
  std::vector<std::pair<Subgroup, Subgroup>> out;
  for_each_factor_pair(g, [&](const Subgroup& h, const Subgroup& k) {
    out.emplace_back(h, k);
    return true;
  });
  return out;
}

std::optional<std::pair<Subgroup, Subgroup>> find_direct_factor(const PGroup& g, std::size_t cap) {
  check_cap(g, cap);
  std::optional<std::pair<Subgroup, Subgroup>> out;
  for_each_factor_pair(g, [&](const Subgroup& h, const Subgroup& k) {
    out.emplace(h, k);
    return false;
  });
  return out;
}

namespace {

// Memo keyed by the exact Cayley table; fingerprints only bucket the lookup.
struct FactorMemo {
  std::mutex mutex;
  std::map<std::pair<std::size_t, std::uint64_t>, std::vector<std::pair<PGroup, std::vector<PGroup>>>> buckets;

  std::optional<std::vector<PGroup>> find(const PGroup& g) {
    std::lock_guard lock(mutex);
    auto it = buckets.find({g.order(), g.exponent()});
    if (it == buckets.end()) return std::nullopt;
    for (const auto& [key, value] : it->second)
      if (key.same_table(g)) return value;
    return std::nullopt;
  }
  void store(const PGroup& g, const std::vector<PGroup>& factors) {
    std::lock_guard lock(mutex);
    buckets[{g.order(), g.exponent()}].emplace_back(g, factors);
  }
};

FactorMemo& memo() {
  static FactorMemo m;
  return m;
}

}  // namespace

std::vector<PGroup> indecomposable_factors(const PGroup& g, std::size_t cap) {
  check_cap(g, cap);
  if (g.order() == 1) return {};
  if (auto hit = memo().find(g)) return *hit;
  std::vector<PGroup> factors;
  if (auto pair = find_direct_factor(g, cap)) {
    for (const Subgroup* part : {&pair->first, &pair->second}) {
      auto sub = indecomposable_factors(induced_group(*part).group, cap);
      factors.insert(factors.end(), sub.begin(), sub.end());
    }
  } else {
    factors.push_back(g);
  }
  std::stable_sort(factors.begin(), factors.end(),
                   [](const PGroup& a, const PGroup& b) { return a.order() > b.order(); });
  memo().store(g, factors);
  return factors;
}

bool has_cyclic_factor_of_order(const PGroup& g, std::uint64_t q, std::size_t cap) {
  for (const auto& f : indecomposable_factors(g, cap))
    if (f.order() == q && f.exponent() == q) return true;
  return false;
}

}  // namespace modalg
