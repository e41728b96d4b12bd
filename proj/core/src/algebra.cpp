#include "modalg/algebra.hpp"

#include <mutex>

#include "modalg/error.hpp"
#include "modalg/ideals.hpp"

namespace modalg {

struct GroupAlgebra::Cache {
  std::mutex mutex;
  std::vector<FpSubspace> powers;  // powers[m] = I(G)^m
  std::vector<Element> conjugated_generators;
};

GroupAlgebra::GroupAlgebra(PGroup g) : group_(std::move(g)), cache_(std::make_shared<Cache>()) {
  ElementSet span;
  span.set(0);
  for (Element x = 1; x < group_.order(); ++x) {
    if (span.test(x)) continue;
    generators_.push_back(x);
    ElementSet seed = span;
    seed.set(x);
    span = closure(group_, seed);
  }
  ElementSet conj;
  for (Element s : generators_)
    for (Element h = 0; h < group_.order(); ++h) conj.set(group_.conj(s, h));
  for (Element x = 1; x < group_.order(); ++x)
    if (conj.test(x)) cache_->conjugated_generators.push_back(x);
}

FpVector GroupAlgebra::basis_minus_one(Element g) const {
  FpVector v = basis(g);
  v -= one();
  return v;
}

FpVector GroupAlgebra::multiply(const FpVector& a, const FpVector& b) const {
  const std::size_t n = dim();
  if (a.dim() != n || b.dim() != n || a.prime() != prime() || b.prime() != prime())
    throw InvalidInput("GroupAlgebra::multiply: dimension mismatch");
  const auto table = group_.table();
  FpVector out(prime(), n);
  if (prime() == 2) {
    std::vector<unsigned char> acc(n, 0);
    a.for_each_nonzero([&](std::size_t g, unsigned) {
      const Element* row = table.data() + g * n;
      b.for_each_nonzero([&](std::size_t h, unsigned) { acc[row[h]] ^= 1; });
    });
    for (std::size_t i = 0; i < n; ++i)
      if (acc[i]) out.set(i, 1);
    return out;
  }
  std::vector<unsigned> acc(n, 0);
  a.for_each_nonzero([&](std::size_t g, unsigned cg) {
    const Element* row = table.data() + g * n;
    b.for_each_nonzero([&](std::size_t h, unsigned ch) { acc[row[h]] += cg * ch; });
  });
  for (std::size_t i = 0; i < n; ++i)
    if (acc[i] % prime()) out.set(i, acc[i] % prime());
  return out;
}

FpVector GroupAlgebra::power(FpVector a, std::uint64_t m) const {
  FpVector result = one();
  while (m) {
    if (m & 1) result = multiply(result, a);
    m >>= 1;
    if (m) a = multiply(a, a);
  }
  return result;
}

FpVector GroupAlgebra::p_power(FpVector a, unsigned i) const { return frobenius_power(*this, std::move(a), i); }

unsigned GroupAlgebra::augmentation(const FpVector& a) const {
  unsigned sum = 0;
  a.for_each_nonzero([&](std::size_t, unsigned c) { sum += c; });
  return sum % prime();
}

FpVector GroupAlgebra::left_translate(Element g, const FpVector& a) const {
  FpVector out(prime(), dim());
  a.for_each_nonzero([&](std::size_t h, unsigned c) { out.set(group_.mul(g, static_cast<Element>(h)), c); });
  return out;
}

FpVector GroupAlgebra::right_translate(const FpVector& a, Element g) const {
  FpVector out(prime(), dim());
  a.for_each_nonzero([&](std::size_t h, unsigned c) { out.set(group_.mul(static_cast<Element>(h), g), c); });
  return out;
}

FpVector GroupAlgebra::conjugate(const FpVector& a, Element g) const {
  return right_translate(left_translate(g, a), group_.inv(g));
}

FpSubspace GroupAlgebra::augmentation_power(unsigned m) const {
  std::lock_guard lock(cache_->mutex);
  auto& powers = cache_->powers;
  if (powers.empty()) {
    powers.push_back(whole());
    std::vector<FpVector> gens;
    for (Element g = 1; g < dim(); ++g) gens.push_back(basis_minus_one(g));
    powers.push_back(FpSubspace::span(prime(), dim(), gens));
  }
  // I^(k+1) = span{x (t - 1)} over x in I^k and t conjugate to a generator.
  while (powers.size() <= m) {
    const FpSubspace& last = powers.back();
    if (last.is_zero()) {
      powers.push_back(last);
      continue;
    }
    EchelonBuilder builder(prime(), dim());
    for (const auto& x : last.basis())
      for (Element t : cache_->conjugated_generators) builder.insert(right_translate(x, t) - x);
    powers.push_back(FpSubspace::from_builder(builder));
  }
  return powers[m];
}

unsigned GroupAlgebra::nilpotency_index() const {
  unsigned m = 1;
  while (!augmentation_power(m).is_zero()) ++m;
  return m;
}

AugmentedSubalgebra::AugmentedSubalgebra(GroupAlgebra ctx, FpSubspace space)
    : ctx_(std::move(ctx)), space_(std::move(space)) {
  if (space_.prime() != ctx_.prime() || space_.ambient_dim() != ctx_.dim())
    throw InvalidInput("AugmentedSubalgebra: subspace does not live in the group algebra");
  if (!space_.contains(ctx_.one())) throw CheckFailed("subalgebra", "not a subalgebra: does not contain 1");
  if (!is_closed_under_product(ctx_, space_))
    throw CheckFailed("subalgebra", "not a subalgebra: not closed under multiplication");
  aug_ = space_.intersect(ctx_.augmentation_ideal());
  if (aug_.dim() + 1 != space_.dim()) throw CheckFailed("subalgebra", "augmentation ideal is not of codimension 1");
}

bool AugmentedSubalgebra::is_commutative() const { return commutes_elementwise(ctx_, space_, space_); }

QuotientAlgebra::QuotientAlgebra(GroupAlgebra ctx, FpSubspace ideal)
    : QuotientAlgebra(ctx, ideal, ideal.complement_within(ctx.whole())) {}

QuotientAlgebra::QuotientAlgebra(GroupAlgebra ctx, FpSubspace ideal, FpSubspace section)
    : ctx_(std::move(ctx)), space_(ctx_.whole(), std::move(ideal), std::move(section)) {
  if (!is_two_sided_ideal(ctx_, space_.sub())) throw CheckFailed("ideal", "J is not a two-sided ideal");
  const std::size_t d = dim();
  const auto& s = space_.section().basis();
  structure_.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) structure_.push_back(project(ctx_.multiply(s[i], s[j])));
}

FpVector QuotientAlgebra::multiply(const FpVector& a, const FpVector& b) const {
  const std::size_t d = dim();
  if (a.dim() != d || b.dim() != d) throw InvalidInput("QuotientAlgebra::multiply: dimension mismatch");
  FpVector out(prime(), d);
  a.for_each_nonzero([&](std::size_t i, unsigned ca) {
    b.for_each_nonzero([&](std::size_t j, unsigned cb) { out.add_scaled(structure_[i * d + j], (ca * cb) % prime()); });
  });
  return out;
}

FpSubspace QuotientAlgebra::image(const FpSubspace& x) const {
  EchelonBuilder builder(prime(), dim());
  for (const auto& v : x.basis()) builder.insert(project(v));
  return FpSubspace::from_builder(builder);
}

LinearMap QuotientAlgebra::projection() const {
  std::vector<FpVector> domain, images;
  for (Element g = 0; g < ctx_.dim(); ++g) {
    domain.push_back(ctx_.basis(g));
    images.push_back(project(ctx_.basis(g)));
  }
  return LinearMap(std::move(domain), std::move(images), dim());
}

bool QuotientAlgebra::is_commutative() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (structure_[i * d + j] != structure_[j * d + i]) return false;
  return true;
}

}  // namespace modalg
