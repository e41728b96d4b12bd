#include "modalg/linear_map.hpp"

#include "modalg/error.hpp"

namespace modalg {

LinearMap::LinearMap(std::vector<FpVector> domain_basis, std::vector<FpVector> images,
                     std::size_t codomain_dim)
    : codomain_dim_(codomain_dim), domain_(std::move(domain_basis)), images_(std::move(images)) {
  if (domain_.size() != images_.size()) throw InvalidInput("LinearMap: one image per domain vector required");
  if (domain_.empty()) {
    p_ = 2;
    ambient_dim_ = 0;
    return;
  }
  p_ = domain_.front().prime();
  ambient_dim_ = domain_.front().dim();
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i].prime() != p_ || domain_[i].dim() != ambient_dim_)
      throw InvalidInput("LinearMap: inconsistent domain vectors");
    if (images_[i].prime() != p_ || images_[i].dim() != codomain_dim_)
      throw InvalidInput("LinearMap: inconsistent image vectors");
  }
  if (FpSubspace::span(p_, ambient_dim_, domain_).dim() != domain_.size())
    throw InvalidInput("LinearMap: domain vectors are not independent");
}

FpVector LinearMap::apply(const FpVector& v) const {
  if (domain_.empty()) {
    if (!v.is_zero()) throw InvalidInput("LinearMap::apply: vector outside the domain");
    return FpVector(v.prime(), codomain_dim_);
  }
  const auto coeffs = solve_combination(p_, ambient_dim_, domain_, v);
  if (!coeffs) throw InvalidInput("LinearMap::apply: vector outside the domain");
  FpVector out(p_, codomain_dim_);
  for (std::size_t i = 0; i < images_.size(); ++i) out.add_scaled(images_[i], (*coeffs)[i]);
  return out;
}

FpSubspace LinearMap::kernel_coordinates() const {
  return left_kernel(p_, codomain_dim_, images_);
}

FpSubspace LinearMap::kernel() const {
  if (domain_.empty()) return FpSubspace::zero(p_, ambient_dim_);
  EchelonBuilder builder(p_, ambient_dim_);
  const FpSubspace coords = kernel_coordinates();
  for (const auto& combo : coords.basis()) {
    FpVector x(p_, ambient_dim_);
    for (std::size_t i = 0; i < domain_.size(); ++i) x.add_scaled(domain_[i], combo[i]);
    builder.insert(std::move(x));
  }
  return FpSubspace::from_builder(builder);
}

FpSubspace LinearMap::image() const { return FpSubspace::span(p_, codomain_dim_, images_); }

QuotientSpace::QuotientSpace(FpSubspace ambient, FpSubspace sub)
    : QuotientSpace(ambient, sub, sub.complement_within(ambient)) {}

QuotientSpace::QuotientSpace(FpSubspace ambient, FpSubspace sub, FpSubspace section)
    : ambient_(std::move(ambient)),
      sub_(std::move(sub)),
      section_(std::move(section)),
      splitter_(ambient_.prime(), ambient_.ambient_dim() + section_.dim()) {
  if (!ambient_.contains(sub_)) throw InvalidInput("quotient_space: U is not contained in W");
  if (!ambient_.contains(section_)) throw InvalidInput("quotient_space: section is not contained in W");
  if (!sub_.intersect(section_).is_zero() || sub_.dim() + section_.dim() != ambient_.dim())
    throw InvalidInput("quotient_space: section is not a complement of U in W");
  const unsigned p = ambient_.prime();
  const std::size_t k = section_.dim();
  for (const auto& u : sub_.basis()) splitter_.insert(concat(u, FpVector(p, k)));
  for (std::size_t i = 0; i < k; ++i) splitter_.insert(concat(section_.basis()[i], FpVector::unit(p, k, i)));
}

std::vector<unsigned> QuotientSpace::project(const FpVector& v) const {
  const unsigned p = ambient_.prime();
  const std::size_t n = ambient_.ambient_dim();
  const std::size_t k = section_.dim();
  FpVector probe = concat(v, FpVector(p, k));
  splitter_.reduce(probe);
  if (!slice(probe, 0, n).is_zero()) throw InvalidInput("QuotientSpace::project: vector outside W");
  std::vector<unsigned> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = (p - probe[n + i]) % p;
  return out;
}

FpVector QuotientSpace::project_vector(const FpVector& v) const {
  const auto c = project(v);
  FpVector out(ambient_.prime(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.set(i, c[i]);
  return out;
}

FpVector QuotientSpace::lift(const std::vector<unsigned>& coords) const {
  if (coords.size() != section_.dim()) throw InvalidInput("QuotientSpace::lift: wrong coordinate count");
  FpVector out(ambient_.prime(), ambient_.ambient_dim());
  for (std::size_t i = 0; i < coords.size(); ++i) out.add_scaled(section_.basis()[i], coords[i]);
  return out;
}

FpVector QuotientSpace::lift(const FpVector& coords) const {
  std::vector<unsigned> c(coords.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords[i];
  return lift(c);
}

}  // namespace modalg
