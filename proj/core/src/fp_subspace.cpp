#include "modalg/fp_subspace.hpp"

#include <algorithm>
#include <numeric>

#include "modalg/error.hpp"

namespace modalg {

void EchelonBuilder::reduce(FpVector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const unsigned c = v[pivots_[k]];
    if (c) v.add_scaled(rows_[k], p_ - c);
  }
}

bool EchelonBuilder::insert(FpVector v) {
  if (v.prime() != p_ || v.dim() != dim_) throw InvalidInput("EchelonBuilder: prime or dimension mismatch");
  reduce(v);
  const std::size_t lead = v.leading_index();
  if (lead == dim_) return false;
  v.scale(fp_inverse(v[lead], p_));
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

FpSubspace FpSubspace::zero(unsigned p, std::size_t dim) {
  if (!is_supported_prime(p)) throw InvalidInput("unsupported prime " + std::to_string(p));
  return FpSubspace(p, dim);
}

FpSubspace FpSubspace::full(unsigned p, std::size_t dim) {
  FpSubspace s = zero(p, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    s.basis_.push_back(FpVector::unit(p, dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

FpSubspace FpSubspace::span(unsigned p, std::size_t dim, std::span<const FpVector> vectors) {
  EchelonBuilder builder(p, dim);
  for (const auto& v : vectors) builder.insert(v);
  return from_builder(builder);
}

FpSubspace FpSubspace::from_builder(const EchelonBuilder& builder) {
  FpSubspace s = zero(builder.prime(), builder.dim());
  const unsigned p = builder.prime();
  std::vector<std::size_t> order(builder.rank());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return builder.pivots()[a] < builder.pivots()[b]; });
  for (auto k : order) {
    s.basis_.push_back(builder.rows()[k]);
    s.pivots_.push_back(builder.pivots()[k]);
  }
  // Back substitution: clear each pivot column above its row.
  for (std::size_t i = s.basis_.size(); i-- > 0;) {
    for (std::size_t j = 0; j < i; ++j) {
      const unsigned c = s.basis_[j][s.pivots_[i]];
      if (c) s.basis_[j].add_scaled(s.basis_[i], p - c);
    }
  }
  return s;
}

void FpSubspace::check_compatible(const FpSubspace& other) const {
  if (other.p_ != p_ || other.ambient_ != ambient_)
    throw InvalidInput("FpSubspace: prime or ambient dimension mismatch");
}

FpVector FpSubspace::reduce(FpVector v) const {
  if (v.prime() != p_ || v.dim() != ambient_) throw InvalidInput("FpSubspace::reduce: vector mismatch");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const unsigned c = v[pivots_[k]];
    if (c) v.add_scaled(basis_[k], p_ - c);
  }
  return v;
}

bool FpSubspace::contains(const FpVector& v) const { return reduce(v).is_zero(); }

bool FpSubspace::contains(const FpSubspace& other) const {
  check_compatible(other);
  if (other.dim() > dim()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const FpVector& v) { return contains(v); });
}

std::optional<std::vector<unsigned>> FpSubspace::coordinates(const FpVector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<unsigned> out(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) out[k] = v[pivots_[k]];
  return out;
}

FpSubspace FpSubspace::operator+(const FpSubspace& other) const {
  check_compatible(other);
  EchelonBuilder builder(p_, ambient_);
  for (const auto& v : basis_) builder.insert(v);
  for (const auto& v : other.basis_) builder.insert(v);
  return from_builder(builder);
}

FpSubspace FpSubspace::with(const FpVector& v) const {
  EchelonBuilder builder(p_, ambient_);
  for (const auto& b : basis_) builder.insert(b);
  builder.insert(v);
  return from_builder(builder);
}

FpSubspace FpSubspace::intersect(const FpSubspace& other) const {
  check_compatible(other);
  // Combinations (x, y) with x·A + y·B = 0 give the intersection as x·A.
  std::vector<FpVector> stacked = basis_;
  stacked.insert(stacked.end(), other.basis_.begin(), other.basis_.end());
  const FpSubspace kernel = left_kernel(p_, ambient_, stacked);
  EchelonBuilder builder(p_, ambient_);
  for (const auto& combo : kernel.basis()) {
    FpVector x(p_, ambient_);
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (const unsigned c = combo[k]) x.add_scaled(basis_[k], c);
    builder.insert(std::move(x));
  }
  return from_builder(builder);
}

FpSubspace FpSubspace::complement_within(const FpSubspace& within, const FpSubspace& seed) const {
  check_compatible(within);
  check_compatible(seed);
  if (!within.contains(*this)) throw InvalidInput("complement_within: subspace not contained in the ambient");
  if (!within.contains(seed)) throw InvalidInput("complement_within: seed not contained in the ambient");
  EchelonBuilder builder(p_, ambient_);
  for (const auto& v : basis_) builder.insert(v);
  EchelonBuilder chosen(p_, ambient_);
  for (const auto& v : seed.basis_) {
    if (!builder.insert(v)) throw InvalidInput("complement_within: seed meets the subspace nontrivially");
    chosen.insert(v);
  }
  for (const auto& v : within.basis_)
    if (builder.insert(v)) chosen.insert(v);
  return from_builder(chosen);
}

FpSubspace FpSubspace::complement_within(const FpSubspace& within) const {
  // Canonical choice: W's basis reduced modulo this subspace.
  check_compatible(within);
  if (!within.contains(*this)) throw InvalidInput("complement_within: subspace not contained in the ambient");
  EchelonBuilder chosen(p_, ambient_);
  for (const auto& v : within.basis_) chosen.insert(reduce(v));
  return from_builder(chosen);
}

FpSubspace left_kernel(unsigned p, std::size_t dim, std::span<const FpVector> rows) {
  const std::size_t m = rows.size();
  EchelonBuilder builder(p, dim + m);
  for (std::size_t i = 0; i < m; ++i) builder.insert(concat(rows[i], FpVector::unit(p, m, i)));
  EchelonBuilder kernel(p, m);
  for (std::size_t k = 0; k < builder.rank(); ++k)
    if (builder.pivots()[k] >= dim) kernel.insert(slice(builder.rows()[k], dim, m));
  return FpSubspace::from_builder(kernel);
}

std::optional<std::vector<unsigned>> solve_combination(unsigned p, std::size_t dim,
                                                       std::span<const FpVector> rows,
                                                       const FpVector& v) {
  const std::size_t m = rows.size();
  EchelonBuilder builder(p, dim + m);
  for (std::size_t i = 0; i < m; ++i) builder.insert(concat(rows[i], FpVector::unit(p, m, i)));
  FpVector probe = concat(v, FpVector(p, m));
  builder.reduce(probe);
  if (!slice(probe, 0, dim).is_zero()) return std::nullopt;
  // probe = (0 | -c) where v = sum c_i rows[i] up to kernel rows.
  std::vector<unsigned> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = (p - probe[dim + i]) % p;
  return out;
}

}  // namespace modalg
