#pragma once

#include <cstddef>
#include <vector>

#include "modalg/fp_subspace.hpp"

namespace modalg {

/// A linear map given by images of a domain basis.
/// Domain vectors live in F_p^n (ambient coordinates); images in F_p^m.
class LinearMap {
 public:
  LinearMap(std::vector<FpVector> domain_basis, std::vector<FpVector> images,
            std::size_t codomain_dim);

  std::size_t domain_dim() const noexcept { return domain_.size(); }
  std::size_t codomain_dim() const noexcept { return codomain_dim_; }
  const std::vector<FpVector>& domain_basis() const noexcept { return domain_; }
  const std::vector<FpVector>& images() const noexcept { return images_; }

  // Throws InvalidInput if v is outside the span of the domain basis.
  FpVector apply(const FpVector& v) const;
  // Kernel expressed in ambient domain coordinates.
  FpSubspace kernel() const;
  // Kernel in coordinates relative to the domain basis.
  FpSubspace kernel_coordinates() const;
  FpSubspace image() const;
  std::size_t rank() const { return image().dim(); }

 private:
  unsigned p_;
  std::size_t ambient_dim_;
  std::size_t codomain_dim_;
  std::vector<FpVector> domain_;
  std::vector<FpVector> images_;
};

/// W/U with a chosen section (a complement of U in W). The default section
/// is the canonical one obtained by reducing W's basis modulo U.
class QuotientSpace {
 public:
  QuotientSpace(FpSubspace ambient, FpSubspace sub);
  QuotientSpace(FpSubspace ambient, FpSubspace sub, FpSubspace section);

  const FpSubspace& ambient() const noexcept { return ambient_; }
  const FpSubspace& sub() const noexcept { return sub_; }
  const FpSubspace& section() const noexcept { return section_; }
  std::size_t dim() const noexcept { return section_.dim(); }

  // Coordinates of v + U with respect to the section basis; v must lie in W.
  std::vector<unsigned> project(const FpVector& v) const;
  FpVector project_vector(const FpVector& v) const;
  // Section representative for the given coordinates.
  FpVector lift(const std::vector<unsigned>& coords) const;
  FpVector lift(const FpVector& coords) const;
  bool is_zero_class(const FpVector& v) const { return sub_.contains(v); }

 private:
  FpSubspace ambient_;
  FpSubspace sub_;
  FpSubspace section_;
  // Rows [u | 0] for u in U and [s | e_k] for the k-th section vector.
  EchelonBuilder splitter_;
};

}  // namespace modalg
