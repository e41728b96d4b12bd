#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "modalg/fp_subspace.hpp"
#include "modalg/linear_map.hpp"
#include "modalg/pgroup.hpp"

namespace modalg {

/// The group algebra F_pG. Elements are coefficient vectors indexed by group
/// elements; e_g e_h = e_{gh}. Copies share a lazily filled cache of the
/// powers of the augmentation ideal; all members are safe to call
/// concurrently.
class GroupAlgebra {
 public:
  explicit GroupAlgebra(PGroup g);

  const PGroup& group() const noexcept { return group_; }
  unsigned prime() const noexcept { return group_.prime(); }
  std::size_t dim() const noexcept { return group_.order(); }

  FpVector zero() const { return FpVector(prime(), dim()); }
  FpVector one() const { return basis(0); }
  FpVector basis(Element g) const { return FpVector::unit(prime(), dim(), g); }
  // e_g - e_1
  FpVector basis_minus_one(Element g) const;

  FpVector multiply(const FpVector& a, const FpVector& b) const;
  FpVector power(FpVector a, std::uint64_t m) const;
  // a^(p^i)
  FpVector p_power(FpVector a, unsigned i) const;
  // Coefficient sum mod p.
  unsigned augmentation(const FpVector& a) const;
  FpVector left_translate(Element g, const FpVector& a) const;
  FpVector right_translate(const FpVector& a, Element g) const;
  // e_g a e_g^{-1}
  FpVector conjugate(const FpVector& a, Element g) const;

  // A small generating set of G, chosen greedily by element index.
  const std::vector<Element>& generators() const noexcept { return generators_; }

  FpSubspace whole() const { return FpSubspace::full(prime(), dim()); }
  FpSubspace augmentation_ideal() const { return augmentation_power(1); }
  // I(G)^m, m >= 0 (I(G)^0 = F_pG). Cached.
  FpSubspace augmentation_power(unsigned m) const;
  // Least m with I(G)^m = 0.
  unsigned nilpotency_index() const;

 private:
  struct Cache;
  PGroup group_;
  std::vector<Element> generators_;
  std::shared_ptr<Cache> cache_;
};

/// A unital subalgebra B of F_pG with augmentation ideal I(B) = B ∩ I(G).
class AugmentedSubalgebra {
 public:
  // Throws CheckFailed("subalgebra", ...) unless `space` contains 1 and is
  // closed under multiplication.
  AugmentedSubalgebra(GroupAlgebra ctx, FpSubspace space);

  const GroupAlgebra& context() const noexcept { return ctx_; }
  const FpSubspace& space() const noexcept { return space_; }
  const FpSubspace& augmentation_ideal() const noexcept { return aug_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  bool is_commutative() const;

 private:
  GroupAlgebra ctx_;
  FpSubspace space_;
  FpSubspace aug_;
};

/// F_pG / J for a two-sided ideal J, presented on a section (a complement
/// of J). Quotient elements are coordinate vectors over the section basis.
class QuotientAlgebra {
 public:
  // Canonical section. Throws CheckFailed("ideal", ...) if J is not two-sided.
  QuotientAlgebra(GroupAlgebra ctx, FpSubspace ideal);
  // Explicit section, e.g. a subalgebra complementary to J.
  QuotientAlgebra(GroupAlgebra ctx, FpSubspace ideal, FpSubspace section);

  const GroupAlgebra& source() const noexcept { return ctx_; }
  const FpSubspace& ideal() const noexcept { return space_.sub(); }
  const FpSubspace& section() const noexcept { return space_.section(); }
  unsigned prime() const noexcept { return ctx_.prime(); }
  std::size_t dim() const noexcept { return space_.dim(); }

  FpVector project(const FpVector& x) const { return space_.project_vector(x); }
  FpVector lift(const FpVector& coords) const { return space_.lift(coords); }
  // Section component of x along F_pG = J ⊕ section.
  FpVector section_component(const FpVector& x) const { return lift(project(x)); }
  FpVector one() const { return project(ctx_.one()); }

  FpVector multiply(const FpVector& a, const FpVector& b) const;
  // Image of a subspace of F_pG, in quotient coordinates.
  FpSubspace image(const FpSubspace& x) const;
  // The projection as a linear map on the standard basis.
  LinearMap projection() const;
  bool is_commutative() const;

 private:
  GroupAlgebra ctx_;
  QuotientSpace space_;
  // structure_[i * dim + j] = coordinates of s_i s_j.
  std::vector<FpVector> structure_;
};

}  // namespace modalg
