#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "modalg/fp_vector.hpp"

namespace modalg {

/// Incremental semi-echelon basis. Rows are normalized (pivot entry 1) and
/// each row is zero at the pivots of every earlier row, so reduction in
/// insertion order yields a remainder that vanishes on all pivots.
class EchelonBuilder {
 public:
  EchelonBuilder(unsigned p, std::size_t dim) : p_(p), dim_(dim) {}

  // Reduces v in place against the current rows.
  void reduce(FpVector& v) const;
  // Returns true if v was independent of the rows and has been added.
  bool insert(FpVector v);

  std::size_t rank() const noexcept { return rows_.size(); }
  unsigned prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<FpVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  unsigned p_;
  std::size_t dim_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// A subspace of F_p^n stored as its reduced row echelon basis. Equal
/// subspaces have identical bases, so operator== is structural.
class FpSubspace {
 public:
  FpSubspace() = default;

  static FpSubspace zero(unsigned p, std::size_t dim);
  static FpSubspace full(unsigned p, std::size_t dim);
  static FpSubspace span(unsigned p, std::size_t dim, std::span<const FpVector> vectors);
  static FpSubspace from_builder(const EchelonBuilder& builder);

  unsigned prime() const noexcept { return p_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<FpVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Canonical coset representative of v modulo this subspace.
  FpVector reduce(FpVector v) const;
  bool contains(const FpVector& v) const;
  bool contains(const FpSubspace& other) const;
  // Coordinates of v in the RREF basis; nullopt if v is not a member.
  std::optional<std::vector<unsigned>> coordinates(const FpVector& v) const;

  FpSubspace operator+(const FpSubspace& other) const;
  FpSubspace intersect(const FpSubspace& other) const;
  FpSubspace with(const FpVector& v) const;

  /// Extends `seed` to a complement of `*this` inside `within`:
  /// the result X satisfies *this + X = within, *this ∩ X = 0, seed ⊆ X.
  FpSubspace complement_within(const FpSubspace& within, const FpSubspace& seed) const;
  FpSubspace complement_within(const FpSubspace& within) const;

  friend bool operator==(const FpSubspace& a, const FpSubspace& b) noexcept {
    return a.p_ == b.p_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  FpSubspace(unsigned p, std::size_t dim) : p_(p), ambient_(dim) {}
  void check_compatible(const FpSubspace& other) const;

  unsigned p_ = 2;
  std::size_t ambient_ = 0;
  std::vector<FpVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Left kernel of the row list: all coefficient vectors c (length rows.size())
/// with sum_i c_i rows[i] = 0.
FpSubspace left_kernel(unsigned p, std::size_t dim, std::span<const FpVector> rows);

/// Coordinates of v in terms of an arbitrary (possibly dependent) spanning
/// list, or nullopt when v lies outside its span.
std::optional<std::vector<unsigned>> solve_combination(unsigned p, std::size_t dim,
                                                       std::span<const FpVector> rows,
                                                       const FpVector& v);

}  // namespace modalg
