#pragma once

#include <concepts>
#include <cstdint>

#include "modalg/algebra.hpp"
#include "modalg/error.hpp"
#include "modalg/fp_subspace.hpp"

namespace modalg {

template <typename A>
concept FiniteAlgebra = requires(const A& a, const FpVector& x) {
  { a.multiply(x, x) } -> std::same_as<FpVector>;
  { a.prime() } -> std::convertible_to<unsigned>;
  { a.dim() } -> std::convertible_to<std::size_t>;
};

/// span{xy : x in X, y in Y}
template <FiniteAlgebra A>
FpSubspace subspace_product(const A& alg, const FpSubspace& x, const FpSubspace& y) {
  EchelonBuilder builder(alg.prime(), alg.dim());
  for (const auto& a : x.basis())
    for (const auto& b : y.basis()) builder.insert(alg.multiply(a, b));
  return FpSubspace::from_builder(builder);
}

/// X^m for m >= 1.
template <FiniteAlgebra A>
FpSubspace subspace_power(const A& alg, const FpSubspace& x, unsigned m) {
  if (m == 0) throw InvalidInput("subspace_power: m must be >= 1");
  FpSubspace acc = x;
  for (unsigned k = 1; k < m; ++k) acc = subspace_product(alg, acc, x);
  return acc;
}

/// span{xy - yx : x in X, y in Y}
template <FiniteAlgebra A>
FpSubspace commutator_span(const A& alg, const FpSubspace& x, const FpSubspace& y) {
  EchelonBuilder builder(alg.prime(), alg.dim());
  for (const auto& a : x.basis())
    for (const auto& b : y.basis()) builder.insert(alg.multiply(a, b) - alg.multiply(b, a));
  return FpSubspace::from_builder(builder);
}

/// Smallest subspace containing X and closed under multiplication
/// (the non-unital subalgebra generated by X).
template <FiniteAlgebra A>
FpSubspace subalgebra_generated(const A& alg, const FpSubspace& x) {
  EchelonBuilder builder(alg.prime(), alg.dim());
  for (const auto& v : x.basis()) builder.insert(v);
  // rows() grows while we iterate; products of every pair get inserted.
  for (std::size_t i = 0; i < builder.rank(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const FpVector a = builder.rows()[i];
      const FpVector b = builder.rows()[j];
      builder.insert(alg.multiply(a, b));
      if (i != j) builder.insert(alg.multiply(b, a));
    }
  return FpSubspace::from_builder(builder);
}

template <FiniteAlgebra A>
bool is_closed_under_product(const A& alg, const FpSubspace& x) {
  for (const auto& a : x.basis())
    for (const auto& b : x.basis())
      if (!x.contains(alg.multiply(a, b))) return false;
  return true;
}

template <FiniteAlgebra A>
bool commutes_elementwise(const A& alg, const FpSubspace& x, const FpSubspace& y) {
  for (const auto& a : x.basis())
    for (const auto& b : y.basis())
      if (alg.multiply(a, b) != alg.multiply(b, a)) return false;
  return true;
}

/// a^(p^i) computed by repeated p-th powers.
template <FiniteAlgebra A>
FpVector frobenius_power(const A& alg, FpVector a, unsigned i) {
  for (unsigned k = 0; k < i; ++k) {
    FpVector acc = a;
    for (unsigned j = 1; j < alg.prime(); ++j) acc = alg.multiply(acc, a);
    a = std::move(acc);
  }
  return a;
}

/// Exponent p^s of the unit group 1 + X for a nilpotent subspace X whose
/// elements commute pairwise: s is the least integer with b^(p^s) = 0 for
/// every basis vector b (Frobenius is additive on commuting elements).
/// Throws InvalidInput if X is not commutative, CheckFailed if not nilpotent.
template <FiniteAlgebra A>
std::uint64_t unit_exponent_commutative(const A& alg, const FpSubspace& x) {
  if (!commutes_elementwise(alg, x, x)) throw InvalidInput("unit_exponent_commutative: input is not commutative");
  std::uint64_t exponent = 1;
  for (const auto& b : x.basis()) {
    FpVector v = b;
    std::uint64_t q = 1;
    while (!v.is_zero()) {
      v = frobenius_power(alg, v, 1);
      q *= alg.prime();
      if (q > (std::uint64_t{1} << 40)) throw CheckFailed("unit_exponent", "subspace is not nilpotent");
    }
    exponent = std::max(exponent, q);
  }
  return exponent;
}

// ---- Group-algebra specific ideal calculus ----

// Two-sided ideal generated by X, by closing under left and right
// multiplication by the group generators.
FpSubspace ideal_generated(const GroupAlgebra& ctx, const FpSubspace& x);
// X F_pG
FpSubspace right_ideal_generated(const GroupAlgebra& ctx, const FpSubspace& x);
bool is_two_sided_ideal(const GroupAlgebra& ctx, const FpSubspace& x);

/// I(N)F_pG = span{(e_n - e_1) e_g}, the kernel of F_pG -> F_p(G/N).
/// Throws InvalidInput if N is not normal.
FpSubspace normal_subgroup_ideal(const GroupAlgebra& ctx, const Subgroup& n);

/// Z(F_pG) by solving x e_g = e_g x over the generators.
FpSubspace center_subspace(const GroupAlgebra& ctx);
/// Z(I(G)) = Z(F_pG) ∩ I(G)
FpSubspace central_augmentation(const GroupAlgebra& ctx);

/// [F_pG, F_pG] F_pG, the commutator ideal (equal to I(G')F_pG).
FpSubspace commutator_ideal(const GroupAlgebra& ctx);

/// Omega_i(Z(I(G))): the subalgebra generated by {z in Z(I(G)) : z^(p^i) = 0}.
/// On the commutative algebra Z(F_pG) the map z -> z^(p^i) is F_p-linear,
/// so the generating set is the kernel of a linear map.
FpSubspace omega_central(const GroupAlgebra& ctx, unsigned i);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// The same subalgebra by enumerating every element of Z(I(G)).
/// Throws CapExceeded when p^dim Z(I(G)) > cap.
FpSubspace omega_central_enumerated(const GroupAlgebra& ctx, unsigned i,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// mho_i(I(G)) F_pG + I(G')F_pG, computed as the ideal generated by the
/// p^i-th powers of a basis of I(G) plus the commutator ideal. Modulo the
/// commutator ideal the algebra is commutative, so basis powers suffice.
FpSubspace mho_ideal_mod_derived(const GroupAlgebra& ctx, unsigned i);

/// {g in G : e_g - e_1 in I(G)^m}
Subgroup dimension_subgroup(const GroupAlgebra& ctx, unsigned m);

}  // namespace modalg
