#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modalg/algebra.hpp"
#include "modalg/fp_subspace.hpp"
#include "modalg/pgroup.hpp"

namespace modalg {

/// Outcome of comparing two subspaces of F_pG, or of a containment check.
struct IdentityReport {
  std::string id;
  // "equal" or "subset" (left ⊆ right).
  std::string relation = "equal";
  std::map<std::string, std::uint64_t> params;
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  bool equal = false;
  // A vector on one side but not the other, when the relation fails.
  std::optional<FpVector> witness;
  // Further named facts checked alongside the main relation.
  std::vector<std::pair<std::string, bool>> side_checks;

  bool holds() const;
};

IdentityReport compare_subspaces(std::string id, const FpSubspace& left, const FpSubspace& right);
IdentityReport check_containment(std::string id, const FpSubspace& left, const FpSubspace& right);

/// Items 1-3 of the ideal identities. The left side is I(N)F_pG for the
/// matching subgroup N, built group-theoretically; the right side is built
/// inside the algebra.
///   item 1: N = mho_i(G) G'
///   item 2: N = Omega_i(Z(G)) G'
///   item 3: N = Omega_i(Z(G)) mho_j(G) G'
IdentityReport lemma_identity_check(const GroupAlgebra& ctx, int item, unsigned i, unsigned j = 1);

struct CyclicFactorResult {
  unsigned i = 1;
  bool has_factor = false;
  // Exponent of 1 + I(R_i(G)) k(G/mho_i(G)G').
  std::uint64_t exponent_found = 1;
  // exp(R_i(G)) from the abelian invariants, for cross-checking.
  std::uint64_t r_exponent = 1;
};

/// Decides whether G has a cyclic direct factor of order p^i from the unit
/// exponent of the ideal I(R_i(G)) inside the commutative algebra k(G/mho_i(G)G').
CyclicFactorResult cyclic_factor_test(const PGroup& g, unsigned i);

/// A verified internal tensor factorization F_pG = B ⊗ C.
struct TensorFactorization {
  GroupAlgebra ctx;
  AugmentedSubalgebra b;
  AugmentedSubalgebra c;
};

/// Checks, in order, "dimension" (dim B · dim C = |G|), "commute" (B and C
/// commute elementwise), "product-span" (the products bc span F_pG) and
/// "decomposition" (I(G) = I(B) ⊕ I(C) ⊕ I(B)I(C)). Throws CheckFailed
/// naming the first check that fails.
TensorFactorization verify_tensor_factorization(const GroupAlgebra& ctx, const AugmentedSubalgebra& b,
                                                const AugmentedSubalgebra& c);

/// log_p exp(V(B)) for commutative B.
unsigned unit_exponent_log(const AugmentedSubalgebra& b);

/// Consequences of a factorization with commutative B:
///   'a': [kG,kG] = [I(C),I(C)] + [I(C),I(C)]I(B), contained in I(C) ⊕ I(B)I(C)
///   'c': I(mho_s(G)G')kG ⊆ I(C) ⊕ I(B)I(C), where p^s = exp V(B)
///   'd': G has a cyclic direct factor of order p^s
/// Throws InvalidInput if B is not commutative.
IdentityReport babelian_checks(const TensorFactorization& fact, char part);

}  // namespace modalg
