#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modalg/algebra.hpp"
#include "modalg/group_ops.hpp"
#include "modalg/ideals.hpp"
#include "modalg/lemmas.hpp"
#include "modalg/linear_map.hpp"
#include "modalg/oracle.hpp"

namespace modalg {

/// The p^{s-1}-power map
///   (I(Omega_s(Z(G))G')kG + I^2) / I^2  ->  (I^q + M) / (I^{q+1} + M),
/// q = p^{s-1}, M = I(mho_s(G)G')kG, z + I^2 -> z^q + I^{q+1} + M.
/// `map` and `kernel` work in domain section coordinates.
struct LambdaData {
  unsigned s = 1;
  std::uint64_t q = 1;
  QuotientSpace domain;
  QuotientSpace codomain;
  LinearMap map;
  FpSubspace kernel;

  // Class of a vector of the domain numerator, as section coordinates.
  FpVector domain_class(const FpVector& z) const { return domain.project_vector(z); }
  // Preimage of the kernel in the ambient algebra (contains I^2).
  FpSubspace kernel_ambient() const;
};

/// Throws InvalidInput unless 1 <= s and p^s <= exp(G); throws
/// CheckFailed("lambda-well-defined") if a shifted representative or a
/// sum of representatives disagrees with the linear map.
LambdaData lambda_map(const GroupAlgebra& ctx, unsigned s, std::uint64_t seed = 0);

struct SplitResult {
  Subgroup cyclic;      // <h>
  Subgroup complement;  // G_0
  FpSubspace ideal;     // J
};

/// G = <h> x G_0 with G_0 the kernel of a retraction onto <h>, together
/// with the algebra splitting kG = J ⊕ F_pG_0. J defaults to the ideal
/// generated by e_h - e_1; pass `j_generator` to use another generator.
/// Throws CheckFailed("retraction") or CheckFailed("split").
SplitResult split_cyclic(const GroupAlgebra& ctx, Element h,
                         const std::optional<FpVector>& j_generator = std::nullopt);

struct HomocyclicSplit {
  Subgroup h;  // homocyclic of exponent p^s
  Subgroup k;  // no cyclic direct factor of order p^s
  std::vector<Element> generators;
};

/// Lifts V / I^2 to a homocyclic direct factor H with V = I(H)kG + I^2.
/// V must contain I^2 and V/I^2 must complement ker Lambda in the domain
/// (CheckFailed("homocyclic-precondition")). Other failures are reported as
/// CheckFailed("homocyclic-lift") or CheckFailed("homocyclic-verify").
HomocyclicSplit homocyclic_split(const GroupAlgebra& ctx, unsigned s, const FpSubspace& v, std::uint64_t seed = 0);

struct GroupBasisOptions {
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  std::size_t sample_size = 4096;
  unsigned sample_rounds = 8;
  std::size_t search_budget = 200000;
};

/// Independent generators u_1, ..., u_r of a group basis of a commutative
/// augmented subalgebra: the products u_1^{a_1} ... u_r^{a_r} are a basis
/// of B. Orders are descending.
struct GroupBasis {
  std::vector<FpVector> generators;
  std::vector<std::uint64_t> orders;
  bool sampled = false;

  AbelianInvariants invariants() const;
};

/// Greedy search over 1 + I(B) by decreasing multiplicative order, with
/// backtracking; 1 + I(B) is enumerated when p^{dim I(B)} <= enum_cap and
/// sampled otherwise. Throws InvalidInput if B is not commutative and
/// CheckFailed("group-basis") if no basis is found.
GroupBasis find_group_basis_commutative(const AugmentedSubalgebra& b, const GroupBasisOptions& options = {});

/// All products of the generators, in mixed-radix order.
std::vector<FpVector> group_basis_elements(const GroupAlgebra& ctx, const GroupBasis& basis);

struct DecompositionStep {
  unsigned level = 0;
  std::size_t group_order = 0;
  unsigned s = 0;
  std::uint64_t b_order = 1;
  bool omega_containment = false;
  bool jennings_nonmembership = false;
  bool lambda_nonkernel = false;
  std::size_t lambda_domain_dim = 0;
  std::size_t lambda_kernel_dim = 0;
  std::size_t v_dim = 0;  // dim V / I^2
  std::size_t homocyclic_rank = 0;
  Element h = 0;          // index in the input group
  std::uint64_t h_order = 1;
  std::size_t j_dim = 0;
  std::size_t complement_order = 0;
};

struct DecompositionReport {
  Subgroup b_side;
  Subgroup c_side;
  std::vector<Element> b_generators;
  std::vector<Element> c_generators;
  AbelianInvariants b_invariants;
  AbelianInvariants basis_invariants;
  bool group_basis_sampled = false;
  bool verified = false;
  std::vector<DecompositionStep> steps;
};

struct RecoverOptions {
  GroupBasisOptions basis;
  std::uint64_t seed = 0;
  // Also run homocyclic_split on each V as a cross-check.
  bool homocyclic_crosscheck = true;
};

/// G = B-side x C-side from a verified factorization F_pG = B ⊗ C with B
/// commutative. Each level splits off one cyclic factor <h> and recurses on
/// F_pG_0 ≅ kG / J. Throws CheckFailed naming the step that failed.
DecompositionReport recover_decomposition(const TensorFactorization& fact, const RecoverOptions& options = {});

enum class CertificateKind { three_generated, cyclic_derived, none };
std::string to_string(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::none;
  bool directly_indecomposable = false;
  unsigned d = 0;  // dim I(G)/I(G)^2
  bool three_generated = false;
  bool derived_cyclic = false;
  std::uint64_t derived_order = 1;
  std::optional<Element> derived_generator;
};

/// Hypotheses of the indecomposability corollaries. Throws CapExceeded when
/// |G| exceeds the oracle cap.
Certificate certify_indecomposable(const PGroup& g, std::size_t oracle_cap = kDefaultOracleCap);

}  // namespace modalg
