#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modalg/pgroup.hpp"

namespace modalg {

std::uint64_t element_order(const PGroup& g, Element x);

enum class SubgroupKind { center, derived, omega, agemo, frattini };

Subgroup center(const PGroup& g);
Subgroup derived_subgroup(const PGroup& g);
// <x : x^{p^i} = 1>
Subgroup omega(const PGroup& g, unsigned i);
// <x^{p^i}>
Subgroup agemo(const PGroup& g, unsigned i);
Subgroup frattini(const PGroup& g);
// Omega/agemo applied inside a subgroup of g.
Subgroup omega_of(const Subgroup& h, unsigned i);
Subgroup agemo_of(const Subgroup& h, unsigned i);
Subgroup center_of(const Subgroup& h);

// Dispatcher; i is ignored for center/derived/frattini and must be >= 1 otherwise.
Subgroup characteristic_subgroup(const PGroup& g, SubgroupKind kind, unsigned i = 1);

// Subgroup generated by the union.
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup meet(const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(const PGroup& g, const ElementSet& seed);

std::vector<std::vector<Element>> conjugacy_classes(const PGroup& g);

struct Quotient {
  PGroup group;
  GroupHom projection;  // G -> G/N
  Subgroup kernel;
};

/// G/N with cosets indexed by their smallest element, so N itself is
/// index 0. Throws InvalidInput if N is not normal.
Quotient quotient_group(const PGroup& g, const Subgroup& n);

struct InducedGroup {
  PGroup group;
  GroupHom embedding;  // H -> G, injective
};

/// The subgroup as a standalone group, elements re-indexed ascending.
InducedGroup induced_group(const Subgroup& h);

PGroup direct_product(const PGroup& a, const PGroup& b);

struct RSubquotient {
  Quotient quotient;          // G / agemo_i(G) G'
  Subgroup in_quotient;       // image of Omega_i(Z(G)) in the quotient
  PGroup group;               // the same subgroup as a standalone group
};

/// Omega_i(Z(G)) agemo_i(G) G' / agemo_i(G) G'.
RSubquotient r_subquotient(const PGroup& g, unsigned i);

struct AbelianInvariants {
  // Cyclic factor orders, descending; empty for the trivial group.
  std::vector<std::uint64_t> exponents;

  std::uint64_t exponent() const { return exponents.empty() ? 1 : exponents.front(); }
  std::uint64_t order() const;
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Independent generators x_1..x_r of an abelian group with
/// G = <x_1> x ... x <x_r>, orders descending. Throws InvalidInput if g is
/// not abelian.
std::vector<Element> abelian_basis(const PGroup& g);
AbelianInvariants abelian_invariants(const PGroup& g);
AbelianInvariants abelian_invariants(const Subgroup& h);

bool is_internal_direct_product(const Subgroup& h, const Subgroup& k);

/// Kernel of a retraction chi: G -> <h> with chi(h) = h, found by
/// enumerating the homomorphisms G/G' -> <h>. Then G = <h> x K.
/// Throws CheckFailed("retraction") when h has no complement.
Subgroup retraction_complement(const PGroup& g, Element h);

struct Fingerprint {
  std::size_t order;
  AbelianInvariants abelianization;
  std::size_t center_size;
  std::uint64_t exponent;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PGroup& g);

// Generators picked in ascending index order, each outside the subgroup
// generated by the earlier ones.
std::vector<Element> greedy_generators(const Subgroup& h);

// Smallest number of generators, via |G/Phi(G)| = p^d.
unsigned generator_rank(const PGroup& g);

}  // namespace modalg
