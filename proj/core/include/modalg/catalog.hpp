#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modalg/pgroup.hpp"

namespace modalg {

/// Builds a group from a named family.
///
///   cyclic                 {p, n}          C_{p^n}
///   abelian                {p, e1, e2,...} C_{p^e1} x C_{p^e2} x ...
///   dihedral               {order}         D_{order}, order = 2^n >= 4
///   quaternion             {order}         generalized quaternion, order >= 8
///   semidihedral           {order}         order >= 16
///   modular_maximal_cyclic {p, n}          M_{p^n}, n >= 3 (n >= 4 for p = 2)
///   heisenberg             {p}             unitriangular 3x3 over F_p
///   extraspecial           {p, n, sign}    order p^{1+2n}; sign +1 / -1
///   metacyclic             {p, m, q, t, r} <a,b | a^m, b^q = a^t, b a b^-1 = a^r>
///
/// direct_product is built with direct_product() or a product spec string.
/// Throws InvalidInput for unknown families, bad parameters, or order > 256.
PGroup catalog_build(std::string_view family, std::span<const int> params);

/// Parses a compact spec such as "C4", "C2^3", "D8", "Q16", "SD16", "M16",
/// "Heis3", "E32+", "E27-", "Meta(4,4,0,3)" and products joined by 'x'
/// ("C2xD8", "C4xC2^2"). `p` is used only for "C1" (trivial group).
PGroup parse_group_spec(std::string_view spec, unsigned p = 2);

/// Splits a product spec into its top-level factors.
std::vector<std::string> split_product_spec(std::string_view spec);

struct CatalogEntry {
  std::string spec;
  unsigned p;
  std::size_t order;
};

/// The built-in test corpus for prime p, restricted to |G| <= max_order.
std::vector<CatalogEntry> standard_catalog(unsigned p, std::size_t max_order);

}  // namespace modalg
