#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modalg/decomposition.hpp"
#include "modalg/lemmas.hpp"
#include "modalg/pgroup.hpp"

namespace modalg::io {

using nlohmann::json;

struct FactorizationBases {
  std::vector<FpVector> b, c;
};

struct GroupInput {
  PGroup group;
  std::optional<FactorizationBases> factorization;
};

/// {"p", "order", "table", "name"} plus optional {"factorization": {"B", "C"}}.
/// The identity is moved to index 0 and factorization coordinates follow it.
/// Throws InvalidInput with the source and offending field in the message.
GroupInput parse_group_input(const json& doc, const std::string& source);
GroupInput parse_group_text(const std::string& text, const std::string& source);
GroupInput load_group_file(const std::filesystem::path& path);

json group_json(const PGroup& g);
json group_json(const PGroup& g, const FactorizationBases& fact);

json vector_json(const FpVector& v);
json subspace_json(const FpSubspace& s);
json invariants_json(const AbelianInvariants& inv);
// Order, abelianization invariants, centre size, exponent.
json fingerprint_json(const PGroup& g);
json subgroup_json(const Subgroup& h);

json report_json(const IdentityReport& r);
json report_json(const CyclicFactorResult& r);
json report_json(const DecompositionReport& r);
json report_json(const Certificate& c);

}  // namespace modalg::io
