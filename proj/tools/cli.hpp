#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modalg/ideals.hpp"
#include "modalg/oracle.hpp"

namespace modalg::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kParseError = 2, kCapExceeded = 3 };

struct RunConfig {
  std::string command;
  unsigned p = 2;
  std::vector<std::string> inputs;
  // Catalog specs; "A:B" names the factorization of A x B by its coordinates.
  std::vector<std::string> catalog;
  std::size_t max_order = 32;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  std::string out;
  unsigned workers = 1;
  // catalog only: write a group file for "A:B" instead of a report.
  std::string emit_factorization;
};

struct RunResult {
  int exit_code = kPass;
  nlohmann::json envelope;

  const nlohmann::json& body() const { return envelope.at("body"); }
  std::string body_text() const;
};

RunResult run(const RunConfig& config);

// Renders with sorted keys and two-space indent.
std::string render(const nlohmann::json& doc);

int main_entry(int argc, char** argv);

}  // namespace modalg::cli
