#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "relhilb/options.hpp"
#include "relhilb/problem.hpp"

namespace relhilb {

struct CommandResult {
  nlohmann::ordered_json json;  // integers as decimal strings
  std::string text;
};

/// args[0] is the subcommand: length, hilbert, coeffs, relcoeffs, reduction, rr, rrseries,
/// cmtest, hmsums, link, explore, verify. Ideal arguments are names declared in the problem.
CommandResult run_command(const Problem& problem, const std::vector<std::string>& args, const Options& opt);

/// Whitespace split, as used for task lines.
std::vector<std::string> split_args(const std::string& line);

}  // namespace relhilb
