#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relhilb/local_ideal.hpp"

namespace relhilb {

/// A parsed problem file:
///
///   ring {
///     label = "cusp"
///     vars = [x, y]
///     relations = ["y^2 - x^3"]
///     dim = 1
///     gorenstein = true
///   }
///   ideal q = ["x"]
///   ideal m = maximal
///   ideal J = ["x", "y^2"] flags { integrally_closed = true }
///   task length q
struct Problem {
  Ring ring;
  std::vector<std::pair<std::string, Ideal>> ideals;  // file order
  std::vector<std::string> tasks;                     // raw command lines
  std::string origin;

  /// Throws UsageError for an undeclared name.
  const Ideal& ideal(const std::string& name) const;
};

/// Throws ParseError (line/column within the text) or ValidationError.
Problem parse_problem(std::string_view text, std::string origin = "<input>");
Problem load_problem(const std::string& path);

}  // namespace relhilb
