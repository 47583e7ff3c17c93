#include <fstream>

#include "doctest.h"
#include "relhilb/commands.hpp"
#include "relhilb/errors.hpp"
#include "relhilb/local_ideal.hpp"
#include "relhilb/problem.hpp"

using namespace relhilb;

namespace {

const char* kQuartic = R"(# comment line
ring {
  label = "quartic"
  vars = [X, Y, Z, W]
  relations = ["X*Y - Y*Z", "X*Z + Y^3 - Z^2"]
  dim = 2
}

ideal I = ["X", "Y", "W"]   # trailing comment
ideal m = maximal
ideal c = maximal flags { integrally_closed = true; asymptotically_normal = false }
task coeffs I
task   relcoeffs I m
)";

}  // namespace

TEST_CASE("parse a full problem") {
  Problem p = parse_problem(kQuartic, "quartic.rh");
  CHECK(p.ring->arity() == 4);
  CHECK(p.ring->relations().size() == 2);
  CHECK(p.ring->dim() == 2);
  CHECK(p.ring->label() == "quartic");
  REQUIRE(p.ideals.size() == 3);
  CHECK(p.ideal("I").generators().size() == 3);
  CHECK(p.ideal("c").flags().integrally_closed == true);
  CHECK(p.ideal("c").flags().asymptotically_normal == false);
  CHECK_FALSE(p.ideal("m").flags().integrally_closed.has_value());
  REQUIRE(p.tasks.size() == 2);
  CHECK(p.tasks[1] == "relcoeffs I m");
  CHECK_THROWS_AS(p.ideal("J"), UsageError);
  CHECK(length(p.ideal("I")) == 2);
}

TEST_CASE("ring block variants") {
  Problem p = parse_problem("ring { vars = [x, y]; relations = []; dim = 2 }\nideal u = unit\n");
  CHECK(p.ring->relations().empty());
  CHECK(p.ideal("u").is_unit());
  CHECK(p.tasks.empty());
  CHECK_THROWS_AS(parse_problem("ring { vars = [X]; relations = [\"X + 1\"]; dim = 0 }\n"), ValidationError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_problem("ring {\n  vars = [x]\n  dim = 1\n  colour = 3\n}\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 3);
  }
  try {
    parse_problem("ring { vars = [x]; dim = 1 }\nideal I = [\"x^2 + * x\"]\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 12);
  }
  CHECK_THROWS_AS(parse_problem("ring { vars = [x]; dim = 1; dim = 1 }\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ideal I = [\"x\"]\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring { vars = [x]; dim = 1 }\nideal I = [\"q\"]\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring { vars = [x]; dim = 1 }\nideal I = maximal flags { normal = true }\n"),
                  ParseError);
  CHECK_THROWS_AS(load_problem("/nonexistent/problem.rh"), UsageError);
}

TEST_CASE("commands on a parsed problem") {
  Problem p = parse_problem(kQuartic);
  Options opt;
  CHECK(run_command(p, split_args("coeffs I"), opt).json["e"] == nlohmann::ordered_json({"5", "6", "4"}));
  CommandResult rc = run_command(p, split_args("relcoeffs I m"), opt);
  CHECK(rc.json["c"] == nlohmann::ordered_json({"1", "0"}));
  CHECK_FALSE(rc.text.empty());
  CHECK(run_command(p, split_args("reduction I m"), opt).json["reduction_number"] == "1");
  CHECK_THROWS_AS(run_command(p, split_args("frobnicate I"), opt), UsageError);
  CHECK_THROWS_AS(run_command(p, split_args("coeffs"), opt), UsageError);
  CHECK_THROWS_AS(run_command(p, split_args("rr I 0"), opt), UsageError);
  CHECK(split_args("  a  b\tc ") == std::vector<std::string>{"a", "b", "c"});
}
