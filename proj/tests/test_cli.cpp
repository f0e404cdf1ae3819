#include "doctest.h"

#include <json.hpp>
#include <sstream>

#include "qwitt/cli.hpp"
#include "qwitt/expr.hpp"

using namespace qwitt;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect = 0) {
  args.insert(args.begin(), "--json");
  const Run r = run(args);
  REQUIRE(r.code == expect);
  return json::parse(r.out);
}

std::size_t error_offset(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

void check_round_trip(const std::string& text) {
  CAPTURE(text);
  const ExprPtr a = parse(text);
  const ExprPtr b = parse(print(*a));
  CHECK(*a == *b);
}

}  // namespace

TEST_CASE("parser shapes and errors") {
  const ExprPtr p = parse("e(1)*e(0)");
  CHECK(p->kind == Expr::Kind::Mul);
  REQUIRE(p->args.size() == 2);
  CHECK(p->args[0]->kind == Expr::Kind::Gen);
  CHECK(p->args[0]->generator == BasisElement::e(1));
  CHECK(p->args[1]->generator == BasisElement::e(0));

  CHECK(error_offset("e(") == 2);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("e(1) +") == 6);
  CHECK(error_offset("(q") == 2);
  CHECK(error_offset("x^(-1)") == 3);
  CHECK(error_offset("e(1) e(2)") == 5);
  CHECK(error_offset("q^") == 2);
  CHECK(error_offset("e(1)*e(0)") == std::string::npos);

  const GradedAlgebra w = GradedAlgebra::witt_eps11(3);
  CHECK_THROWS(eval_noncomm(*parse("e(5)"), w));
  CHECK_THROWS(eval_noncomm(*parse("L(0)"), w));
  CHECK_THROWS(eval_element(*parse("e(0)*e(1)"), w));
  CHECK_THROWS(eval_scalar(*parse("e"), ScalarField::generic()));
  CHECK_THROWS(eval_scalar(*parse("t"), ScalarField::generic()));
}

TEST_CASE("evaluation") {
  const ScalarField g = ScalarField::generic();
  CHECK(eval_scalar(*parse("(1 - q^3)/(1 - q)"), g) == Scalar::from_int(g, 1) + Scalar::q(g) + Scalar::q_power(g, 2));
  CHECK(eval_scalar(*parse("q^-2*q^2"), g) == Scalar::from_int(g, 1));
  const ScalarField r = ScalarField::root_of_unity(5);
  CHECK(eval_scalar(*parse("e^5"), r) == Scalar::from_int(r, 1));
  CHECK(eval_scalar(*parse("1 + e + e^2 + e^3 + e^4"), r).is_zero());
  CHECK(eval_divided(*parse("x^(2)*x^(1)"), g) ==
        DividedElement::monomial(g, 3, Scalar::from_int(g, 1) + Scalar::q(g) + Scalar::q_power(g, 2)));
  CHECK(eval_laurent(*parse("x^-2*x^3"), g) == LaurentPoly::monomial(g, 1));
  CHECK(eval_weight(*parse("t^2 - 1"), r).degree() == 2);
}

TEST_CASE("printed outputs reparse") {
  for (const std::string s : {"q^-1*e(0)*e(1) - q^-1*e(1)", "(e + 1)*e(1)", "-(q^2 + 1)*x^(3)", "x^-4 + 2*x^2",
                              "(q^3 - 1)/(q^2 + q + 1)*L(2) + C", "-(-e(1))", "e(1)^3*e(-1)^2"})
    check_round_trip(s);

  std::vector<std::vector<std::string>> commands = {
      {"pbw", "normal-form", "--l", "3", "--expr", "e(1)*e(0)*e(-1)"},
      {"pbw", "normal-form", "--algebra", "witt-q1", "--expr", "e(2)*e(0)*e(-1)"},
      {"pbw", "normal-form", "--algebra", "virasoro-q", "--expr", "e(2)*e(-2)*C"},
      {"bracket", "--algebra", "holomorph-eps", "--l", "5", "--lhs", "e(1)", "--rhs", "L(2)"},
      {"bracket", "--algebra", "witt-q", "--lhs", "e(-3)", "--rhs", "e(4)"},
      {"qnum", "--kind", "binomial", "--n", "6", "--r", "-2"},
      {"qnum", "--l", "7", "--kind", "factorial", "--n", "6"},
      {"qnum", "--kind", "integer", "--n", "-4"}};
  for (const auto& c : commands) {
    const Run r = run(c);
    REQUIRE(r.code == 0);
    std::string line = r.out.substr(0, r.out.find('\n'));
    check_round_trip(line);
  }
  const json nf = run_json({"pbw", "normal-form", "--l", "5", "--expr", "e(3)*e(2)*e(1)"});
  for (const auto& c : nf["coefficients"]) check_round_trip(c.get<std::string>());
  for (const auto& w : nf["words"]) check_round_trip(w.get<std::string>());
}

TEST_CASE("documented examples") {
  const Run b = run({"bracket", "--algebra", "witt-q1", "--lhs", "e(0)", "--rhs", "e(1)"});
  CHECK(b.code == 0);
  CHECK(b.out == "q*e(1)\n");

  const json j = run_json({"verify", "jacobi", "--algebra", "witt-eps", "--l", "5"});
  CHECK(j["verdict"] == true);
  CHECK(j["checks"][0]["checked"] == 125);
  CHECK(j["checks"][0]["failed"] == 0);
  CHECK(j["mode"] == "root");
  CHECK(j["l"] == 5);

  const json m = run_json({"module", "--l", "5", "--t", "0"});
  CHECK(m["composition_dims"] == json::array({1, 4}));
  CHECK(m["irreducible"] == false);
  CHECK(m["command"] == "module analyze");

  const json nf = run_json({"pbw", "normal-form", "--algebra", "witt-q1", "--expr", "e(1)*e(0)"});
  CHECK(nf["normal_form"] == "q^-1*e(0)*e(1) - q^-1*e(1)");
  CHECK(nf["words"] == json::array({"e(0)*e(1)", "e(1)"}));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"qnum", "--n", "3", "--mode", "generic", "--l", "3"}).code == 2);
  CHECK(run({"qnum", "--n", "3", "--mode", "root"}).code == 2);
  CHECK(run({"qnum", "--n", "3", "--mode", "sideways"}).code == 2);
  const Run bad = run({"pbw", "normal-form", "--expr", "e("});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("offset 2") != std::string::npos);
  CHECK(run({"bracket", "--l", "3", "--lhs", "e(7)", "--rhs", "e(0)"}).code == 2);
  CHECK(run({"verify", "cocycle", "--l", "5"}).code == 2);
  CHECK(run({"module", "compat"}).code == 2);

  // a failing verification exits 1 and names a counterexample
  const json conf = run_json({"pbw", "confluence", "--l", "5"}, 1);
  CHECK(conf["verdict"] == false);
  bool named = false;
  for (const auto& c : conf["checks"])
    if (c["verdict"] == false) named = named || !c["counterexamples"].empty();
  CHECK(named);
  CHECK(run({"pbw", "confluence", "--l", "3"}).code == 0);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> a = {"--json", "--seed", "7", "pbw", "zero-divisors", "--l", "3", "--samples", "15"};
  CHECK(run(a).out == run(a).out);
  std::vector<std::string> threaded = {"--json", "--jobs", "4", "verify", "jacobi", "--l", "5"};
  std::vector<std::string> serial = {"--json", "--jobs", "1", "verify", "jacobi", "--l", "5"};
  CHECK(run(threaded).out == run(serial).out);
  const json z = run_json({"pbw", "zero-divisors", "--l", "3"});
  CHECK(z["seed"] == 0);
}

TEST_CASE("module commands") {
  const json compat = run_json({"module", "compat", "--l", "5"});
  CHECK(compat["normalization"] == "printed");
  const json deform = run_json({"module", "deform", "--l", "5", "--a", "t"});
  CHECK(deform["verdict"] == true);
  for (const std::string om : {"0", "1", "e"}) {
    const json tens = run_json({"module", "tensor", "--l", "5", "--omega", om});
    CHECK(tens["verdict"] == true);
  }
  const json gen = run_json({"--window", "5", "module", "realize"});
  CHECK(gen["mode"] == "generic");
  CHECK(gen["verdict"] == true);
  const json top = run_json({"module", "analyze", "--l", "3", "--t", "1"});
  CHECK(top["composition_dims"] == json::array({2, 1}));
  CHECK(top["base_eigenvalue"] == "1");
  CHECK(top["top_eigenvalue"] == "0");
}

TEST_CASE("power commutation reports the closed form") {
  const json p = run_json({"pbw", "power-comm", "--l", "5", "--n", "2"});
  CHECK(p["checks"][0]["verdict"] == true);
  CHECK(p["closed_form"]["checked"].get<int>() > 0);
  const json c = run_json({"pbw", "central", "--l", "3"});
  CHECK(c["checks"][0]["checked"] == 9);
}
