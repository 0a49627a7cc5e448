#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace hilbsam;
using namespace testing_helpers;

namespace {

template <class Fn>
ParseError parse_failure(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error";
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(Parser, BasicExpressions) {
  auto r = make_poly_ring({"x", "y", "z"});
  EXPECT_EQ(q("y^2 - x^8", make_poly_ring({"x", "y"})).to_string(), "-x^8 + y^2");
  EXPECT_EQ(q("x*(y^3+z^3)", r), q("x y^3 + x z^3", r));
  EXPECT_EQ(q("-x", r), q("0 - x", r));
  EXPECT_EQ(q("+x", r), q("x", r));
  EXPECT_EQ(q("(x + y)^2", r), q("x^2 + 2 x y + y^2", r));
  EXPECT_EQ(q("2/3 x - 1/3 x", r), q("1/3 x", r));
  EXPECT_EQ(q(" x \t*\n y ", r), q("x*y", r));
  EXPECT_EQ(q("3 (x - 1) (x + 1)", r), q("3x^2 - 3", r));
  EXPECT_EQ(q("((x))", r), q("x", r));
  EXPECT_EQ(q("0", r).to_string(), "0");
}

TEST(Parser, MultiLetterVariables) {
  auto r = make_poly_ring({"u1", "v_2"});
  EXPECT_EQ(q("u1^2 v_2", r).to_string(), "u1^2*v_2");
}

TEST(Parser, RoundTripOfCanonicalText) {
  auto r = make_poly_ring({"x", "y", "z"});
  const std::vector<std::string> samples{"x", "-x^8 + y^2", "3/2*x^2*y - 7*z + 1", "x*y*z^4 - 1/5*y^3",
                                         "-1", "x^2 + 2*x*y + y^2"};
  for (const auto& s : samples) {
    auto p = q(s, r);
    EXPECT_EQ(q(p.to_string(), r), p) << s;
    EXPECT_EQ(q(p.to_string(), r).to_string(), p.to_string());
  }
}

TEST(Parser, ErrorsCarryPositions) {
  auto r = make_poly_ring({"x", "y"});
  auto e = parse_failure([&] { q("x + w", r); });
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 5);
  EXPECT_NE(std::string(e.what()).find("unknown variable 'w'"), std::string::npos);

  e = parse_failure([&] { q("x/0", r); });
  e = parse_failure([&] { q("1/0", r); });
  EXPECT_NE(std::string(e.what()).find("zero denominator"), std::string::npos);
  EXPECT_EQ(e.column(), 3);

  e = parse_failure([&] { q("(x + y", r); });
  EXPECT_NE(std::string(e.what()).find("')'"), std::string::npos);
  e = parse_failure([&] { q("x +", r); });
  EXPECT_NE(std::string(e.what()).find("end of input"), std::string::npos);
  e = parse_failure([&] { q("x ^ y", r); });
  e = parse_failure([&] { q("x $ y", r); });
  EXPECT_EQ(e.column(), 3);
  e = parse_failure([&] { q("", r); });
  e = parse_failure([&] { q("x^99999", r); });
}

TEST(Parser, ErrorLinesAcrossNewlines) {
  auto r = make_poly_ring({"x", "y"});
  auto e = parse_failure([&] { q("x +\n  y + t", r); });
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 7);
}

TEST(Generators, MaximalIdealShorthand) {
  auto r = make_poly_ring({"X", "Y", "Z"});
  EXPECT_EQ(parse_generators<Rational>("m^5", r).size(), 21u);
  EXPECT_EQ(parse_generators<Rational>("m", r).size(), 3u);
  auto full = parse_generators<Rational>("m^5, X^4, X*(Y^3+Z^3), Y*(Y^3+Z^3), Z*(Y^3+Z^3)", r);
  EXPECT_EQ(full.size(), 25u);
  EXPECT_EQ(full[22], q("X Y^3 + X Z^3", r));
}

TEST(Generators, ShorthandDisabledWhenMIsAVariable) {
  auto r = make_poly_ring({"m", "n"});
  auto g = parse_generators<Rational>("m^2, n", r);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], q("m^2", r));
}

TEST(Generators, Errors) {
  auto r = make_poly_ring({"x", "y"});
  EXPECT_THROW(parse_generators<Rational>("", r), ParseError);
  EXPECT_THROW(parse_generators<Rational>("x,, y", r), ParseError);
  EXPECT_THROW(parse_generators<Rational>("x, m^", r), ParseError);
  EXPECT_THROW(parse_generators<Rational>("x y)", r), ParseError);
  auto e = parse_failure([&] { parse_generators<Rational>("x^2, q", r); });
  EXPECT_EQ(e.column(), 6);
}

TEST(Ring, Descriptors) {
  auto r = parse_ring("Q[x,y]");
  EXPECT_EQ(r->variables, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(parse_ring("QQ[ a , b , c ]")->arity(), 3u);
  EXPECT_EQ(parse_ring("k[t]")->arity(), 1u);
  EXPECT_THROW(parse_ring("R[x]"), ParseError);
  EXPECT_THROW(parse_ring("Q[x,y"), ParseError);
  EXPECT_THROW(parse_ring("Q[x,x]"), ParseError);
  EXPECT_THROW(parse_ring("Q[x] extra"), ParseError);
  EXPECT_THROW(parse_ring("Q[a,b,c,d,e,f,g,h,i]"), ParseError);
  auto p = parse_ring("Q[x]", FieldDescriptor::prime(11));
  EXPECT_EQ(p->field.to_string(), "fp:11");
}

TEST(Ring, FieldAndOrderNames) {
  EXPECT_EQ(parse_field("q").kind, FieldDescriptor::Kind::rational);
  EXPECT_EQ(parse_field("fp:32003").characteristic, 32003u);
  EXPECT_THROW(parse_field("fp:"), ParseError);
  EXPECT_THROW(parse_field("fp:x"), ParseError);
  EXPECT_THROW(parse_field("r"), ParseError);
  EXPECT_THROW(parse_field("fp:12"), PreconditionError);
  EXPECT_EQ(parse_order("lex"), OrderKind::lex);
  EXPECT_EQ(parse_order("deglex"), OrderKind::deglex);
  EXPECT_EQ(parse_order("degrevlex"), OrderKind::degrevlex);
  EXPECT_THROW(parse_order("revlex"), ParseError);
}

TEST(Parser, PrimeFieldReduction) {
  auto r = make_poly_ring({"x"}, FieldDescriptor::prime(7));
  EXPECT_EQ(parse_polynomial<ModP>("8x + 1/2", r).to_string(), "x + 4");
  EXPECT_THROW(parse_polynomial<ModP>("x/7", r), ParseError);  // '/' only between numbers
  EXPECT_THROW(parse_polynomial<ModP>("1/7", r), PreconditionError);
}

TEST(Session, ParsesDeclarationsAndCommands) {
  const std::string text =
      "# double point example\n"
      "ring Q[x,y]\n"
      "mod y^2 - x^8\n"
      "ideal I = x^6, x^2 y\n"
      "curve C = y^2 - x^8\n"
      "coeffs I\n"
      "hilbert-values I 5\n"
      "hironaka C I   # trailing comment\n";
  auto s = parse_session(text);
  EXPECT_EQ(s.ring, "Q[x,y]");
  EXPECT_EQ(*s.modulus, "y^2 - x^8");
  EXPECT_EQ(s.ideals.at("I").first, "x^6, x^2 y");
  EXPECT_EQ(s.ideals.at("I").second, 4);
  ASSERT_EQ(s.commands.size(), 3u);
  EXPECT_EQ(s.commands[1].args, (std::vector<std::string>{"I", "5"}));
  EXPECT_EQ(s.commands[2].line, 8);
}

TEST(Session, Errors) {
  auto line_of = [](const std::string& text) { return parse_failure([&] { parse_session(text); }).line(); };
  EXPECT_EQ(line_of("ideal I = x\n"), 1);                         // before the ring
  EXPECT_EQ(line_of("ring Q[x]\ncoeffs J\n"), 2);                  // undeclared
  EXPECT_EQ(line_of("ring Q[x]\nideal I = x\nideal I = x^2\n"), 3);  // duplicate
  EXPECT_EQ(line_of("ring Q[x]\nring Q[y]\n"), 2);
  EXPECT_EQ(line_of("ring Q[x]\nfrobnicate\n"), 2);
  EXPECT_EQ(line_of("ring Q[x]\nideal = x\n"), 2);
  EXPECT_EQ(line_of("ring Q[x]\ndim two\n"), 2);
  EXPECT_EQ(line_of("ring Q[x]\nfield fp:7\n"), 2);
  EXPECT_EQ(line_of("# nothing\n"), 1);
  // commands may not refer to a later declaration
  EXPECT_EQ(line_of("ring Q[x]\ncoeffs I\nideal I = x\n"), 2);
}
