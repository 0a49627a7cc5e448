#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hilbsam/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hilbsam::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  EXPECT_TRUE(in) << p;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::filesystem::path(HILBSAM_GOLDEN_DIR) / name); }

std::string sample(const std::string& name) {
  return (std::filesystem::path(HILBSAM_SAMPLES_DIR) / name).string();
}

const std::vector<std::string> kDoublePoint{"--ring", "Q[x,y]", "--mod", "y^2-x^8", "--ideal", "x^6,x^2*y"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST(Golden, EveryCommandMatches) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"coeffs.json", with({"coeffs"}, with(kDoublePoint, {"--json"}))},
      {"hvector.json", with({"hvector"}, with(kDoublePoint, {"--json"}))},
      {"hilbert-values.json", {"hilbert-values", "--ring", "Q[x,y]", "--ideal", "m^2", "--nmax", "4", "--json"}},
      {"check-hhc.json", {"check-hhc", "--ring", "Q[x,y]", "--ideal", "m^2", "--json"}},
      {"check-powers.json", with({"check-powers"}, with(kDoublePoint, {"--powers", "3", "--json"}))},
      {"curve-resolve.json", {"curve-resolve", "--ring", "Q[x,y]", "--curve", "y^3-x^4", "--json"}},
      {"delta.json", {"delta", "--ring", "Q[x,y]", "--curve", "y^2-x^8", "--json"}},
      {"hironaka.json", {"hironaka", "--ring", "Q[x,y]", "--curve", "y^2-x^9", "--ideal", "x^6,x^2*y", "--json"}},
      {"verify-paper.json", {"verify-paper", "--json"}},
      {"coeffs.txt", with({"coeffs"}, kDoublePoint)},
  };
  for (const auto& [file, args] : cases) {
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << file << ": " << r.err;
    EXPECT_EQ(r.out, golden(file)) << file;
    EXPECT_TRUE(r.err.empty()) << file;
  }
}

TEST(Golden, SessionFile) {
  // the report records the path as given, so run from the project root
  auto cwd = std::filesystem::current_path();
  std::filesystem::current_path(std::filesystem::path(HILBSAM_SAMPLES_DIR).parent_path());
  auto r = run({"session", "samples/double_point.session", "--json"});
  std::filesystem::current_path(cwd);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("double_point.session.json"));
}

TEST(Output, RepeatedRunsAreByteIdentical) {
  auto args = with({"check-hhc"}, with(kDoublePoint, {"--json"}));
  auto first = run(args);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(run(args).out, first.out);
  auto text = run(with({"hvector"}, kDoublePoint));
  EXPECT_EQ(run(with({"hvector"}, kDoublePoint)).out, text.out);
}

TEST(Output, JsonParsesAndTimingIsOptIn) {
  auto plain = run(with({"coeffs"}, with(kDoublePoint, {"--json"})));
  auto doc = nlohmann::json::parse(plain.out);
  EXPECT_EQ(doc["results"]["e"], nlohmann::json::array({"12", "4"}));
  EXPECT_FALSE(doc.contains("timing"));
  auto timed = run(with({"coeffs"}, with(kDoublePoint, {"--json", "--timing"})));
  EXPECT_TRUE(nlohmann::json::parse(timed.out).contains("timing"));
}

TEST(Output, TextModeShowsTheCoefficients) {
  auto r = run(with({"coeffs"}, kDoublePoint));
  EXPECT_NE(r.out.find("12 4"), std::string::npos);
  auto tree = run({"curve-resolve", "--ring", "Q[x,y]", "--curve", "y^2-x^5"});
  EXPECT_EQ(tree.code, 0);
  EXPECT_NE(tree.out.find("A:0  m=2"), std::string::npos) << tree.out;
}

TEST(ExitCodes, ParseErrors) {
  EXPECT_EQ(run({"coeffs", "--ring", "Q[x,y]", "--ideal", "x^2, w"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--ring", "Q[x,y", "--ideal", "x"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--ring", "Q[x,y]"}).code, 2);          // missing ideal
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--bogus"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--ring", "Q[x]", "--ideal", "x", "--field", "r"}).code, 2);
  auto r = run({"coeffs", "--ring", "Q[x,y]", "--ideal", "1/0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("zero denominator"), std::string::npos) << r.err;
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(ExitCodes, Preconditions) {
  EXPECT_EQ(run({"coeffs", "--ring", "Q[x,y]", "--ideal", "x"}).code, 3);        // not m-primary
  EXPECT_EQ(run({"coeffs", "--ring", "Q[x,y]", "--ideal", "x-1, y"}).code, 3);
  EXPECT_EQ(run({"delta", "--ring", "Q[x,y]", "--curve", "y^2"}).code, 3);       // non-reduced
  EXPECT_EQ(run({"delta", "--ring", "Q[x,y]", "--curve", "y-1"}).code, 3);
  EXPECT_EQ(run({"coeffs", "--ring", "Q[x]", "--ideal", "x", "--field", "fp:12"}).code, 3);
  // a declared dimension above the fitted degree
  EXPECT_EQ(run(with({"coeffs"}, with(kDoublePoint, {"--dim", "2"}))).code, 3);
}

TEST(ExitCodes, NotStabilized) {
  EXPECT_EQ(run({"coeffs", "--ring", "Q[x,y]", "--ideal", "x^2, y^2", "--max-power", "3"}).code, 4);
  // declaring dimension 0 for a curve: the values never become constant
  EXPECT_EQ(run(with({"coeffs"}, with(kDoublePoint, {"--dim", "0"}))).code, 4);
}

TEST(ExitCodes, Rationality) {
  EXPECT_EQ(run({"delta", "--ring", "Q[x,y]", "--curve", "(y^2-2x^2)^2+x^5"}).code, 5);
}

TEST(ExitCodes, InvariantKinds) {
  using hilbsam::ErrorKind;
  using hilbsam::cli::exit_code;
  EXPECT_EQ(exit_code(ErrorKind::invariant), 6);
  EXPECT_EQ(exit_code(ErrorKind::rationality), 5);
  EXPECT_EQ(exit_code(ErrorKind::precondition), 3);
}

TEST(ExitCodes, SessionFileProblems) {
  auto dir = std::filesystem::temp_directory_path() / "hilbsam_cli_test";
  std::filesystem::create_directories(dir);
  auto bad = dir / "bad.session";
  std::ofstream(bad) << "ring Q[x,y]\ncoeffs I\n";
  EXPECT_EQ(run({"session", bad.string()}).code, 2);
  EXPECT_EQ(run({"session", (dir / "missing.session").string()}).code, 3);
  std::filesystem::remove_all(dir);
}

TEST(Session, RunsTheSamples) {
  for (const char* name : {"double_point.session", "monomial.session"}) {
    auto r = run({"session", sample(name), "--json"});
    EXPECT_EQ(r.code, 0) << name << ": " << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_FALSE(doc["reports"].empty());
  }
}

TEST(Session, ErrorsNameTheLine) {
  auto dir = std::filesystem::temp_directory_path() / "hilbsam_cli_session";
  std::filesystem::create_directories(dir);
  auto file = dir / "s.session";
  std::ofstream(file) << "ring Q[x,y]\nideal I = x^2, y\ncoeffs I\ncoeffs II\n";
  auto r = run({"session", file.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
  // a failing job reports its own exit code
  std::ofstream(file) << "ring Q[x,y]\nideal I = x\n\ncoeffs I\n";
  r = run({"session", file.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find(":4: coeffs:"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::filesystem::remove_all(dir);
}
