#include "jloci/reports.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace jloci;

namespace {

void expect_no_floats(const Json& j, const std::string& where = "")
{
  if (j.is_number_float())
    ADD_FAILURE() << "floating point value at " << where;
  if (j.is_structured())
    for (const auto& [k, v] : j.items())
      expect_no_floats(v, where + "/" + k);
}

std::vector<std::size_t> profile_dims(const Json& report)
{
  std::vector<std::size_t> out;
  for (const auto& e : report["evidence"]["profile"])
    out.push_back(e["dim"].get<std::size_t>());
  return out;
}

} // namespace

TEST(AlgebraInput, ParsesAndRoundTrips)
{
  auto data = parse_algebra_input(R"({"n": 4, "h2": 1, "del": [[2, 0, "1"], [3, 0, "-1/2"]], "label": "x"})");
  EXPECT_EQ(data.n, 4u);
  EXPECT_EQ(data.h2, 1u);
  EXPECT_EQ(data.del.entry(3, 0), Rational(-1, 2));
  EXPECT_EQ(data.label, "x");
  auto again = parse_algebra_input(algebra_to_json(data).dump());
  EXPECT_EQ(again.del, data.del);
  EXPECT_EQ(algebra_to_json(again), algebra_to_json(data));
}

TEST(AlgebraInput, SyntaxErrorsCarryLineAndColumn)
{
  try {
    parse_algebra_input("{\n  \"n\": 4,\n  \"h2\" 1\n}");
    FAIL() << "no error";
  } catch (const InputError& e) {
    EXPECT_EQ(e.line, 3u);
    EXPECT_GT(e.column, 1u);
  }
}

TEST(AlgebraInput, SemanticErrorsCarryPointer)
{
  auto pointer_of = [](const char* text) {
    try {
      parse_algebra_input(text);
    } catch (const InputError& e) {
      return e.pointer;
    }
    return std::string("<accepted>");
  };
  EXPECT_EQ(pointer_of(R"({"n": 3, "h2": 1, "del": [[0, 0]]})"), "/del/0");
  EXPECT_EQ(pointer_of(R"({"n": 3, "h2": 1, "del": [[3, 0, "1"]]})"), "/del/0/0");
  EXPECT_EQ(pointer_of(R"({"n": 3, "h2": 1, "del": [[0, 1, "1"]]})"), "/del/0/1");
  EXPECT_EQ(pointer_of(R"({"n": 3, "h2": 1, "del": [[0, 0, "1/0"]]})"), "/del/0/2");
  EXPECT_EQ(pointer_of(R"({"n": 3, "h2": 1, "del": [[0, 0, 1.5]]})"), "/del/0/2");
  EXPECT_EQ(pointer_of(R"({"n": 3, "h2": 1, "del": [[0, 0, "1"], [0, 0, "2"]]})"), "/del/1");
  EXPECT_EQ(pointer_of(R"({"n": -3, "h2": 1, "del": []})"), "/n");
  EXPECT_EQ(pointer_of(R"({"n": 3, "del": []})"), "/h2");
  EXPECT_EQ(pointer_of(R"({"n": 3, "h2": 0, "del": [], "extra": 1})"), "/extra");
  EXPECT_EQ(pointer_of(R"([1, 2])"), "");
}

TEST(Commands, VerifyResonanceRangeAndVerdict)
{
  EXPECT_THROW(cmd_verify_resonance(2, 1), UsageError);
  EXPECT_THROW(cmd_verify_resonance(6, 1), UsageError);
  auto r = cmd_verify_resonance(3, 1, 5);
  EXPECT_EQ(r.exit_code, exit_ok);
  EXPECT_EQ(r.report["verdict"], "FULL");
  EXPECT_EQ(r.report["evidence"]["dim_W"], 91);
  EXPECT_FALSE(r.report["anchor"].get<std::string>().empty());
}

TEST(Commands, AlexanderProfiles)
{
  auto r = cmd_alexander(preset_data("free3"), Json{{"preset", "free3"}}, 3);
  EXPECT_EQ(r.exit_code, exit_ok);
  EXPECT_EQ(profile_dims(r.report), (std::vector<std::size_t>{3, 8, 15, 24}));
  EXPECT_EQ(r.report["verdict"], "UNKNOWN");

  auto f = cmd_alexander(preset_data("indecomposable-form"), Json{{"preset", "indecomposable-form"}}, 4);
  EXPECT_EQ(f.report["verdict"], "FINITE");
  EXPECT_EQ(f.report["evidence"]["vanishing_degree"], 1);

  auto g = cmd_alexander(preset_data("free4"), Json{{"preset", "free4"}}, 4, 50);
  EXPECT_EQ(g.exit_code, exit_guard);
  EXPECT_TRUE(g.report["evidence"]["truncated"].get<bool>());
  EXPECT_THROW(preset_data("nope"), UsageError);
}

TEST(Commands, TorusCommands)
{
  auto o = cmd_orbit(3, 2, 7);
  EXPECT_EQ(o.exit_code, exit_ok);
  EXPECT_EQ(o.report["verdict"], "FINITE_CLOSED");

  auto trunc = cmd_orbit(3, 5, 7, 10);
  EXPECT_EQ(trunc.exit_code, exit_guard);

  for (const char* set : {"zero", "full-2-torsion-sample", "full-3-torsion", "orbit-2"}) {
    auto r = cmd_invariance(3, set, 1);
    EXPECT_EQ(r.exit_code, exit_ok) << set;
    EXPECT_EQ(r.report["verdict"], "INVARIANT") << set;
  }
  EXPECT_EQ(cmd_invariance(3, "full-3-torsion", 1).report["evidence"]["method"], "structural");
  auto p = cmd_invariance(3, "point-5", 1);
  EXPECT_EQ(p.report["verdict"], "NOT_INVARIANT");
  EXPECT_EQ(p.exit_code, exit_ok);
  EXPECT_THROW(cmd_invariance(3, "everything", 1), UsageError);
  EXPECT_THROW(cmd_invariance(3, "full-x-torsion", 1), UsageError);
  EXPECT_THROW(cmd_orbit(2, 2, 1), UsageError);
}

TEST(Commands, CrosscheckAgrees)
{
  auto r = cmd_crosscheck(4, 1);
  EXPECT_EQ(r.exit_code, exit_ok);
  EXPECT_EQ(r.report["verdict"], "AGREE");
  EXPECT_EQ(r.report["evidence"]["cases"], 4 * 20 * 3);
}

TEST(Reports, ReproducibleAndExact)
{
  auto a = cmd_crosscheck(3, 9), b = cmd_crosscheck(3, 9);
  finish_report(a.report, 1.5);
  finish_report(b.report, 2.5);
  EXPECT_NE(a.report.dump(), b.report.dump());
  EXPECT_EQ(reproducible_dump(a.report), reproducible_dump(b.report));
  EXPECT_NE(reproducible_dump(a.report), reproducible_dump(cmd_crosscheck(3, 10).report));

  for (const auto& r : {cmd_orbit(3, 3, 2).report, cmd_verify_resonance(3, 2, 3).report})
    expect_no_floats(r);
}

TEST(Reports, AtomicWrite)
{
  auto dir = std::filesystem::temp_directory_path() / ("jloci_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto path = dir / "report.json";
  write_atomically(path, "first");
  write_atomically(path, "second");
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str(), "second");
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()), 1);
  std::filesystem::remove_all(dir);
}
