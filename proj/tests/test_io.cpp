#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <memory>

#include "firstfall/error.hpp"
#include "firstfall/io.hpp"
#include "firstfall/report.hpp"
#include "helpers.hpp"

using namespace firstfall;
using namespace firstfall::testing;

namespace {

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_system(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorKind::InvalidArgument;
}

struct Run {
  int status = 0;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  r.status = WEXITSTATUS(pclose(pipe.release()));
  return r;
}

const std::string kCli = FIRSTFALL_CLI_PATH;

}  // namespace

TEST(SystemJson, RoundTripStandard) {
  auto sys = generic_standard(3, 4, 2, 1);
  sys.provenance = {{"generator", "random"}, {"seed", 1}};
  EXPECT_EQ(parse_system(serialize_system(sys)), sys);
}

TEST(SystemJson, RoundTripWeightedRing) {
  RingSpec r(FieldSpec(101), {{"x", 2}, {"y", 1}}, {MultiDegree{1, 0}, MultiDegree{2, 1}, MultiDegree{0, 1}});
  const auto sys = random_system(r, {MultiDegree{2, 1}, MultiDegree{3, 1}}, 2);
  const auto text = serialize_system(sys);
  EXPECT_NE(text.find("\"weights\""), std::string::npos);
  EXPECT_EQ(parse_system(text), sys);
  EXPECT_EQ(serialize_system(parse_system(text)), text);
}

TEST(SystemJson, OmitsDefaultWeights) {
  EXPECT_EQ(serialize_system(generic_bilinear(2, 2, 1, 3)).find("weights"), std::string::npos);
}

TEST(SystemJson, MalformedInputIsParseError) {
  const std::string ring = R"("field":{"p":7},"blocks":[{"name":"x","vars":2}])";
  EXPECT_EQ(parse_error_kind("not json"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("[]"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"field":{"p":8},"blocks":[{"name":"x","vars":2}],"polys":[]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("{" + ring + R"(,"polys":[[[9,[1,0]]]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("{" + ring + R"(,"polys":[[[1,[1,0,0]]]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("{" + ring + R"(,"polys":[[[1,[1,0]],[2,[1,0]]]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("{" + ring + R"(,"polys":[[[-1,[1,0]]]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("{" + ring + R"(,"polys":[[[1,[-1,0]]]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("{" + ring + "}"), ErrorKind::ParseError);
}

TEST(SystemJson, ZeroCoefficientTermsVanish) {
  const auto sys = parse_system(R"({"field":{"p":7},"blocks":[{"name":"x","vars":1}],"polys":[[[0,[1]],[3,[2]]]]})");
  EXPECT_EQ(sys.polys[0].size(), 1u);
}

TEST(Answers, JsonShape) {
  EXPECT_EQ(to_json(DegreeAnswer::found(3, 10)), (nlohmann::json{{"found", true}, {"value", 3}, {"bound", 10}}));
  EXPECT_EQ(to_json(DegreeAnswer::not_found(12)), (nlohmann::json{{"found", false}, {"not_found_up_to", 12}}));
  EXPECT_EQ(to_json(MultiDegreeAnswer::found({1, 2}, 6)).at("value"), (nlohmann::json{1, 2}));
}

TEST(ProfilesCsv, HeaderAndRows) {
  const std::vector<SyzygyProfile> rows{{MultiDegree{1, 2}, 4, 3, 1}};
  EXPECT_EQ(profiles_to_csv(rows, 2), "d1,d2,syz,ksyz,h1\n1,2,4,3,1\n");
}

TEST(Report, StableWithoutTimings) {
  const auto sys = generic_bilinear(2, 2, 4, 4);
  ReportOptions opt;
  opt.bound = 6;
  opt.timings = false;
  const auto a = dump_report(build_report(sys, opt));
  EXPECT_EQ(a, dump_report(build_report(sys, opt)));
  const auto rep = nlohmann::json::parse(a);
  EXPECT_FALSE(rep.contains("timings_ms"));
  EXPECT_EQ(rep.at("indicators").at("D_multi_ordered").at("value"), (nlohmann::json{1, 2}));
}

TEST(Report, AffineInputIsAnnotated) {
  auto sys = generic_standard(2, 3, 2, 5);
  sys.polys[0].add_term(Monomial::one(2), {1}, kP);
  ReportOptions opt;
  opt.bound = 6;
  opt.timings = false;
  const auto rep = build_report(sys, opt);
  EXPECT_EQ(rep.at("annotations").at(0), "affine input: indicators use the top homogeneous components");
}

TEST(Cli, GeneratedFilesAreDeterministicAndParse) {
  const auto a = run(kCli + " gen rbs --q 31 --v 3 --o1 2 --o2 2 --seed 1");
  const auto b = run(kCli + " gen rbs --q 31 --v 3 --o1 2 --o2 2 --seed 1");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(serialize_system(parse_system(a.out)), a.out);
}

TEST(Cli, EstimateReportIsByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "firstfall_cli_test";
  std::filesystem::create_directories(dir);
  const auto sys = (dir / "sys.json").string();
  ASSERT_EQ(run(kCli + " gen random --blocks 2,2 --degrees '1,1;1,1;1,1;1,1' --seed 3 --out " + sys).status, 0);
  const auto a = run(kCli + " estimate --system " + sys + " --bound 8 --no-timings");
  const auto b = run(kCli + " estimate --system " + sys + " --bound 8 --no-timings");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto rep = nlohmann::json::parse(a.out);
  EXPECT_EQ(rep.at("indicators").at("D_multi").at("value"), 3);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ErrorsUseExitCodes) {
  EXPECT_EQ(run(kCli + " complexity --n 4 --d 3 --omega 3.5 2>/dev/null").status, 1);
  EXPECT_EQ(run(kCli + " no-such-command 2>/dev/null").status, 2);
  EXPECT_EQ(run(kCli + " dreg --system /nonexistent.json 2>/dev/null").status, 1);
}

TEST(Cli, ComplexityComparisonRow) {
  const auto r = run(kCli + " complexity --n 10 --d 2 --omega 2 --allow-omega-two");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("4356"), std::string::npos);
}
