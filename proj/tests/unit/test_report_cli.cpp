#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tpv/errors.hpp"
#include "tpv/report.hpp"

using namespace tpv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

VerificationReport sample() {
  VerificationReport r;
  r.lemma_id = "tower";
  r.params = {{"seed", "7"}, {"k", "3"}};
  r.verdict = Verdict::Verified;
  r.counts = {{"big", BigInt("123456789012345678901234567890")}, {"small", 4}};
  r.notes = {"first", "second, with comma"};
  r.elapsed_ms = 17;
  r.seed = 7;
  return r;
}

}  // namespace

TEST_SUITE("report-cli") {
  TEST_CASE("json round trip") {
    const auto r = sample();
    const auto line = to_json(r);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(report_from_json(line) == r);
    CHECK(report_from_json(to_json(r, true)).elapsed_ms == 0);
    auto v = r;
    v.verdict = Verdict::Violated;
    v.witness = "g";
    CHECK(report_from_json(to_json(v)) == v);
  }

  TEST_CASE("unknown fields tolerated, schema enforced") {
    auto line = to_json(sample());
    line.insert(1, "\"extra\":[1,2],");
    CHECK(report_from_json(line).lemma_id == "tower");
    CHECK_THROWS_AS(report_from_json("{not json"), InvalidArgument);
    auto bad = to_json(sample());
    const auto at = bad.find("\"schema\":1");
    REQUIRE(at != std::string::npos);
    bad.replace(at, 10, "\"schema\":9");
    CHECK_THROWS_AS(report_from_json(bad), InvalidArgument);
  }

  TEST_CASE("violated report needs a witness") {
    auto r = sample();
    r.verdict = Verdict::Violated;
    CHECK_THROWS_AS(r.check(), InternalError);
    r.witness = "x";
    CHECK_NOTHROW(r.check());
  }

  TEST_CASE("verdict folding and exit codes") {
    CHECK(combine(Verdict::Verified, Verdict::NotApplicable) == Verdict::Verified);
    CHECK(combine(Verdict::SkippedResource, Verdict::Verified) == Verdict::SkippedResource);
    CHECK(combine(Verdict::SkippedResource, Verdict::Violated) == Verdict::Violated);
    auto a = sample(), b = sample();
    CHECK(exit_code_for({a, b}) == 0);
    b.verdict = Verdict::SkippedResource;
    CHECK(exit_code_for({a, b}) == 2);
    a.verdict = Verdict::Violated;
    CHECK(exit_code_for({a, b}) == 1);
    CHECK(verdict_from_string(to_string(Verdict::NotApplicable)) == Verdict::NotApplicable);
  }

  TEST_CASE("csv and markdown") {
    const auto r = sample();
    const auto header = csv_header();
    const auto row = to_csv_row(r, true);
    CHECK(std::count(header.begin(), header.end(), ',') <= std::count(row.begin(), row.end(), ','));
    CHECK(row.rfind("tower,", 0) == 0);
    CHECK(row.find(",verified,") != std::string::npos);
    CHECK(row.find("big=123456789012345678901234567890") != std::string::npos);
    const auto md = to_markdown({r}, true);
    CHECK(md.find("| tower") != std::string::npos);
  }

  TEST_CASE("cli: sylow2 statement 3 on GL_2(7)") {
    const auto r = run({"verify", "sylow2", "--n", "2", "--q", "7", "--statement", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"involutions\":9") != std::string::npos);
  }

  TEST_CASE("cli: counting on PG(2,9)") {
    const auto r = run({"verify", "counting", "--q", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ratio\":7") != std::string::npos);
  }

  TEST_CASE("cli: lemma-a exhaustive on GL_2(7)") {
    const auto r = run({"verify", "lemma-a", "--n", "2", "--q", "7", "--mode", "exhaustive", "--stable-output"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\":\"verified\"") != std::string::npos);
  }

  TEST_CASE("cli: usage errors") {
    CHECK(run({"verify", "sylow2", "--bogus"}).code == 3);
    CHECK(run({"frobnicate"}).code == 3);
    const auto na = run({"verify", "sylow2", "--n", "2", "--q", "6", "--statement", "1"});
    CHECK(na.code == 0);
    CHECK(na.out.find("not-applicable") != std::string::npos);
    CHECK(run({"verify", "sylow2", "--statement", "9"}).code == 3);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("cli: stable output is byte identical") {
    const std::vector<std::string> args{"verify", "tower", "--seed", "3", "--trials", "20", "--stable-output"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto c1 = run({"census", "sylow2", "--n", "2,3", "--q", "7"});
    CHECK(c1.code == 0);
    CHECK(c1.out.find("2,7,Presentation4q1,32,9") != std::string::npos);
  }

  TEST_CASE("cli: report merge") {
    const auto dir = std::filesystem::temp_directory_path() / "tpv_merge_test";
    std::filesystem::create_directories(dir);
    const auto f1 = (dir / "a.ndjson").string(), f2 = (dir / "b.ndjson").string();
    CHECK(run({"verify", "counting", "--q", "9", "--stable-output", "--out", f1}).code == 0);
    CHECK(run({"verify", "sylow2", "--n", "2", "--q", "7", "--statement", "1", "--stable-output", "--out", f2}).code == 0);
    const auto merged = run({"report", "merge", f1, f2, "--format", "md", "--stable-output"});
    CHECK(merged.code == 0);
    CHECK(merged.out.find("counting") != std::string::npos);
    CHECK(merged.out.find("sylowtwoingln") != std::string::npos);
    CHECK(run({"report", "merge", (dir / "missing.ndjson").string()}).code == 3);
    std::filesystem::remove_all(dir);
  }
}
