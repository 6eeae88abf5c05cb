#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bk/cli/commands.hpp"
#include "bk/cli/result_cache.hpp"
#include "bk/cli/table.hpp"
#include "doctest.h"

using namespace bk;
using namespace bk::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run bkcalc(std::vector<std::string> args) {
  args.insert(args.begin(), "bkcalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Points the cache at a fresh directory for the duration of a test.
struct ScratchCache {
  fs::path dir;
  ScratchCache() {
    dir = fs::temp_directory_path() / ("bk-cli-test-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    ::setenv("BK_CACHE_DIR", dir.c_str(), 1);
  }
  ~ScratchCache() { fs::remove_all(dir); }
};

}  // namespace

TEST_CASE("observables output") {
  CHECK(bkcalc({"observables", "--lambda", "(2,1)", "--kind", "boolean", "--max-k", "4"}).out == "0,3,0,3\n");
  CHECK(bkcalc({"observables", "--lambda", "()", "--kind", "moment", "--max-k", "3"}).out == "0,0,0\n");
  CHECK(bkcalc({"observables", "--lambda", "(5,3,2,2,1)", "--kind", "profile"}).out ==
        "minima: -5,-3,0,2,5 | maxima: -4,-2,1,4\n");
  CHECK(bkcalc({"observables", "--lambda", "2,1", "--kind", "twisted-boolean", "--max-k", "4"}).out == "0,-3,0,-3\n");
  CHECK(bkcalc({"observables", "--lambda", "(2)", "--kind", "free", "--max-k", "3"}).out == "0,2,2\n");
  const auto j = json::parse(bkcalc({"observables", "--lambda", "(1)", "--max-k", "4", "--format", "json"}).out);
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK(j.at("command") == "observables");
  CHECK(j.at("rows").at(0).at("values") == json::array({0, 1, 0, 1}));
}

TEST_CASE("usage errors") {
  const auto bad = bkcalc({"observables", "--lambda", "(2,q)"});
  CHECK(bad.code == kUsageError);
  CHECK(bad.err.find("'q'") != std::string::npos);
  CHECK(bkcalc({"observables", "--lambda", "(1,2)"}).code == kUsageError);
  CHECK(bkcalc({"frobnicate"}).code == kUsageError);
  CHECK(bkcalc({}).code == kUsageError);
  CHECK(bkcalc({"observables", "--lambda", "(1)", "--kind", "nope"}).code == kUsageError);
  CHECK(bkcalc({"kerov-boolean", "--max-pi-size", "0"}).code == kUsageError);
  CHECK(bkcalc({"expand-boolean", "--max-k", "1"}).code == kUsageError);
  CHECK(bkcalc({"--help"}).code == kSuccess);
}

TEST_CASE("kerov-boolean table") {
  ScratchCache cache;
  const auto text = bkcalc({"kerov-boolean", "--max-pi-size", "3"});
  CHECK(text.code == kSuccess);
  CHECK(text.out.find("(1,1)    x2^2 + x2") != std::string::npos);
  const auto j = json::parse(bkcalc({"kerov-boolean", "--max-pi-size", "2", "--format", "json"}).out);
  CHECK(j.at("params") == json{{"max_pi_size", 2}});
  const auto& rows = j.at("rows");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].at("pi") == json::array({1}));
  CHECK(rows[0].at("polynomial") == json::parse(R"([{"coeff":1,"vars":[2]}])"));
  CHECK(rows[0].at("degree") == 0);
  CHECK(rows[1].at("pi") == json::array({2}));
  CHECK(rows[1].at("iota") == -1);
  CHECK(rows[2].at("polynomial") == json::parse(R"([{"coeff":1,"vars":[2,2]},{"coeff":1,"vars":[2]}])"));
  CHECK(rows[2].at("agreement") == true);
}

TEST_CASE("expand-boolean table") {
  ScratchCache cache;
  const auto r = bkcalc({"expand-boolean", "--max-k", "4", "--format", "csv"});
  CHECK(r.code == kSuccess);
  CHECK(r.out ==
        "k,expansion,support,parity,agreement\n"
        "2,(1): 1,yes,yes,yes\n"
        "3,(2): 1,yes,yes,yes\n"
        "4,\"(3): 1, (1,1): 1\",yes,yes,yes\n");
  const auto latex = bkcalc({"expand-boolean", "--max-k", "3", "--format", "latex"}).out;
  CHECK(latex.rfind("\\begin{tabular}", 0) == 0);
  CHECK(latex.find("\\end{tabular}") != std::string::npos);
}

TEST_CASE("determinism and cache round trip") {
  ScratchCache cache;
  for (const auto& fmt : {"text", "json", "csv", "latex"}) {
    const auto fresh = bkcalc({"kerov-boolean", "--max-pi-size", "4", "--no-cache", "--format", fmt});
    const auto first = bkcalc({"kerov-boolean", "--max-pi-size", "4", "--format", fmt});
    const auto cached = bkcalc({"kerov-boolean", "--max-pi-size", "4", "--format", fmt});
    CHECK(fresh.out == first.out);
    CHECK(first.out == cached.out);
  }
  const ResultCache rc(ResultCache::default_directory());
  CHECK(rc.directory() == cache.dir);
  CHECK(rc.entries() == 1);
  const auto path = rc.entry_path("kerov-boolean", json{{"max_pi_size", 4}});
  REQUIRE(fs::exists(path));

  // A stale or corrupted entry is ignored and rewritten.
  {
    std::ofstream f(path);
    f << R"({"schema_version": 0, "rows": {"rows": [], "agree": true, "diff": ""}})";
  }
  CHECK(bkcalc({"kerov-boolean", "--max-pi-size", "4"}).out == bkcalc({"kerov-boolean", "--max-pi-size", "4", "--no-cache"}).out);
  {
    std::ofstream f(path);
    f << "not json";
  }
  CHECK(bkcalc({"kerov-boolean", "--max-pi-size", "4"}).out == bkcalc({"kerov-boolean", "--max-pi-size", "4", "--no-cache"}).out);
  CHECK(rc.load("kerov-boolean", json{{"max_pi_size", 4}}).has_value());

  CHECK(bkcalc({"cache", "path"}).out == cache.dir.string() + "\n");
  CHECK(bkcalc({"cache", "clear"}).out == "removed 1 entries\n");
  CHECK(rc.entries() == 0);
}

TEST_CASE("timestamp is opt-in") {
  const auto plain = bkcalc({"observables", "--lambda", "(1)", "--max-k", "2"});
  CHECK(plain.out == "0,1\n");
  const auto stamped = bkcalc({"observables", "--lambda", "(1)", "--max-k", "2", "--timestamp"});
  CHECK(stamped.out.rfind("0,1\ngenerated: ", 0) == 0);
}

TEST_CASE("verify") {
  const auto quick = bkcalc({"verify"});
  CHECK(quick.code == kSuccess);
  CHECK(quick.out.find("verification passed (profile quick)") != std::string::npos);

  const auto j = json::parse(bkcalc({"verify", "--format", "json"}).out);
  CHECK(j.at("passed") == true);
  for (const auto* group : {"observables", "characters", "kerov", "expansion", "routes", "bubbles"})
    CHECK(j.at("groups").at(group).at("checks").get<int>() >= 1);

  const auto flipped = bkcalc({"verify", "--mutate", "flip-twisted-sign"});
  CHECK(flipped.code == kVerificationFailure);
  CHECK(flipped.out.find("FAIL kerov") != std::string::npos);
  CHECK(flipped.out.find("non-negative integer coefficients") != std::string::npos);

  const auto curl = bkcalc({"verify", "--mutate", "drop-curl-dot"});
  CHECK(curl.code == kVerificationFailure);
  CHECK(curl.out.find("FAIL routes") != std::string::npos);
}

TEST_CASE("verify writes a report file") {
  const fs::path report = fs::temp_directory_path() / ("bk-report-" + std::to_string(::getpid()) + ".json");
  CHECK(bkcalc({"verify", "--report", report.string()}).code == kSuccess);
  std::ifstream in(report);
  const auto j = json::parse(in);
  CHECK(j.at("profile") == "quick");
  CHECK(!j.at("checks").empty());
  fs::remove(report);
}

TEST_CASE("table rendering") {
  Table t;
  t.command = "demo";
  t.columns = {{"name", CellKind::Plain}, {"p", CellKind::Polynomial, VariableFamily::X}};
  GradedPolynomial p(VariableFamily::X);
  p.add_term({2, 3}, Rational(-2));
  p.add_term({}, Rational(1));
  t.rows.push_back(json{{"name", "a,b"}, {"p", to_json(p)}});
  CHECK(render(t, Format::Csv) == "name,p\n\"a,b\",-2*x2*x3 + 1\n");
  CHECK(render(t, Format::Text) == "name  p\na,b   -2*x2*x3 + 1\n");
  CHECK(render(t, Format::Latex).find("$-2x_{2}x_{3} + 1$") != std::string::npos);
  CHECK(polynomial_from_json(to_json(p), VariableFamily::X) == p);
  CHECK_THROWS(parse_format("yaml"));
}
