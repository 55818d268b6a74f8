#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "ruledmmp/dot.hpp"
#include "ruledmmp/generator.hpp"
#include "ruledmmp/io.hpp"
#include "support/fixtures.hpp"
#include "support/run_tool.hpp"

using namespace ruledmmp;
using testsupport::repo_path;
using testsupport::run_tool;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("instance round trip on fixtures and random instances") {
  for (char letter : {'a', 'b', 'c', 'd'}) {
    std::string text = read_file(repo_path(std::string("fixtures/fix_") + letter + ".json"));
    SurfacePair sp = parse_instance(text);
    CHECK(serialize_instance(sp) == text);  // files are canonical form
    CHECK(parse_instance(serialize_instance(sp)) == sp);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratorParams params{(std::int64_t)(seed % 4), (std::int64_t)(seed % 5),
                           (std::int64_t)(seed % 13), (seed % 5) / 4.0,
                           (std::int64_t)(seed % 3)};
    SurfacePair sp = random_instance(seed, params);
    CHECK(parse_instance(serialize_instance(sp)) == sp);
  }
}

TEST_CASE("parser rejects malformed documents") {
  CHECK_THROWS_AS(parse_instance("not json at all"), Error);
  CHECK_THROWS_AS(parse_instance("{}"), Error);
  CHECK_THROWS_AS(parse_instance(R"({"genus":0,"e":0,"horizontals":[],"fibers":[],)"
                                 R"("dv_whole_smooth_fibers":[]})"),
                  Error);
}

TEST_CASE("dot export of the fixtures") {
  SurfacePair a = testsupport::load_fixture('a');
  CHECK(export_dot(a) == "// ruledmmp fiber dual graphs\n// no recorded fibers\n");

  SurfacePair c = testsupport::load_fixture('c');
  std::string dot = export_dot(c);
  // three components, two nodes between components, two boundary marks
  CHECK(dot.find("\"v0\" -- \"v2\"") != std::string::npos);
  CHECK(dot.find("\"v1\" -- \"v2\"") != std::string::npos);
  CHECK(dot.find("shape=diamond") != std::string::npos);
  CHECK(dot.find("\"v0\" -- \"v1\"") == std::string::npos);

  GoodModelPlan plan = run(c);
  std::string per_state = export_dot(c, plan.steps);
  CHECK(per_state.find("t0_s0") != std::string::npos);
  CHECK(per_state.find("t0_s1") != std::string::npos);
  CHECK(per_state.find("t0_s2") != std::string::npos);
}

TEST_CASE("cli: run prints the stage boundaries") {
  auto r = run_tool("run " + repo_path("fixtures/fix_b.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "k1=0 k2=1 m=1 gamma=1\n");
  auto rc = run_tool("run " + repo_path("fixtures/fix_c.json"));
  CHECK(rc.out == "k1=1 k2=2 m=2 gamma=1\n");
}

TEST_CASE("cli: exit code discipline") {
  // 2: usage
  CHECK(run_tool("frobnicate").exit_code == 2);
  CHECK(run_tool("generate --seed 7 --blowups 13 --out " + temp_path("x.json")).exit_code == 2);
  CHECK(run_tool("verify --checks prop_9_9 " + repo_path("fixtures/fix_a.json")).exit_code == 2);
  // 3: invalid instance
  std::string bad = temp_path("bad_instance.json");
  write_file(bad, "{\"genus\": 0}");
  CHECK(run_tool("run " + bad).exit_code == 3);
  std::string broken = temp_path("broken_instance.json");
  SurfacePair sp = testsupport::load_fixture('b');
  sp.fibers[0].components[0].mult = 2;
  write_file(broken, serialize_instance(sp));
  CHECK(run_tool("run " + broken).exit_code == 3);
  // 4: unreadable input, unwritable output
  CHECK(run_tool("run /nonexistent/not_there.json").exit_code == 4);
  CHECK(run_tool("export-dot " + repo_path("fixtures/fix_a.json") +
                 " --out /nonexistent/dir/out.dot")
            .exit_code == 4);
  // 0: flags are not failures
  std::string flagged = temp_path("flagged_instance.json");
  SurfacePair d = testsupport::load_fixture('d');
  d.dv_whole_smooth_fibers.push_back("t0");
  write_file(flagged, serialize_instance(d));
  auto r = run_tool("verify " + flagged);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("kappa0_consistency: FLAG") != std::string::npos);
  // per-command coverage of the remaining codes
  CHECK(run_tool("generate --seed 1 --out /nonexistent/dir/x.json").exit_code == 4);
  CHECK(run_tool("verify " + broken).exit_code == 3);
  CHECK(run_tool("verify /nonexistent/not_there.json").exit_code == 4);
  CHECK(run_tool("export-dot " + bad).exit_code == 3);
}

TEST_CASE("a parsed trace replays to byte-identical final states") {
  TraceData t = parse_trace(read_file(repo_path("tests/golden/fix_c.trace.json")));
  ContractionState s1 = replay(t.instance, t.steps, t.steps.size());
  ContractionState s2 = replay(t.instance, t.steps, t.steps.size());
  CHECK(serialize_state(s1) == serialize_state(s2));
  GoodModelPlan plan = run(t.instance);
  CHECK(serialize_state(s1) == serialize_state(plan.final_state));
}

TEST_CASE("cli: a tampered trace fails to replay") {
  std::string trace_path = temp_path("tampered.trace.json");
  SurfacePair c = testsupport::load_fixture('c');
  GoodModelPlan plan = run(c);
  std::string text = serialize_trace(c, plan);
  // corrupt the first recorded class
  auto at = text.find("\"contracted_class\"");
  REQUIRE(at != std::string::npos);
  text.replace(text.find('1', at), 1, "7");
  write_file(trace_path, text);
  CHECK(run_tool("export-dot " + trace_path).exit_code == 3);
}

TEST_CASE("cli: generate is deterministic and canonical") {
  std::string p1 = temp_path("gen1.json"), p2 = temp_path("gen2.json");
  std::string args =
      "generate --seed 11 --g 1 --e 1 --blowups 5 --dv-density 0.5 --whole-dv 2 --out ";
  CHECK(run_tool(args + p1).exit_code == 0);
  CHECK(run_tool(args + p2).exit_code == 0);
  CHECK(read_file(p1) == read_file(p2));
  SurfacePair sp = parse_instance(read_file(p1));
  CHECK(validate(sp).overall());
  CHECK(sp.dv_whole_smooth_fibers.size() == 2);
}

TEST_CASE("cli: verify filters checks and reports vacuous hypotheses") {
  auto r = run_tool("verify --checks cross_term " + repo_path("fixtures/fix_a.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "cross_term: VACUOUS\n");
  auto rd = run_tool("verify --checks cross_term,genus_formula " + repo_path("fixtures/fix_d.json"));
  CHECK(rd.exit_code == 0);
  CHECK(rd.out == "cross_term: PASS\ngenus_formula: VACUOUS\n");
}

TEST_CASE("cli: verify batches keep input order under --jobs") {
  std::string paths = repo_path("fixtures/fix_a.json") + " " + repo_path("fixtures/fix_b.json") +
                      " " + repo_path("fixtures/fix_c.json") + " " +
                      repo_path("fixtures/fix_d.json");
  auto serial = run_tool("verify " + paths);
  auto parallel = run_tool("verify --jobs 4 " + paths);
  CHECK(serial.exit_code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(serial.out.find("# ") == 0);  // per-instance headers in batch mode
}

TEST_CASE("cli: trace replay determinism through export-dot") {
  std::string trace1 = temp_path("c1.trace.json"), trace2 = temp_path("c2.trace.json");
  CHECK(run_tool("run " + repo_path("fixtures/fix_c.json") + " --out " + trace1).exit_code == 0);
  CHECK(run_tool("run " + repo_path("fixtures/fix_c.json") + " --out " + trace2).exit_code == 0);
  CHECK(read_file(trace1) == read_file(trace2));

  auto d1 = run_tool("export-dot " + trace1);
  auto d2 = run_tool("export-dot " + trace2);
  CHECK(d1.exit_code == 0);
  CHECK(d1.out == d2.out);
  CHECK(d1.out.find("t0_s2") != std::string::npos);
}

TEST_CASE("golden files: run, verify, export-dot on the fixtures") {
  for (char letter : {'a', 'b', 'c', 'd'}) {
    std::string fix = repo_path(std::string("fixtures/fix_") + letter + ".json");
    std::string base = repo_path(std::string("tests/golden/fix_") + letter);

    auto r = run_tool("run " + fix + " --out " + temp_path("g.trace.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(base + ".run.txt"));
    CHECK(read_file(temp_path("g.trace.json")) == read_file(base + ".trace.json"));

    auto v = run_tool("verify " + fix);
    CHECK(v.exit_code == 0);
    CHECK(v.out == read_file(base + ".verify.txt"));

    auto e = run_tool("export-dot " + fix);
    CHECK(e.exit_code == 0);
    CHECK(e.out == read_file(base + ".dot"));
  }
  // per-state graphs from a trace input
  auto traced = run_tool("export-dot " + repo_path("tests/golden/fix_c.trace.json"));
  CHECK(traced.exit_code == 0);
  CHECK(traced.out == read_file(repo_path("tests/golden/fix_c.states.dot")));
}
