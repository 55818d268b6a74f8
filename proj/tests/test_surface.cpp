#include <set>

#include "doctest.h"
#include "ruledmmp/generator.hpp"
#include "ruledmmp/io.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace ruledmmp;

namespace {

bool has_failure(const VerificationReport& rep, const std::string& name) {
  for (const CheckResult& c : rep.checks)
    if (c.name == name && c.status == CheckStatus::Fail) return true;
  return false;
}

}  // namespace

TEST_CASE("fixtures validate") {
  for (char letter : {'a', 'b', 'c', 'd'}) {
    SurfacePair sp = testsupport::load_fixture(letter);
    VerificationReport rep = validate(sp);
    CHECK_MESSAGE(rep.overall(), "fixture ", letter);
  }
}

TEST_CASE("validate rejects a horizontal class of wrong fiber degree") {
  SurfacePair sp = testsupport::load_fixture('a');
  sp.horizontals[0].cls = DivisorClass(3, 1);  // fiber degree 3
  VerificationReport rep = validate(sp);
  CHECK(!rep.overall());
  CHECK(has_failure(rep, "dh_fiber_degree"));
}

TEST_CASE("validate rejects a broken fiber class sum") {
  SurfacePair sp = testsupport::load_fixture('b');
  sp.fibers[0].components[0].mult = 2;  // 2(F-E1) + E1 != F
  VerificationReport rep = validate(sp);
  CHECK(!rep.overall());
  CHECK(has_failure(rep, "fiber_class_sum"));
}

TEST_CASE("validate cross-checks points against classes") {
  SurfacePair sp = testsupport::load_fixture('b');
  sp.fibers[0].points.pop_back();  // drop one recorded crossing
  for (HorizontalCurve& h : sp.horizontals) {
    std::erase_if(h.marks, [&](const std::string& m) {
      for (const FiberConfig& f : sp.fibers)
        for (const IncidencePoint& p : f.points)
          if (p.id == m) return false;
      return true;
    });
  }
  VerificationReport rep = validate(sp);
  CHECK(!rep.overall());
  CHECK(has_failure(rep, "incidence_lattice"));
}

TEST_CASE("validate rejects triple points and fat branches") {
  SurfacePair sp = testsupport::load_fixture('c');
  SUBCASE("three branches") {
    sp.fibers[0].points[0].branches.push_back({"v1", 1});
    CHECK(has_failure(validate(sp), "snc_points"));
  }
  SUBCASE("branch multiplicity above one") {
    sp.fibers[0].points[0].branches[0].second = 2;
    CHECK(has_failure(validate(sp), "snc_points"));
  }
}

TEST_CASE("minus_one_curves reads the self-intersections") {
  SurfacePair b = testsupport::load_fixture('b');
  CHECK(minus_one_curves(b, "t0") == std::vector<std::string>{"v0", "v1"});

  SurfacePair c = testsupport::load_fixture('c');
  CHECK(minus_one_curves(c, "t0") == std::vector<std::string>{"v2"});

  SurfacePair a = testsupport::load_fixture('a');
  CHECK_THROWS_AS(minus_one_curves(a, "t0"), Error);
}

TEST_CASE("generator rejects out-of-range parameters") {
  CHECK_THROWS_AS(random_instance(7, {.max_blowups = 13}), Error);
  CHECK_THROWS_AS(random_instance(7, {.genus = 4}), Error);
  CHECK_THROWS_AS(random_instance(7, {.e_invariant = -1}), Error);
  CHECK_THROWS_AS(random_instance(7, {.dv_density = 1.5}), Error);
  CHECK_THROWS_AS(random_instance(7, {.whole_fiber_dv_count = 9}), Error);
}

TEST_CASE("seed 0 with no blow-ups gives the plain rational bisection") {
  SurfacePair sp = random_instance(0, {.genus = 0, .e_invariant = 0, .max_blowups = 0});
  CHECK(sp.ctx.num_exceptionals == 0);
  CHECK(sp.horizontals.size() == 1);
  CHECK(sp.horizontals[0].cls == DivisorClass(2, 1));
  CHECK(sp.fibers.empty());
  CHECK(sp.dv_whole_smooth_fibers.empty());
}

TEST_CASE("a single blow-up always yields one fiber with two (-1)-components") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    SurfacePair sp = random_instance(seed, {.genus = 0, .e_invariant = 0, .max_blowups = 1});
    REQUIRE(sp.fibers.size() == 1);
    CHECK(sp.fibers[0].components.size() == 2);
    CHECK(minus_one_curves(sp, sp.fibers[0].label).size() == 2);
  }
}

TEST_CASE("generated instances validate across the parameter grid") {
  std::uint64_t seed = 1;
  for (std::int64_t g : {0, 1, 2, 3})
    for (std::int64_t e : {0, 2, 4})
      for (double density : {0.0, 0.5, 1.0}) {
        GeneratorParams params{g, e, (std::int64_t)(seed % 7), density, (std::int64_t)(seed % 3)};
        SurfacePair sp = random_instance(seed, params);
        CHECK_MESSAGE(validate(sp).overall(), "g=", g, " e=", e, " density=", density);
        ++seed;
      }
}

TEST_CASE("generator is deterministic, byte for byte") {
  GeneratorParams params{1, 1, 5, 0.5, 1};
  SurfacePair x = random_instance(99, params);
  SurfacePair y = random_instance(99, params);
  CHECK(x == y);
  CHECK(serialize_instance(x) == serialize_instance(y));
  SurfacePair z = random_instance(100, params);
  CHECK(serialize_instance(x) != serialize_instance(z));
}

TEST_CASE("every degenerate fiber of a generated instance satisfies the (-1)-dichotomy") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratorParams params{(std::int64_t)(seed % 3), (std::int64_t)(seed % 4),
                           (std::int64_t)(seed % 7), 0.5, 0};
    SurfacePair sp = random_instance(seed, params);
    for (const FiberConfig& f : sp.fibers) {
      if (f.components.size() < 2) continue;
      std::vector<std::string> ones = minus_one_curves(sp, f.label);
      bool ok = ones.size() >= 2;
      if (ones.size() == 1)
        for (const FiberComponent& c : f.components)
          if (c.id == ones.front() && c.mult > 1) ok = true;
      CHECK_MESSAGE(ok, "seed ", seed, " fiber ", f.label);
    }
  }
}

TEST_CASE("incidence data of generated instances matches lattice products") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorParams params{0, (std::int64_t)(seed % 2), (std::int64_t)(3 + seed % 4), 0.5, 0};
    SurfacePair sp = random_instance(seed, params);
    ContractionState st = initial_state(sp);
    std::size_t pairs = 0;
    CHECK(oracle::cross_check_state(st, pairs).empty());
    CHECK(pairs > 0);
  }
}
