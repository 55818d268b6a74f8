#include "doctest.h"
#include "ruledmmp/generator.hpp"
#include "ruledmmp/goodmodel.hpp"
#include "ruledmmp/io.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace ruledmmp;

TEST_CASE("disjointness from the horizontal boundary is decided by points") {
  SurfacePair b = testsupport::load_fixture('b');
  ContractionState st = initial_state(b);
  CHECK(!is_disjoint_from_dh(st, "v0"));  // the strict fiber carries a boundary mark
  CHECK(!is_disjoint_from_dh(st, "v1"));

  SurfacePair c = testsupport::load_fixture('c');
  ContractionState stc = initial_state(c);
  CHECK(is_disjoint_from_dh(stc, "v2"));
  CHECK(!is_disjoint_from_dh(stc, "v0"));

  SurfacePair a = testsupport::load_fixture('a');
  ContractionState sta = initial_state(a);
  CHECK_THROWS_AS(is_disjoint_from_dh(sta, "v0"), Error);
  CHECK_THROWS_WITH_AS(is_disjoint_from_dh(sta, "h0"), doctest::Contains("horizontal"), Error);
}

TEST_CASE("dh_dv_meet_in_fiber") {
  SurfacePair b = testsupport::load_fixture('b');
  CHECK(dh_dv_meet_in_fiber(initial_state(b), "t0"));
  CHECK_THROWS_AS(dh_dv_meet_in_fiber(initial_state(b), "t9"), Error);

  SurfacePair c = testsupport::load_fixture('c');
  ContractionState st = initial_state(c);
  CHECK(dh_dv_meet_in_fiber(st, "t0"));
  // still true after contracting the exceptional tip: the boundary mark
  // survives on the image of the strict fiber
  st = contract(st, "v2").first;
  CHECK(dh_dv_meet_in_fiber(st, "t0"));

  SurfacePair stripped = testsupport::load_fixture('c');
  for (FiberConfig& f : stripped.fibers)
    for (FiberComponent& comp : f.components) comp.in_dv = false;
  CHECK(!dh_dv_meet_in_fiber(initial_state(stripped), "t0"));
}

TEST_CASE("contracting the strict fiber of fixture B leaves an irreducible fiber") {
  SurfacePair b = testsupport::load_fixture('b');
  auto [st, step] = contract(initial_state(b), "v0", 2, StepRationale::InDvPreferred);
  const LiveFiber* f = st.find_fiber("t0");
  REQUIRE(f->components.size() == 1);
  CHECK(f->components[0].id == "v1");
  CHECK(f->components[0].cls == fiber_class(b.ctx));
  CHECK(f->components[0].mult == 1);
  CHECK(intersect(f->components[0].cls, f->components[0].cls, b.ctx) == 0);
  CHECK(step.contracted_class == DivisorClass(0, 1, {-1}));
  CHECK(step.fiber_label == "t0");

  // the two surviving marks now meet the whole fiber
  CHECK(oracle::incidence_pair(st, "h0", "v1") == 2);
}

TEST_CASE("contracting the tip of fixture C merges the node data") {
  SurfacePair c = testsupport::load_fixture('c');
  auto [st, step] = contract(initial_state(c), "v2", 1, StepRationale::DisjointFromDh);
  const LiveFiber* f = st.find_fiber("t0");
  REQUIRE(f->components.size() == 2);
  CHECK(f->find("v0")->cls == DivisorClass(0, 1, {-1, 0}));
  CHECK(intersect(f->find("v0")->cls, f->find("v0")->cls, c.ctx) == -1);
  CHECK(f->find("v1")->cls == DivisorClass(0, 0, {1, 0}));
  CHECK(intersect(f->find("v1")->cls, f->find("v1")->cls, c.ctx) == -1);

  const LivePoint* merged = st.find_point("m0");
  REQUIRE(merged != nullptr);
  CHECK(merged->pair_mult("v0", "v1") == 1);
  CHECK(intersect(f->find("v0")->cls, f->find("v1")->cls, c.ctx) == 1);
}

TEST_CASE("contract rejects bad targets with distinct codes") {
  SurfacePair c = testsupport::load_fixture('c');
  ContractionState st = initial_state(c);
  CHECK_THROWS_AS(contract(st, "v0"), Error);  // self-intersection -2
  try {
    contract(st, "v0");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_minus_one_curve);
  }
  try {
    contract(st, "h0");
  } catch (const Error& e) {
    CHECK(e.code() == errc::horizontal_component);
  }
  try {
    contract(st, "nope");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unknown_component);
  }
  ContractionState after = contract(st, "v2").first;
  try {
    contract(after, "v2");
  } catch (const Error& e) {
    CHECK(e.code() == errc::dead_component);
  }
}

TEST_CASE("invariants hold after every step of replayed runs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GeneratorParams params{(std::int64_t)(seed % 3), (std::int64_t)(seed % 3),
                           (std::int64_t)(1 + seed % 6), 0.5, 0};
    SurfacePair sp = random_instance(seed, params);
    GoodModelPlan plan = run(sp);
    ContractionState st = initial_state(sp);
    for (const ContractionStep& step : plan.steps) {
      // canonical pairing is -1 against every contracted class
      CHECK(intersect(st.canonical, st.find_component(step.component_id).second->cls, sp.ctx) ==
            -1);
      st = contract(st, step.component_id, step.stage, step.rationale).first;

      // every live class is orthogonal to everything contracted so far
      for (const ContractedCurve& dead : st.contracted) {
        for (const LiveFiber& f : st.fibers)
          for (const LiveComponent& comp : f.components)
            CHECK(intersect(comp.cls, dead.cls, sp.ctx) == 0);
        for (const LiveHorizontal& h : st.horizontals)
          CHECK(intersect(h.cls, dead.cls, sp.ctx) == 0);
      }
      // fibers still sum to the fiber class
      for (const LiveFiber& f : st.fibers) {
        DivisorClass sum = DivisorClass::zero(sp.ctx);
        for (const LiveComponent& comp : f.components) sum += comp.cls.scaled(comp.mult);
        CHECK(sum == fiber_class(sp.ctx));
      }
      // incidence and lattice routes agree
      std::size_t pairs = 0;
      std::string mismatch = oracle::cross_check_state(st, pairs);
      CHECK_MESSAGE(mismatch.empty(), mismatch);
    }
    CHECK(st.step_count == plan.m);
  }
}

TEST_CASE("projected canonical class matches the smaller context when tips come off") {
  // Fixture C contracts the pure exceptional v2 first; dropping the last
  // basis vector of the context must reproduce the projected class.
  SurfacePair c = testsupport::load_fixture('c');
  ContractionState st = contract(initial_state(c), "v2").first;
  DivisorClass smaller = canonical_class({c.ctx.genus, c.ctx.e_invariant, 1});
  CHECK(st.canonical == DivisorClass(smaller.c0(), smaller.f(), {smaller.e(0), 0}));
}

TEST_CASE("merging two boundary marks records a singular image point") {
  // One blow-up away from the plain bisection, at a point of the fiber not
  // on the boundary: the strict fiber then meets the bisection twice, and
  // contracting it merges both marks.
  InstanceBuilder b(0, 0, 1, HorizontalShape::BisectionRational);
  b.blow_up({BlowupCenter::Kind::FreshFiberFree, "", "", "", ""});
  SurfacePair sp = b.finish({false, false}, 0);
  REQUIRE(validate(sp).overall());

  ContractionState st = initial_state(sp);
  std::int64_t dh_dot =
      intersect(st.horizontal_total(), st.find_component("v0").second->cls, sp.ctx);
  REQUIRE(dh_dot == 2);

  ContractionState after = contract(st, "v0").first;
  REQUIRE(after.singular_image_points.size() == 1);
  CHECK(after.singular_image_points[0].horizontal_id == "h0");
  const LivePoint* p = after.find_point(after.singular_image_points[0].point_id);
  REQUIRE(p != nullptr);
  CHECK(p->branches.at("h0") == 2);

  // image class picks up a node: arithmetic genus grows by one
  CHECK(adjunction_genus(after.horizontals[0].cls, sp.ctx) == 1);
  std::size_t pairs = 0;
  CHECK(oracle::cross_check_state(after, pairs).empty());
}

TEST_CASE("replay reproduces byte-identical final states") {
  SurfacePair c = testsupport::load_fixture('c');
  GoodModelPlan plan = run(c);
  ContractionState s1 = replay(c, plan.steps, plan.steps.size());
  ContractionState s2 = replay(c, plan.steps, plan.steps.size());
  CHECK(serialize_state(s1) == serialize_state(s2));
  CHECK(serialize_state(s1) == serialize_state(plan.final_state));

  // tampering with a recorded class is caught
  std::vector<ContractionStep> bad = plan.steps;
  bad[0].contracted_class = DivisorClass(0, 1, {0, 0});
  CHECK_THROWS_AS(replay(c, bad, bad.size()), Error);
}
