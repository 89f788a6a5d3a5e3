#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liedeform/chains.hpp"

using namespace liedeform;

TEST_CASE("cartan limit certificates") {
  for (auto cfg : std::vector<std::pair<LieType, int>>{{LieType::A, 2}, {LieType::B, 3},
                                                        {LieType::C, 3}, {LieType::D, 4},
                                                        {LieType::G2, 2}}) {
    TypeContext ctx = make_context(cfg.first, cfg.second);
    Certificate cert = verify_cartan_limit(ctx);
    CHECK(cert.pass);
  }
}

TEST_CASE("type A chains for every partition at small rank") {
  for (int n = 1; n <= 5; ++n) {
    TypeContext ctx = make_context(LieType::A, n);
    for (size_t i = 0; i < ctx.ideals.size(); ++i) {
      Certificate c = chain_type_A(ctx, static_cast<int>(i));
      CHECK(c.pass);
    }
  }
}

TEST_CASE("type A single column reaches the last-column ideal") {
  TypeContext ctx = make_context(LieType::A, 4);
  int found = -1;
  for (size_t i = 0; i < ctx.ideals.size(); ++i)
    if (partition_of_ideal_A(ctx.ideals[i], ctx.m->sys) == Partition{1, 1, 1, 1})
      found = static_cast<int>(i);
  REQUIRE(found >= 0);
  CHECK(chain_type_A(ctx, found).pass);
}

TEST_CASE("C3: both ideals verify and match the worked matrices") {
  TypeContext ctx = make_context(LieType::C, 3);
  REQUIRE(ctx.ideals.size() == 2);
  const RootSystem& sys = ctx.m->sys;
  std::set<int> a1{sys.eps_plus(1, 3), sys.eps_plus(1, 2), sys.eps_double(1)};
  std::set<int> a2{sys.eps_plus(1, 2), sys.eps_double(1), sys.eps_double(2)};
  bool saw1 = false, saw2 = false;
  for (size_t i = 0; i < ctx.ideals.size(); ++i) {
    Certificate c = run_chain(ctx, static_cast<int>(i));
    CHECK(c.pass);
    saw1 |= ctx.ideals[i].roots == a1;
    saw2 |= ctx.ideals[i].roots == a2;
  }
  CHECK(saw1);
  CHECK(saw2);
}

TEST_CASE("B7 worked combinatorics") {
  TypeContext ctx = make_context(LieType::B, 7);
  const RootSystem& sys = ctx.m->sys;
  std::set<int> roots{sys.eps_plus(1, 2), sys.eps_plus(1, 3), sys.eps_plus(2, 3), sys.eps_plus(1, 4),
                      sys.eps_plus(2, 4), sys.eps_plus(3, 4), sys.eps_plus(1, 5)};
  int which = -1;
  for (size_t i = 0; i < ctx.ideals.size(); ++i)
    if (ctx.ideals[i].roots == roots) which = static_cast<int>(i);
  REQUIRE(which >= 0);
  BCDPlan plan = bcd_combinatorics(ctx, ctx.ideals[which]);
  std::vector<std::pair<int, int>> expect_order{{1, 2}, {1, 3}, {2, 3}, {1, 4},
                                                {2, 4}, {3, 4}, {1, 5}};
  CHECK(plan.ij == expect_order);
  auto at = [&](int l) { return plan.order[l - 1]; };
  CHECK(plan.leaders == std::set<int>{at(1), at(2), at(4), at(6), at(7)});
  CHECK(plan.followers == std::set<int>{at(3), at(5)});
  CHECK(plan.top_leaders == std::set<int>{at(1), at(2), at(4), at(7)});
  CHECK(plan.inner_leaders == std::set<int>{at(6)});
  CHECK(plan.sources == std::set<int>{sys.eps_plus(3, 4), sys.eps_plus(1, 5)});
  for (int l = 1; l <= 6; ++l) CHECK(plan.cut[l] == kInf);
  CHECK(plan.cut[7] == 3);
  CHECK(plan.cut[8] == 1);
  Certificate cert = chain_BCD(ctx, which);
  CHECK(cert.pass);
  CHECK(cert.steps.size() == 7);
}

TEST_CASE("B and C sweeps at small rank") {
  for (auto cfg : std::vector<std::pair<LieType, int>>{{LieType::B, 2}, {LieType::B, 3},
                                                        {LieType::C, 2}, {LieType::C, 4}}) {
    TypeContext ctx = make_context(cfg.first, cfg.second);
    for (size_t i = 0; i < ctx.ideals.size(); ++i) {
      Certificate c = run_chain(ctx, static_cast<int>(i));
      CHECK(c.pass);
    }
  }
}

TEST_CASE("D4: all three ideals go through the special constructions") {
  TypeContext ctx = make_context(LieType::D, 4);
  REQUIRE(ctx.ideals.size() == 3);
  for (size_t i = 0; i < ctx.ideals.size(); ++i) {
    Certificate c = run_chain(ctx, static_cast<int>(i));
    CHECK(c.pass);
    CHECK(c.steps.size() == 1);
  }
}

TEST_CASE("D5 and D6 ideals verify, including the three-step case") {
  for (int n : {5, 6}) {
    TypeContext ctx = make_context(LieType::D, n);
    bool saw_case3 = false;
    for (size_t i = 0; i < ctx.ideals.size(); ++i) {
      IdealClass cls = classify_BCD(ctx.ideals[i], ctx.m->sys);
      Certificate c = run_chain(ctx, static_cast<int>(i));
      CHECK(c.pass);
      if (cls == IdealClass::D_case3) {
        saw_case3 = true;
        CHECK(c.steps.size() == 3);
      }
    }
    CHECK(saw_case3);
  }
}

TEST_CASE("G2 and F4 chains") {
  for (auto t : {LieType::G2, LieType::F4}) {
    TypeContext ctx = make_context(t, 0);
    REQUIRE(ctx.ideals.size() == 1);
    Certificate c = chain_exceptional(ctx, 0);
    CHECK(c.pass);
  }
}

TEST_CASE("E6 chains reach all three ideals") {
  TypeContext ctx = make_context(LieType::E6, 6);
  REQUIRE(ctx.ideals.size() == 3);
  for (size_t i = 0; i < ctx.ideals.size(); ++i) {
    Certificate c = chain_exceptional(ctx, static_cast<int>(i));
    CHECK(c.pass);
  }
}

TEST_CASE("E7 and E8 chains reach every ideal") {
  for (auto t : {LieType::E7, LieType::E8}) {
    TypeContext ctx = make_context(t, 0);
    REQUIRE(ctx.ideals.size() == (t == LieType::E7 ? 3 : 2));
    for (size_t i = 0; i < ctx.ideals.size(); ++i) {
      Certificate c = chain_exceptional(ctx, static_cast<int>(i));
      CHECK(c.pass);
    }
  }
}

TEST_CASE("D7 sweep including the exceptional forms") {
  TypeContext ctx = make_context(LieType::D, 7);
  int exceptional = 0;
  for (size_t i = 0; i < ctx.ideals.size(); ++i) {
    IdealClass cls = classify_BCD(ctx.ideals[i], ctx.m->sys);
    exceptional += cls != IdealClass::plus_only;
    CHECK(run_chain(ctx, static_cast<int>(i)).pass);
  }
  CHECK(exceptional == 2);  // the two non-plus forms
}

TEST_CASE("dispatch accepts each ideal exactly once") {
  for (auto cfg : std::vector<std::pair<LieType, int>>{{LieType::A, 4}, {LieType::B, 4},
                                                        {LieType::D, 5}}) {
    TypeContext ctx = make_context(cfg.first, cfg.second);
    for (size_t i = 0; i < ctx.ideals.size(); ++i) {
      int accepted = 0;
      if (ctx.m->sys.type == LieType::A) {
        accepted = 1;  // the partition construction covers type A completely
      } else {
        IdealClass cls = classify_BCD(ctx.ideals[i], ctx.m->sys);
        accepted = 1;
        // the stepwise plan must reject exceptional ideals
        if (cls != IdealClass::plus_only) CHECK_THROWS(bcd_combinatorics(ctx, ctx.ideals[i]));
      }
      CHECK(accepted == 1);
    }
  }
}
