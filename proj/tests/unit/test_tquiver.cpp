#include "annulus/quiver.hpp"
#include "annulus/tquiver.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace annulus;

namespace {

Quiver framed(const Arrows& a) {
  Quiver q = Q(a);
  q.framing_pairs.push_back({"1_L", "1_R"});
  return q;
}

}  // namespace

TEST_SUITE("framed") {

TEST_CASE("three_prufer_frame_quiver") {
  const Triangulation t = fixtures::triangulation("three_prufer.json");
  const Quiver q = framed_quiver(t, "1");
  CHECK(q == framed({{"2", "1_L"}, {"3", "2"}, {"1_R", "3"}}));
  CHECK(q.framing_pairs == std::vector<std::pair<Vertex, Vertex>>{{"1_L", "1_R"}});
}

TEST_CASE("sigma2_and_sigma3_sigma2") {
  const Quiver q = framed_quiver(fixtures::triangulation("three_prufer.json"), "1");
  const Quiver s2 = mutate(q, "2");
  CHECK(s2 == framed({{"1_L", "2"}, {"2", "3"}, {"3", "1_L"}, {"1_R", "3"}}));
  const Quiver s32 = mutate(s2, "3");
  CHECK(s32 == framed({{"3", "2"}, {"3", "1_R"}, {"1_L", "3"}, {"1_R", "1_L"}}));
  CHECK(mutate(s32, "3") == s2);
}

TEST_CASE("framed_flip_commutes_with_mutation") {
  const Triangulation t = fixtures::triangulation("three_prufer.json");
  for (const std::string a : {"2", "3"}) {
    CHECK(framed_quiver(flip(t, a), "1") == mutate(framed_quiver(t, "1"), a));
    const Triangulation u = flip(t, a);
    for (const std::string b : {"2", "3"}) {
      if (b == a || !u.arc(b).is_asymptotic()) continue;
      CHECK(framed_quiver(flip(u, b), "1") == mutate(framed_quiver(u, "1"), b));
    }
  }
}

TEST_CASE("switch_frame_roundtrip") {
  const Quiver q = framed_quiver(fixtures::triangulation("three_prufer.json"), "1");
  const Quiver s = switch_frame(q, "2");
  Quiver expect = Q({{"2_R", "1"}, {"3", "2_L"}, {"1", "3"}});
  expect.framing_pairs.push_back({"2_L", "2_R"});
  CHECK(s == expect);
  CHECK(s == framed_quiver(fixtures::triangulation("three_prufer.json"), "2"));
  CHECK(switch_frame(s, "1") == q);
}

TEST_CASE("single_asymptotic_arc_cannot_switch") {
  const Triangulation t = make_triangulation(
      {3, 1}, {{"1", Arc::prufer(Boundary::Outer, 0)}, {"2", Arc::peripheral(Boundary::Outer, 0, 2)},
               {"3", Arc::peripheral(Boundary::Outer, 0, 3)}, {"e", Arc::prufer(Boundary::Inner, 0)}});
  const Quiver q = framed_quiver(t, "1");
  CHECK(q.framing_pairs.size() == 1);
  for (const auto& [k, m] : q.arrows) CHECK((k.first != "1_L" || k.second != "1_R"));
  CHECK(error_code([&] { switch_frame(q, "2"); }) == "NoOtherStrictAsymptoticArc");
  CHECK(error_code([&] { framed_quiver(t, "2"); }) == "NotStrictlyAsymptotic");
  CHECK(error_code([&] { framed_quiver(t, "zz"); }) == "UnknownArc");
}

}
