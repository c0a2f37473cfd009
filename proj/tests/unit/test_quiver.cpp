#include "annulus/enumerate.hpp"
#include "annulus/quiver.hpp"
#include "annulus/tquiver.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace annulus;

TEST_SUITE("quiver") {

TEST_CASE("c22_quiver_golden") {
  const Quiver q = numbered(quiver_of(fixtures::triangulation("c22_golden.json")));
  CHECK(q == Q({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"4", "2"}}));
}

TEST_CASE("kronecker_from_c11") {
  const Triangulation t = make_triangulation({1, 1}, label({Arc::bridging(0, 0), Arc::bridging(0, 1)}));
  const Quiver q = quiver_of(t);
  CHECK(q.arrow_count() == 2);
  CHECK((q.mult("d1", "d2") == 2 || q.mult("d2", "d1") == 2));
}

TEST_CASE("all_prufer_quiver_two_cycles") {
  std::vector<LabeledArc> arcs;
  for (int m = 0; m < 3; ++m) arcs.push_back({"o" + std::to_string(m), Arc::prufer(Boundary::Outer, m)});
  for (int m = 0; m < 2; ++m) arcs.push_back({"i" + std::to_string(m), Arc::prufer(Boundary::Inner, m)});
  const Quiver q = quiver_of(make_triangulation({3, 2}, arcs));
  const auto comps = weak_components(q);
  REQUIRE(comps.size() == 2);
  CHECK(q == Q({{"o1", "o0"}, {"o2", "o1"}, {"o0", "o2"}, {"i1", "i0"}, {"i0", "i1"}}));
}

TEST_CASE("all_prufer_orientations_are_opposite_in_the_cover") {
  // Outer points sit at x = m q, inner ones at x = -m p: arrows m+1 -> m run left on the outer
  // boundary and right on the inner one.
  std::vector<LabeledArc> arcs;
  for (int m = 0; m < 3; ++m) arcs.push_back({"o" + std::to_string(m), Arc::prufer(Boundary::Outer, m)});
  for (int m = 0; m < 3; ++m) arcs.push_back({"i" + std::to_string(m), Arc::prufer(Boundary::Inner, m)});
  const Quiver q = quiver_of(make_triangulation({3, 3}, arcs));
  CHECK(q == Q({{"o1", "o0"}, {"o2", "o1"}, {"o0", "o2"}, {"i1", "i0"}, {"i2", "i1"}, {"i0", "i2"}}));
}

TEST_CASE("asymptotic_quivers_have_two_components") {
  for (const auto& s : std::vector<AnnulusShape>{{1, 1}, {2, 1}, {2, 2}, {3, 2}})
    for (const auto& t : enumerate_triangulations(s, TriangulationKind::Asymptotic))
      CHECK(weak_components(quiver_of(t)).size() == 2);
}

TEST_CASE("mutation_golden") {
  const Quiver q = fixtures::quiver("mutation_example.json");
  CHECK(mutate(q, "3") == Q({{"1", "2"}, {"2", "3"}, {"3", "4"}}));
}

TEST_CASE("mutation_involution_on_c22") {
  const Quiver q = quiver_of(fixtures::triangulation("c22_golden.json"));
  for (const auto& v : q.vertices) CHECK(mutate(mutate(q, v), v) == q);
}

TEST_CASE("mutation_kronecker") {
  Quiver k = Q({{"1", "2"}});
  k.add_arrow("1", "2");
  Quiver expect = Q({{"2", "1"}});
  expect.add_arrow("2", "1");
  CHECK(mutate(k, "1") == expect);
}

TEST_CASE("mutation_refusals") {
  Quiver loop = Q({{"1", "1"}, {"1", "2"}});
  CHECK(error_code([&] { mutate(loop, "1"); }) == "NotMutable");
  Quiver two = Q({{"1", "2"}, {"2", "1"}});
  CHECK(error_code([&] { mutate(two, "2"); }) == "NotMutable");
  Quiver fr = Q({{"1", "2"}});
  fr.frozen.insert("2");
  CHECK(error_code([&] { mutate(fr, "2"); }) == "NotMutable");
  Quiver fp = Q({{"1_L", "2"}, {"2", "1_R"}});
  fp.framing_pairs.push_back({"1_L", "1_R"});
  CHECK(error_code([&] { mutate(fp, "1_L"); }) == "NotMutable");
  CHECK(error_code([&] { mutate(fr, "9"); }) == "UnknownVertex");
}

TEST_CASE("admissible_orderings") {
  const Quiver c33 = quiver_of(fixtures::triangulation("c33_cox.json"));
  CHECK(is_admissible(numbered(c33), {"2", "3", "1", "6", "4", "5"}));
  const auto ord = admissible_ordering(c33);
  REQUIRE(ord);
  CHECK(is_admissible(c33, *ord));
  CHECK_FALSE(admissible_ordering(Q({{"1", "2"}, {"2", "3"}, {"3", "1"}})));
  CHECK(*admissible_ordering(Q({}, {"v"})) == std::vector<Vertex>{"v"});
  CHECK_FALSE(is_admissible(Q({{"1", "2"}}), {"2", "1"}));
}

TEST_CASE("lattice_forms") {
  const Quiver q = Q({{"1", "2"}});
  CHECK(euler_form(q, unit_vector(q, "1"), unit_vector(q, "2")) == -1);
  CHECK(euler_form(q, unit_vector(q, "2"), unit_vector(q, "1")) == 0);
  CHECK(sym_form(q, unit_vector(q, "1"), unit_vector(q, "1")) == 2);
  // [2, 1] is source-admissible for 2 => 1.
  Quiver k = Q({{"2", "1"}});
  k.add_arrow("2", "1");
  CHECK(coxeter_vector(k, {"2", "1"}, unit_vector(k, "1")) == DimensionVector{3, 2});
  CHECK(coxeter_vector(k, {"2", "1"}, unit_vector(k, "2")) == DimensionVector{-2, -1});
  CHECK(error_code([] { reflection(Q({{"1", "1"}}), "1", {1}); }) == "LoopAtVertex");
  CHECK(error_code([] { coxeter_vector(Q({{"1", "2"}}), {"2", "1"}, {1, 0}); }) == "NoAdmissibleOrdering");
}

TEST_CASE("coxeter_vector_ordering_independent") {
  const Quiver q = Q({{"1", "2"}, {"1", "3"}, {"3", "4"}, {"2", "4"}, {"5", "4"}});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    DimensionVector x(5);
    for (auto& c : x) c = d(rng);
    const auto all = all_admissible_orderings(q);
    REQUIRE(all.size() > 1);
    for (const auto& o : all) CHECK(coxeter_vector(q, o, x) == coxeter_vector(q, all.front(), x));
  }
}

TEST_CASE("isomorphism") {
  const Quiver a = Q({{"1", "2"}, {"2", "3"}});
  const Quiver b = Q({{"z", "x"}, {"y", "z"}});
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso);
  CHECK(relabel(a, *iso) == b);
  CHECK_FALSE(isomorphic(a, Q({{"1", "2"}, {"3", "2"}})));
}

}
