#include "annulus/cluster.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace annulus;

namespace {

std::vector<std::string> downstairs(const Seed& s) {
  std::vector<std::string> out;
  for (const auto& [id, l] : lambda_lengths(s)) out.push_back(l.to_string());
  return out;
}

std::vector<std::string> cover(const Seed& s) {
  return {s.variables.at("1^1").to_string(), s.variables.at("2^1").to_string()};
}

}  // namespace

TEST_SUITE("cluster") {

TEST_CASE("c2_double_cover") {
  const DoubleCover dc = double_cover(initial_limit(2));
  const Quiver& q = dc.quiver;
  CHECK(q.vertices.size() == 8);
  CHECK(q.frozen == std::set<Vertex>{"a^1", "a^2", "b^1", "b^2"});
  Quiver mutable_part = induced_subquiver(q, {"1^1", "1^2", "2^1", "2^2"});
  CHECK(mutable_part == Q({{"2^1", "1^2"}, {"1^2", "2^2"}, {"2^2", "1^1"}, {"1^1", "2^1"}}));
  CHECK(dc.involution.at("1^1") == "1^2");
  CHECK(dc.involution.at("2^2") == "2^1");
  CHECK(dc.involution.at("a^1") == "a^2");
  CHECK(relabel(q, dc.involution) == q);
  for (const auto& v : q.vertices) CHECK_FALSE(q.has_loop_or_2cycle_at(v));
}

TEST_CASE("c1_double_cover") {
  const DoubleCover dc = double_cover(initial_limit(1));
  CHECK(dc.quiver.vertices.size() - dc.quiver.frozen.size() == 2);
  CHECK(relabel(dc.quiver, dc.involution) == dc.quiver);
}

TEST_CASE("initial_seed_c2") {
  const Seed s = initial_seed(2);
  CHECK(cover(s) == std::vector<std::string>{"x", "y"});
  CHECK(s.variables.at("a^2").to_string() == "a");
  CHECK(deck_symmetric(s));
  CHECK(downstairs(s) == std::vector<std::string>{"x", "y"});
}

TEST_CASE("first_composite_mutation") {
  const Seed s = composite_mutate(initial_seed(2), "1");
  CHECK(cover(s) == std::vector<std::string>{"2*y/x", "y"});
  CHECK(downstairs(s) == std::vector<std::string>{"y/x", "y"});
  CHECK(s.downstairs.arcs[0].arc == Arc::adic(Boundary::Outer, 0));
  CHECK(lambda_lengths(s).at("1").scale == Rational(1, 2));
}

TEST_CASE("composite_mutation_is_involutive") {
  const Seed s = initial_seed(2);
  CHECK(composite_mutate(composite_mutate(s, "1"), "1") == s);
  CHECK(composite_mutate(composite_mutate(s, "2"), "2") == s);
}

TEST_CASE("composite_order_independence") {
  Seed s = initial_seed(3);
  for (const std::string i : {"1", "2", "3", "2", "1", "3"}) {
    CHECK(composite_mutate(s, i) == composite_mutate(s, i, true));
    s = composite_mutate(s, i);
  }
}

TEST_CASE("six_seed_cycle") {
  const std::vector<std::vector<std::string>> expect{
      {"y/x", "y"},
      {"y/x", "(a+b)/x"},
      {"(a*a+2*a*b+b*b)/y", "(a+b)/x"},
      {"(a*a+2*a*b+b*b)/y", "(a*x+b*x)/y"},
      {"x", "(a*x+b*x)/y"},
      {"x", "y"},
  };
  Seed s = initial_seed(2);
  for (int k = 0; k < 6; ++k) {
    s = composite_mutate(s, k % 2 ? "2" : "1");
    CHECK(downstairs(s) == expect[k]);
    CHECK(deck_symmetric(s));
    CHECK(laurent_property(s));
    CHECK(isomorphic(s.quiver, double_cover(s.downstairs).quiver, true));
  }
  // Back to the initial seed up to the deck relabeling of the frozen sheets.
  CHECK(s.variables == initial_seed(2).variables);
  CHECK(s.downstairs == initial_seed(2).downstairs);
  CHECK(equivalent(s, initial_seed(2)));
}

TEST_CASE("cover_values_are_doubled_for_adic_arcs") {
  Seed s = composite_mutate(composite_mutate(initial_seed(2), "1"), "2");
  CHECK(cover(s) == std::vector<std::string>{"2*y/x", "(2*a+2*b)/x"});
  CHECK(downstairs(s) == std::vector<std::string>{"y/x", "(a+b)/x"});
}

TEST_CASE("tagging") {
  const TaggedDiscTriangulation t = tagged(composite_mutate(initial_seed(2), "1").downstairs);
  CHECK(t.arcs[0].tag == Tag::Notched);
  CHECK(t.arcs[1].tag == Tag::Boundary);
  CHECK(tagged(initial_limit(2)).arcs[0].tag == Tag::Plain);
}

TEST_CASE("exchange_graphs") {
  const ExchangeGraph g2 = exchange_graph(initial_seed(2), 100);
  CHECK(g2.seeds.size() == 6);
  CHECK(g2.edges.size() == 6);
  CHECK(g2.closed);
  std::map<int, int> degree;
  for (const auto& [u, v, i] : g2.edges) {
    ++degree[u];
    ++degree[v];
  }
  for (const auto& [v, d] : degree) CHECK(d == 2);

  const ExchangeGraph g1 = exchange_graph(initial_seed(1), 100);
  CHECK(g1.seeds.size() == 2);
  CHECK(g1.closed);
  for (const auto& s : g1.seeds) CHECK(deck_symmetric(s));

  const ExchangeGraph g0 = exchange_graph(initial_seed(2), 0);
  CHECK(g0.seeds.size() == 1);
  CHECK_FALSE(g0.closed);

  CHECK(error_code([] { exchange_graph(initial_seed(3), 100, 5); }) == "ExplorationBudgetExceeded");
}

TEST_CASE("laurent_property_small_components") {
  for (int p = 1; p <= 3; ++p) {
    const ExchangeGraph g = exchange_graph(initial_seed(p), 1000, 1000);
    CHECK(g.closed);
    for (const auto& s : g.seeds) {
      CHECK(laurent_property(s));
      CHECK(deck_symmetric(s));
    }
  }
}

TEST_CASE("non_commuting_pair") {
  Seed s = initial_seed(2);
  s.quiver.add_arrow("1^1", "1^2");
  CHECK(error_code([&] { composite_mutate(s, "1"); }) == "NonCommutingPair");
  CHECK(error_code([&] { composite_mutate(initial_seed(2), "7"); }) == "UnknownArc");
}

}
