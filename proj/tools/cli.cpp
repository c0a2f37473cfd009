#include "cli.hpp"

#include "service.hpp"

#include "annulus/cluster.hpp"
#include "annulus/enumerate.hpp"
#include "annulus/errors.hpp"
#include "annulus/json_io.hpp"
#include "annulus/limits.hpp"
#include "annulus/qp.hpp"
#include "annulus/tquiver.hpp"
#include "annulus/transforms.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

namespace annulus::cli {

namespace {

const std::vector<std::string> kRelations{"flip_dehn_commute", "cox_m_eq_dehn_rs_reduced", "cox_m_eq_dehn_rs"};

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) raise("MalformedInput", "cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) { return parse_json(read_input(path)); }
Triangulation read_triangulation(const std::string& path) { return triangulation_from_json(read_json(path)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

AnnulusShape parse_shape(const std::string& s) {
  const auto parts = split(s, ',');
  try {
    size_t used = 0;
    if (parts.size() == 2) {
      const int p = std::stoi(parts[0], &used);
      if (used == parts[0].size()) {
        const int q = std::stoi(parts[1], &used);
        if (used == parts[1].size()) {
          check_shape({p, q});
          return {p, q};
        }
      }
    }
  } catch (const std::logic_error&) {
  }
  raise("MalformedInput", "shape must be p,q with positive integers, got '" + s + "'");
}

std::vector<std::string> parse_relations(const std::string& s) {
  if (s == "all") return kRelations;
  auto out = split(s, ',');
  for (const auto& r : out)
    if (std::find(kRelations.begin(), kRelations.end(), r) == kRelations.end())
      raise("MalformedInput", "unknown relation '" + r + "'");
  return out;
}

RelationReport check_relation(const std::string& name, const Triangulation& t) {
  if (name == "flip_dehn_commute") return check_flip_dehn(t);
  if (name == "cox_m_eq_dehn_rs_reduced") return check_cox_dehn_reduced(t);
  return check_cox_dehn(t);
}

struct VerifyOptions {
  std::string shape;
  std::string relations = "all";
  size_t budget = 10000;
  unsigned long long seed = 0;
  int random = 0;
};

int verify(const VerifyOptions& o, std::ostream& out) {
  const AnnulusShape s = parse_shape(o.shape);
  const auto relations = parse_relations(o.relations);
  if (s.p + s.q > 10) raise("TooLarge", "verification guard p+q <= 10");
  std::vector<Triangulation> instances = enumerate_triangulations(s, TriangulationKind::Finite);
  const size_t enumerated = instances.size();
  std::mt19937_64 rng(o.seed);
  if (instances.size() > o.budget) {
    std::vector<size_t> idx(instances.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(o.budget);
    std::sort(idx.begin(), idx.end());
    std::vector<Triangulation> kept;
    for (size_t i : idx) kept.push_back(instances[i]);
    instances = std::move(kept);
  }
  for (int k = 0; k < o.random; ++k) instances.push_back(random_triangulation(s, rng));

  Json rows = Json::array();
  std::map<std::string, std::pair<int, int>> tally;
  int failed = 0;
  for (size_t i = 0; i < instances.size(); ++i)
    for (const auto& r : relations) {
      const RelationReport rep = check_relation(r, instances[i]);
      Json row{{"instance", i}, {"triangulation", to_string(instances[i])}};
      const Json fields = to_json(rep);
      for (const auto& [k, v] : fields.items()) row[k] = v;
      rows.push_back(row);
      (rep.pass ? tally[r].first : tally[r].second)++;
      if (!rep.pass) ++failed;
    }
  Json summary = Json::object();
  for (const auto& r : relations) summary[r] = {{"pass", tally[r].first}, {"fail", tally[r].second}};
  out << Json{{"shape", {s.p, s.q}},
              {"relations", relations},
              {"budget", o.budget},
              {"seed", o.seed},
              {"enumerated", enumerated},
              {"instances", instances.size()},
              {"pass", failed == 0},
              {"summary", summary},
              {"rows", rows}}
             .dump(2)
      << '\n';
  return failed ? 1 : 0;
}

Json contract(const std::string& input, int algorithm, const std::string& shape_file, const std::string& order) {
  const Json j = read_json(input);
  std::pair<Quiver, Quiver> r;
  if (j.is_object() && j.contains("arcs")) {
    const Triangulation t = triangulation_from_json(j);
    r = algorithm == 1 ? contract_paths(cyclic_view_of(t))
                       : contract_with_shape(quiver_of(t), shape_of(t), bridging_cyclic_order(t));
  } else {
    const Quiver q = quiver_from_json(j);
    std::optional<std::vector<Vertex>> cyclic;
    if (!order.empty()) cyclic = split(order, ',');
    if (algorithm == 1) {
      r = contract_paths({q, cyclic.value_or(q.vertices)});
    } else {
      if (shape_file.empty()) raise("MalformedInput", "algorithm 2 on a quiver needs --shape");
      r = contract_with_shape(q, quiver_from_json(read_json(shape_file)), cyclic);
    }
  }
  return Json{{"outer", to_json(r.first)}, {"inner", to_json(r.second)}};
}

Json qp_mutate_command(const std::string& input, const std::string& vertex, bool with_report) {
  const Json j = read_json(input);
  const QP qp = j.is_object() && j.contains("arcs") ? potential_of(triangulation_from_json(j)) : qp_from_json(j);
  QPReport rep;
  const QP m = qp_mutate(qp, vertex, &rep);
  if (!with_report) return to_json(m);
  Json kept = Json::array();
  for (const auto& [a, b] : rep.non_trivializable) kept.push_back({a, b});
  return Json{{"qp", to_json(m)}, {"report", {{"truncations", rep.truncations}, {"non_trivializable", kept}}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Annulus triangulations, quivers and cluster covers"};
  app.require_subcommand(1);
  std::function<int()> action;
  auto emit = [&](const Json& j) {
    out << j.dump(2) << '\n';
    return 0;
  };

  std::string input, arc, framed, direction = "plus", via = "dehn", vertex, shape_file, order;
  int n = 1, algorithm = 1;
  bool report = false;

  auto* quiver = app.add_subcommand("quiver", "Quiver of a triangulation");
  quiver->add_option("input", input, "Triangulation JSON file or -")->required();
  quiver->add_option("--framed", framed, "Framing arc id for the framed quiver");
  quiver->callback([&] {
    action = [&] {
      const Triangulation t = read_triangulation(input);
      return emit(to_json(framed.empty() ? quiver_of(t) : framed_quiver(t, framed)));
    };
  });

  auto* flip_cmd = app.add_subcommand("flip", "Flip one arc");
  flip_cmd->add_option("input", input)->required();
  flip_cmd->add_option("arc_id", arc)->required();
  flip_cmd->callback([&] { action = [&] { return emit(to_json(flip(read_triangulation(input), arc))); }; });

  auto* cox = app.add_subcommand("cox", "Apply the Coxeter transformation n times");
  cox->add_option("input", input)->required();
  cox->add_option("--n", n, "Power")->check(CLI::NonNegativeNumber);
  cox->callback([&] { action = [&] { return emit(to_json(coxeter_power(read_triangulation(input), n))); }; });

  auto* dehn = app.add_subcommand("dehn", "Apply a Dehn twist n times");
  dehn->add_option("input", input)->required();
  dehn->add_option("--direction", direction, "plus or minus");
  dehn->add_option("--n", n, "Number of twists")->check(CLI::NonNegativeNumber);
  dehn->callback([&] {
    action = [&] { return emit(to_json(dehn_twist(read_triangulation(input), parse_direction(direction), n))); };
  });

  auto* limit = app.add_subcommand("limit", "Asymptotic limit of Dehn twists or Coxeter powers");
  limit->add_option("input", input)->required();
  limit->add_option("--direction", direction, "plus or minus");
  limit->add_option("--via", via, "dehn or cox")->check(CLI::IsMember({"dehn", "cox"}));
  limit->callback([&] {
    action = [&] {
      const Triangulation t = read_triangulation(input);
      const Direction d = parse_direction(direction);
      if (via == "cox" && d == Direction::Minus) raise("MalformedInput", "the Coxeter limit is taken in the plus direction");
      return emit(to_json(via == "cox" ? cox_limit(t) : dehn_limit(t, d)));
    };
  });

  auto* contract_cmd = app.add_subcommand("contract", "Contract a bridging quiver into its two limit components");
  contract_cmd->add_option("input", input, "Triangulation or quiver JSON")->required();
  contract_cmd->add_option("--algorithm", algorithm, "1 (cycle view) or 2 (shape)")->check(CLI::IsMember({1, 2}));
  contract_cmd->add_option("--shape", shape_file, "Shape quiver JSON for algorithm 2");
  contract_cmd->add_option("--order", order, "Cyclic order of the cycle vertices, comma separated");
  contract_cmd->callback([&] { action = [&] { return emit(contract(input, algorithm, shape_file, order)); }; });

  auto* qpm = app.add_subcommand("qp-mutate", "Mutate a quiver with potential");
  qpm->add_option("input", input, "QP or triangulation JSON")->required();
  qpm->add_option("vertex", vertex)->required();
  qpm->add_flag("--report", report, "Include truncations and kept 2-cycles");
  qpm->callback([&] { action = [&] { return emit(qp_mutate_command(input, vertex, report)); }; });

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "Check the commutativity relations over enumerated triangulations");
  ver->add_option("--shape", vo.shape, "p,q")->required();
  ver->add_option("--relations", vo.relations, "all or a comma separated list");
  ver->add_option("--budget", vo.budget, "Maximum number of enumerated instances");
  ver->add_option("--seed", vo.seed, "Sampling seed");
  ver->add_option("--random", vo.random, "Extra random instances")->check(CLI::NonNegativeNumber);
  ver->callback([&] { action = [&] { return verify(vo, out); }; });

  int p = 2, depth = 100;
  size_t budget = kExchangeBudget;
  auto* ex = app.add_subcommand("exchange", "Exchange graph of the cluster cover component");
  ex->add_option("--p,--shape", p, "Period of the limit component")->check(CLI::PositiveNumber);
  ex->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  ex->add_option("--budget", budget);
  ex->callback([&] { action = [&] { return emit(to_json(exchange_graph(initial_seed(p), depth, budget))); }; });

  service::ServeOptions so;
  std::optional<int> port;
  std::string static_dir, snapshot_dir;
  auto* srv = app.add_subcommand("serve", "Serve the HTTP API");
  srv->add_option("--port", port, "Port (default ANNULUS_COX_PORT or 8080)");
  srv->add_option("--host", so.host);
  srv->add_option("--static", static_dir, "Directory of static assets to mount at /");
  srv->add_option("--snapshot", snapshot_dir, "Directory for session history snapshots");
  srv->callback([&] {
    action = [&] {
      so.port = service::resolve_port(port, std::getenv("ANNULUS_COX_PORT"));
      if (!static_dir.empty()) so.static_dir = static_dir;
      if (!snapshot_dir.empty()) so.snapshot_dir = snapshot_dir;
      err << "listening on http://" << so.host << ':' << so.port << std::endl;
      service::serve(so);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << service::error_json("MalformedInput", e.what()).dump() << '\n';
    return 2;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << service::error_json(e.code(), e.what()).dump() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << service::error_json("InternalError", e.what()).dump() << '\n';
    return 3;
  }
}

}  // namespace annulus::cli
