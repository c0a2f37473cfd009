#include "annulus/json_io.hpp"

#include "annulus/errors.hpp"

#include <set>

namespace annulus {

namespace {

void check_fields(const Json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& what) {
  if (!j.is_object()) raise("MalformedInput", what + " must be a JSON object");
  std::set<std::string> known;
  for (const char* f : required) {
    known.insert(f);
    if (!j.contains(f)) raise("MalformedInput", what + " is missing field '" + f + "'");
  }
  for (const char* f : optional) known.insert(f);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) raise("UnknownField", what + " has unknown field '" + it.key() + "'");
}

template <class T>
T get(const Json& j, const char* field, const std::string& what) {
  try {
    return j.at(field).get<T>();
  } catch (const nlohmann::json::exception&) {
    raise("MalformedInput", what + " field '" + field + "' has the wrong type");
  }
}

Lift get_lift(const Json& j, const char* field) {
  if (!j.at(field).is_number_integer()) raise("MalformedArc", std::string("arc field '") + field + "' must be an integer");
  return j.at(field).get<Lift>();
}

Boundary get_boundary(const Json& j) {
  const auto s = get<std::string>(j, "boundary", "arc");
  if (s == "outer") return Boundary::Outer;
  if (s == "inner") return Boundary::Inner;
  raise("MalformedArc", "unknown boundary '" + s + "'");
}

const Json& array_field(const Json& j, const char* field, const std::string& what) {
  if (!j.at(field).is_array()) raise("MalformedInput", what + " field '" + field + "' must be an array");
  return j.at(field);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise("MalformedJson", e.what());
  }
}

Json to_json(const Arc& a, const std::string& id) {
  Json j;
  j["id"] = id;
  switch (a.kind) {
    case ArcKind::Bridging:
      j["kind"] = "bridging";
      j["outer"] = a.outer();
      j["inner"] = a.inner();
      break;
    case ArcKind::Peripheral:
      j["kind"] = "peripheral";
      j["boundary"] = to_string(a.boundary);
      j["a"] = a.a;
      j["b"] = a.b;
      break;
    case ArcKind::Prufer:
    case ArcKind::Adic:
      j["kind"] = a.kind == ArcKind::Prufer ? "prufer" : "adic";
      j["boundary"] = to_string(a.boundary);
      j["point"] = a.point();
      break;
  }
  return j;
}

LabeledArc labeled_arc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) raise("MalformedArc", "arc needs a 'kind'");
  const auto kind = get<std::string>(j, "kind", "arc");
  LabeledArc la;
  if (kind == "bridging") {
    check_fields(j, {"id", "kind", "outer", "inner"}, {}, "bridging arc");
    la.arc = Arc::bridging(get_lift(j, "outer"), get_lift(j, "inner"));
  } else if (kind == "peripheral") {
    check_fields(j, {"id", "kind", "boundary", "a", "b"}, {}, "peripheral arc");
    la.arc = Arc::peripheral(get_boundary(j), get_lift(j, "a"), get_lift(j, "b"));
  } else if (kind == "prufer" || kind == "adic") {
    check_fields(j, {"id", "kind", "boundary", "point"}, {}, kind + " arc");
    const Boundary b = get_boundary(j);
    la.arc = kind == "prufer" ? Arc::prufer(b, get_lift(j, "point")) : Arc::adic(b, get_lift(j, "point"));
  } else {
    raise("MalformedArc", "unknown arc kind '" + kind + "'");
  }
  la.id = get<std::string>(j, "id", "arc");
  return la;
}

Json to_json(const Triangulation& t) {
  Json j;
  j["p"] = t.shape.p;
  j["q"] = t.shape.q;
  j["arcs"] = Json::array();
  for (const auto& a : t.arcs) j["arcs"].push_back(to_json(a.arc, a.id));
  return j;
}

Triangulation triangulation_from_json(const Json& j) {
  check_fields(j, {"p", "q", "arcs"}, {}, "triangulation");
  const AnnulusShape s{get<int>(j, "p", "triangulation"), get<int>(j, "q", "triangulation")};
  std::vector<LabeledArc> arcs;
  for (const auto& a : array_field(j, "arcs", "triangulation")) arcs.push_back(labeled_arc_from_json(a));
  return make_triangulation(s, arcs);
}

Json to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices;
  j["arrows"] = Json::array();
  for (const auto& u : q.vertices)
    for (const auto& v : q.vertices)
      if (int m = q.mult(u, v)) j["arrows"].push_back({{"from", u}, {"to", v}, {"mult", m}});
  j["framing_pairs"] = Json::array();
  for (const auto& [a, b] : q.framing_pairs) j["framing_pairs"].push_back(Json::array({a, b}));
  j["frozen"] = Json::array();
  for (const auto& v : q.vertices)
    if (q.frozen.count(v)) j["frozen"].push_back(v);
  return j;
}

Quiver quiver_from_json(const Json& j) {
  check_fields(j, {"vertices", "arrows"}, {"framing_pairs", "frozen"}, "quiver");
  Quiver q;
  for (const auto& v : get<std::vector<std::string>>(j, "vertices", "quiver")) {
    if (q.has_vertex(v)) raise("MalformedInput", "duplicate vertex '" + v + "'");
    q.add_vertex(v);
  }
  for (const auto& a : array_field(j, "arrows", "quiver")) {
    check_fields(a, {"from", "to"}, {"mult"}, "arrow");
    const auto from = get<std::string>(a, "from", "arrow"), to = get<std::string>(a, "to", "arrow");
    const int m = a.contains("mult") ? get<int>(a, "mult", "arrow") : 1;
    if (m < 1) raise("MalformedInput", "arrow multiplicity must be positive");
    if (!q.has_vertex(from) || !q.has_vertex(to)) raise("MalformedInput", "arrow " + from + "->" + to + " uses an unknown vertex");
    q.add_arrow(from, to, m);
  }
  if (j.contains("framing_pairs"))
    for (const auto& p : get<std::vector<std::vector<std::string>>>(j, "framing_pairs", "quiver")) {
      if (p.size() != 2) raise("MalformedInput", "framing pair must have two entries");
      q.framing_pairs.push_back({p[0], p[1]});
    }
  if (j.contains("frozen"))
    for (const auto& v : get<std::vector<std::string>>(j, "frozen", "quiver")) {
      if (!q.has_vertex(v)) raise("MalformedInput", "frozen vertex '" + v + "' is unknown");
      q.frozen.insert(v);
    }
  return q;
}

std::string rational_string(const Rational& r) {
  const Integer n = numerator(r), d = denominator(r);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& s) {
  static const auto integer = [](const std::string& t, bool sign) {
    size_t i = sign && !t.empty() && t[0] == '-' ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit((unsigned char)t[i])) return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string n = s.substr(0, slash), d = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!integer(n, true) || !integer(d, false)) raise("MalformedInput", "bad rational '" + s + "'");
  const Integer den(d);
  if (den == 0) raise("MalformedInput", "zero denominator in '" + s + "'");
  return Rational(Integer(n), den);
}

Json to_json(const QP& qp) {
  Json j;
  j["vertices"] = qp.vertices;
  j["arrows"] = Json::array();
  for (const auto& a : qp.arrows) j["arrows"].push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
  j["framing_pairs"] = Json::array();
  j["frozen"] = Json::array();
  j["potential"] = Json::array();
  for (const auto& [cycle, c] : qp.potential.terms)
    j["potential"].push_back({{"cycle", cycle}, {"coeff", rational_string(c)}});
  return j;
}

QP qp_from_json(const Json& j) {
  check_fields(j, {"vertices", "arrows", "potential"}, {"framing_pairs", "frozen", "degree"}, "qp");
  QP qp;
  qp.vertices = get<std::vector<std::string>>(j, "vertices", "qp");
  const std::set<std::string> vs(qp.vertices.begin(), qp.vertices.end());
  if (vs.size() != qp.vertices.size()) raise("MalformedInput", "duplicate vertex in qp");
  std::set<std::string> ids;
  for (const auto& a : array_field(j, "arrows", "qp")) {
    check_fields(a, {"id", "from", "to"}, {}, "qp arrow");
    QPArrow x{get<std::string>(a, "id", "qp arrow"), get<std::string>(a, "from", "qp arrow"),
              get<std::string>(a, "to", "qp arrow")};
    if (!vs.count(x.from) || !vs.count(x.to)) raise("MalformedInput", "qp arrow " + x.id + " uses an unknown vertex");
    if (!ids.insert(x.id).second) raise("MalformedInput", "duplicate arrow id '" + x.id + "'");
    qp.arrows.push_back(x);
  }
  if (j.contains("degree")) qp.potential.degree = get<int>(j, "degree", "qp");
  for (const auto& t : array_field(j, "potential", "qp")) {
    check_fields(t, {"cycle", "coeff"}, {}, "potential term");
    const Path cycle = get<Path>(t, "cycle", "potential term");
    if (!is_cycle(qp, cycle)) raise("MalformedInput", "potential term is not a cycle of the quiver");
    qp.potential.add(cycle, parse_rational(get<std::string>(t, "coeff", "potential term")));
  }
  return qp;
}

Json to_json(const RelationReport& r) {
  Json j;
  j["relation"] = r.relation;
  j["pass"] = r.pass;
  j["m"] = r.m;
  j["r"] = r.r;
  j["s"] = r.s;
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

RelationReport report_from_json(const Json& j) {
  check_fields(j, {"relation", "pass", "m", "r", "s", "witness"}, {}, "report");
  RelationReport r;
  r.relation = get<std::string>(j, "relation", "report");
  r.pass = get<bool>(j, "pass", "report");
  r.m = get<int>(j, "m", "report");
  r.r = get<int>(j, "r", "report");
  r.s = get<int>(j, "s", "report");
  if (!j.at("witness").is_null()) r.witness = get<std::string>(j, "witness", "report");
  return r;
}

Json to_json(const LimitTriangulation& t) {
  Json j;
  j["p"] = t.p;
  j["arcs"] = Json::array();
  for (const auto& a : t.arcs) j["arcs"].push_back(to_json(a.arc, a.id));
  return j;
}

LimitTriangulation limit_from_json(const Json& j) {
  check_fields(j, {"p", "arcs"}, {}, "limit triangulation");
  std::vector<LabeledArc> arcs;
  for (const auto& a : array_field(j, "arcs", "limit triangulation")) arcs.push_back(labeled_arc_from_json(a));
  return make_limit(get<int>(j, "p", "limit triangulation"), arcs);
}

Json to_json(const Seed& s) {
  Json j = to_json(s.quiver);
  j["variables"] = Json::object();
  for (const auto& v : s.quiver.vertices) j["variables"][v] = s.variables.at(v).to_string();
  j["downstairs"] = to_json(s.downstairs);
  Json lam = Json::object();
  for (const auto& [id, l] : lambda_lengths(s)) lam[id] = l.to_string();
  j["lambda_lengths"] = lam;
  return j;
}

Seed seed_from_json(const Json& j) {
  check_fields(j, {"vertices", "arrows", "variables", "downstairs"}, {"framing_pairs", "frozen", "lambda_lengths"},
               "seed");
  Seed s;
  Json qj = Json::object();
  for (const char* f : {"vertices", "arrows", "framing_pairs", "frozen"})
    if (j.contains(f)) qj[f] = j[f];
  s.quiver = quiver_from_json(qj);
  s.downstairs = limit_from_json(j.at("downstairs"));
  const Json& vars = j.at("variables");
  if (!vars.is_object()) raise("MalformedInput", "seed variables must be an object");
  for (auto it = vars.begin(); it != vars.end(); ++it) {
    if (!s.quiver.has_vertex(it.key())) raise("UnknownField", "variable for unknown vertex '" + it.key() + "'");
    if (!it.value().is_string()) raise("MalformedLaurent", "variable must be a string");
    s.variables[it.key()] = Laurent::parse(it.value().get<std::string>());
  }
  for (const auto& v : s.quiver.vertices)
    if (!s.variables.count(v)) raise("MalformedInput", "missing variable for vertex '" + v + "'");
  return s;
}

Json to_json(const ExchangeGraph& g) {
  Json j;
  j["closed"] = g.closed;
  j["size"] = g.seeds.size();
  j["seeds"] = Json::array();
  for (const auto& s : g.seeds) j["seeds"].push_back(to_json(s));
  j["edges"] = Json::array();
  for (const auto& [u, v, i] : g.edges) j["edges"].push_back({{"from", u}, {"to", v}, {"index", i}});
  return j;
}

}  // namespace annulus
