#pragma once

#include "annulus/cluster.hpp"
#include "annulus/qp.hpp"
#include "annulus/quiver.hpp"
#include "annulus/transforms.hpp"
#include "annulus/triangulation.hpp"

#include <json.hpp>

#include <string>

namespace annulus {

using Json = nlohmann::ordered_json;

// Parses text; throws MalformedJson.
Json parse_json(const std::string& text);

Json to_json(const Arc& a, const std::string& id);
LabeledArc labeled_arc_from_json(const Json& j);

Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

std::string rational_string(const Rational& r);
Rational parse_rational(const std::string& s);

Json to_json(const QP& qp);
QP qp_from_json(const Json& j);

Json to_json(const RelationReport& r);
RelationReport report_from_json(const Json& j);

Json to_json(const LimitTriangulation& t);
LimitTriangulation limit_from_json(const Json& j);

Json to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json to_json(const ExchangeGraph& g);

}  // namespace annulus
