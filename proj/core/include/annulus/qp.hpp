#pragma once

#include "annulus/quiver.hpp"
#include "annulus/triangulation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace annulus {

using Rational = boost::multiprecision::cpp_rational;

// Arrow ids in traversal order (head of each arrow is the tail of the next).
using Path = std::vector<std::string>;

struct PathSum {
  std::map<Path, Rational> terms;

  void add(const Path& p, const Rational& c);
  bool empty() const { return terms.empty(); }
  bool operator==(const PathSum&) const = default;
};

constexpr int kDefaultTruncation = 12;

struct Potential {
  std::map<Path, Rational> terms;  // keys are least rotations
  int degree = kDefaultTruncation;

  // Returns false when the term was dropped by truncation.
  bool add(const Path& cycle, const Rational& c);
  bool operator==(const Potential&) const = default;
};

Path least_rotation(const Path& cycle);

struct QPArrow {
  std::string id;
  Vertex from, to;

  bool operator==(const QPArrow&) const = default;
};

struct QP {
  std::vector<Vertex> vertices;
  std::vector<QPArrow> arrows;
  Potential potential;

  const QPArrow& arrow(const std::string& id) const;
  bool has_arrow(const std::string& id) const;
  Quiver quiver() const;
  bool is_reduced() const;
  bool operator==(const QP&) const = default;
};

struct QPReport {
  std::vector<std::string> truncations;
  std::vector<std::pair<std::string, std::string>> non_trivializable;  // arrow id pairs of kept 2-cycles
};

std::string star(const std::string& arrow);
std::string composite(const std::string& out_arrow, const std::string& in_arrow);

// Renders a traversal-order path in right-to-left composition order.
std::string to_composition_string(const Path& p);
std::string to_string(const Potential& w);

bool is_cycle(const QP& qp, const Path& p);

PathSum cyclic_derivative(const Potential& w, const std::string& arrow);
PathSum cyclic_derivative(const QP& qp, const std::string& arrow);
std::map<std::string, PathSum> jacobian_generators(const QP& qp);

QP potential_of(const Triangulation& t);

QP premutate(const QP& qp, const Vertex& k, QPReport* report = nullptr);
QP reduce(const QP& qp, QPReport* report = nullptr);
QP qp_mutate(const QP& qp, const Vertex& k, QPReport* report = nullptr);

// Sorted (length, coefficient) pairs; used to compare potentials up to arrow renaming.
std::vector<std::pair<size_t, std::string>> term_signature(const Potential& w);

}  // namespace annulus
