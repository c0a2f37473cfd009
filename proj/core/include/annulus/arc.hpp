#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace annulus {

using Lift = std::int64_t;

enum class Boundary { Outer, Inner };

struct AnnulusShape {
  int p = 1;
  int q = 1;

  int period(Boundary b) const { return b == Boundary::Outer ? p : q; }
  auto operator<=>(const AnnulusShape&) const = default;
};

void check_shape(const AnnulusShape& s, bool allow_q0 = false);

struct MarkedPoint {
  Boundary boundary = Boundary::Outer;
  Lift lift = 0;

  auto operator<=>(const MarkedPoint&) const = default;
};

double x_coordinate(const MarkedPoint& m, const AnnulusShape& s);

enum class ArcKind { Bridging, Peripheral, Prufer, Adic };

// Bridging: a = outer lift, b = inner lift (boundary unused, kept at Outer).
// Peripheral: interval [a, b] on boundary.  Prufer/Adic: a = point.
struct Arc {
  ArcKind kind = ArcKind::Bridging;
  Boundary boundary = Boundary::Outer;
  Lift a = 0;
  Lift b = 0;

  static Arc bridging(Lift outer, Lift inner) { return {ArcKind::Bridging, Boundary::Outer, outer, inner}; }
  static Arc peripheral(Boundary bd, Lift a, Lift b) { return {ArcKind::Peripheral, bd, a, b}; }
  static Arc prufer(Boundary bd, Lift m) { return {ArcKind::Prufer, bd, m, 0}; }
  static Arc adic(Boundary bd, Lift m) { return {ArcKind::Adic, bd, m, 0}; }

  bool is_bridging() const { return kind == ArcKind::Bridging; }
  bool is_peripheral() const { return kind == ArcKind::Peripheral; }
  bool is_asymptotic() const { return kind == ArcKind::Prufer || kind == ArcKind::Adic; }
  Lift outer() const { return a; }
  Lift inner() const { return b; }
  Lift point() const { return a; }
  Lift length() const { return b - a; }

  auto operator<=>(const Arc&) const = default;
};

Lift floor_div(Lift a, Lift b);
Lift floor_mod(Lift a, Lift b);

// Signed horizontal offset of the straight lift; invariant under the deck map.
Lift displacement(const Arc& bridging, const AnnulusShape& s);

Arc canonicalize(const Arc& arc, const AnnulusShape& s);
bool is_canonical(const Arc& arc, const AnnulusShape& s);
bool crosses(const Arc& x, const Arc& y, const AnnulusShape& s);

std::string to_string(Boundary b);
std::string to_string(const Arc& arc);

}  // namespace annulus
