#include "annulus/arc.hpp"

#include "annulus/errors.hpp"

#include <sstream>

namespace annulus {

void check_shape(const AnnulusShape& s, bool allow_q0) {
  if (s.p < 1) raise("MalformedArc", "p must be positive");
  if (s.q < 0 || (s.q == 0 && !allow_q0)) raise("MalformedArc", "q must be positive");
}

double x_coordinate(const MarkedPoint& m, const AnnulusShape& s) {
  return m.boundary == Boundary::Outer ? double(m.lift) * s.q : -double(m.lift) * s.p;
}

Lift floor_div(Lift a, Lift b) {
  Lift d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

Lift floor_mod(Lift a, Lift b) { return a - floor_div(a, b) * b; }

Lift displacement(const Arc& x, const AnnulusShape& s) { return -(x.b * s.p + x.a * s.q); }

namespace {

void require_boundary(Boundary bd, const AnnulusShape& s) {
  if (s.period(bd) < 1) raise("MalformedArc", "boundary has no marked points");
}

// First lift of e strictly greater than a; the endpoint lies inside (a, b) iff it is < b.
bool strictly_inside(Lift e, Lift a, Lift b, Lift n) { return a + 1 + floor_mod(e - a - 1, n) < b; }

bool bridging_cross(const Arc& x, const Arc& y, const AnnulusShape& s) {
  const Lift pq = Lift(s.p) * s.q;
  const Lift lo = (x.a - y.a) * s.q;
  const Lift up = -(x.b - y.b) * s.p;
  const Lift l = std::min(lo, up), h = std::max(lo, up);
  // Some multiple k*pq with l < k*pq < h.
  return floor_div(h - 1, pq) * pq > l;
}

bool peripheral_cross(const Arc& x, const Arc& y, Lift n) {
  for (Lift k = -3; k <= 3; ++k) {
    const Lift c = y.a + k * n, d = y.b + k * n;
    if ((x.a < c && c < x.b && x.b < d) || (c < x.a && x.a < d && d < x.b)) return true;
  }
  return false;
}

bool peripheral_vs(const Arc& per, const Arc& other, const AnnulusShape& s) {
  const Lift n = s.period(per.boundary);
  switch (other.kind) {
    case ArcKind::Bridging: {
      const Lift e = per.boundary == Boundary::Outer ? other.a : other.b;
      return strictly_inside(e, per.a, per.b, n);
    }
    case ArcKind::Peripheral:
      return per.boundary == other.boundary && peripheral_cross(per, other, n);
    default:
      return per.boundary == other.boundary && strictly_inside(other.a, per.a, per.b, n);
  }
}

}  // namespace

Arc canonicalize(const Arc& arc, const AnnulusShape& s) {
  Arc r = arc;
  switch (arc.kind) {
    case ArcKind::Bridging: {
      if (s.q < 1) raise("MalformedArc", "bridging arc needs inner marked points");
      const Lift k = floor_div(r.a, s.p);
      r.a -= k * s.p;
      r.b += k * s.q;
      r.boundary = Boundary::Outer;
      return r;
    }
    case ArcKind::Peripheral: {
      require_boundary(r.boundary, s);
      const Lift n = s.period(r.boundary);
      const Lift len = r.b - r.a;
      if (len < 2 || len > n)
        raise("MalformedArc", "peripheral length " + std::to_string(len) + " outside [2," + std::to_string(n) + "]");
      r.a = floor_mod(r.a, n);
      r.b = r.a + len;
      return r;
    }
    default:
      require_boundary(r.boundary, s);
      r.a = floor_mod(r.a, s.period(r.boundary));
      r.b = 0;
      return r;
  }
}

bool is_canonical(const Arc& arc, const AnnulusShape& s) {
  try {
    return canonicalize(arc, s) == arc;
  } catch (const Error&) {
    return false;
  }
}

bool crosses(const Arc& x0, const Arc& y0, const AnnulusShape& s) {
  const Arc x = canonicalize(x0, s), y = canonicalize(y0, s);
  if (x == y) return false;
  if (x.is_peripheral()) return peripheral_vs(x, y, s);
  if (y.is_peripheral()) return peripheral_vs(y, x, s);
  if (x.is_bridging() && y.is_bridging()) return bridging_cross(x, y, s);
  if (x.is_bridging() || y.is_bridging()) return true;
  return x.boundary == y.boundary && x.kind != y.kind;
}

std::string to_string(Boundary b) { return b == Boundary::Outer ? "outer" : "inner"; }

std::string to_string(const Arc& x) {
  std::ostringstream os;
  switch (x.kind) {
    case ArcKind::Bridging: os << "B(" << x.a << "," << x.b << ")"; break;
    case ArcKind::Peripheral: os << "P" << (x.boundary == Boundary::Outer ? "o" : "i") << "[" << x.a << "," << x.b << "]"; break;
    case ArcKind::Prufer: os << "pi_" << (x.boundary == Boundary::Outer ? "o" : "i") << x.a; break;
    case ArcKind::Adic: os << "alpha_" << (x.boundary == Boundary::Outer ? "o" : "i") << x.a; break;
  }
  return os.str();
}

}  // namespace annulus
