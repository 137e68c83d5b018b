// geometry.hpp -- circle arithmetic, phase points, conormal targets,
// homology class labels.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

namespace conlab {

/// Reduces x to the fundamental domain [0,1) of the circle R/Z.
inline double circle_reduce(double x) {
  if (!std::isfinite(x)) throw std::domain_error("circle_reduce: non-finite input");
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;  // guards the floor rounding edge at tiny negative x
  return r;
}

/// Wraparound distance on the circle; always in [0, 1/2].
inline double circle_distance(double a, double b) {
  double d = std::fabs(circle_reduce(a) - circle_reduce(b));
  return std::min(d, 1.0 - d);
}

/// Signed representative of b - a closest to zero; in [-1/2, 1/2).
inline double circle_signed_diff(double a, double b) {
  double d = circle_reduce(b) - circle_reduce(a);
  if (d < -0.5) d += 1.0;
  if (d >= 0.5) d -= 1.0;
  return d;
}

/// Length of the counterclockwise arc from a to b; in [0, 1).
inline double ccw_arc_length(double a, double b) {
  return circle_reduce(circle_reduce(b) - circle_reduce(a));
}

/// Point of the base circle, stored reduced to [0,1).
struct BasePoint {
  double q = 0.0;
  BasePoint() = default;
  explicit BasePoint(double x) : q(circle_reduce(x)) {}
};

/// Point of the phase space: base angle plus fiber momentum.
struct PhasePoint {
  BasePoint q;
  double p = 0.0;
  PhasePoint() = default;
  PhasePoint(double q_, double p_) : q(q_), p(p_) {}
};

enum class ArcSign { Plus, Minus };

/// Boundary-condition submanifold: a single point, the whole circle, or a
/// closed counterclockwise arc carrying a boundary sign convention.
struct ConormalTarget {
  struct Point {
    BasePoint x;
  };
  struct Whole {};
  struct Arc {
    BasePoint a, b;  // traversed counterclockwise from a to b; a != b
    ArcSign sign;
  };
  std::variant<Point, Whole, Arc> variant;

  static ConormalTarget point(double x) { return {Point{BasePoint(x)}}; }
  static ConormalTarget whole() { return {Whole{}}; }
  static ConormalTarget arc(double a, double b, ArcSign sign) {
    BasePoint pa(a), pb(b);
    if (pa.q == pb.q) throw std::invalid_argument("ConormalTarget: degenerate arc");
    return {Arc{pa, pb, sign}};
  }

  bool is_point() const { return std::holds_alternative<Point>(variant); }
  bool is_whole() const { return std::holds_alternative<Whole>(variant); }
  bool is_arc() const { return std::holds_alternative<Arc>(variant); }
  const Point& as_point() const { return std::get<Point>(variant); }
  const Arc& as_arc() const { return std::get<Arc>(variant); }
};

/// Homology class selector. For a point target the two labels coincide.
enum class ClassLabel { FundamentalN, PointClass };

/// Membership test, with tolerance measured along the circle.
inline bool contains(const ConormalTarget& N, const BasePoint& x, double tol) {
  if (tol < 0) throw std::invalid_argument("contains: negative tolerance");
  if (N.is_whole()) return true;
  if (N.is_point()) return circle_distance(N.as_point().x.q, x.q) <= tol;
  const auto& arc = N.as_arc();
  double len = ccw_arc_length(arc.a.q, arc.b.q);
  double off = ccw_arc_length(arc.a.q, x.q);
  if (off <= len + tol) return true;
  return 1.0 - off <= tol;  // wraparound slack on the a side
}

inline std::string describe(const ConormalTarget& N) {
  if (N.is_whole()) return "whole";
  if (N.is_point()) return "point(" + std::to_string(N.as_point().x.q) + ")";
  const auto& arc = N.as_arc();
  return "arc(" + std::to_string(arc.a.q) + "," + std::to_string(arc.b.q) +
         (arc.sign == ArcSign::Minus ? ",-)" : ",+)");
}

inline std::string describe(ClassLabel c) {
  return c == ClassLabel::FundamentalN ? "fundamental" : "point-class";
}

}  // namespace conlab
