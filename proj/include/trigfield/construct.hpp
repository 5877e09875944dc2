#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "trigfield/complex.hpp"

namespace trigfield {

enum class ObjectKind { kPoint, kLine, kCircle, kSegment, kArc };

/// Tool classes; the enum order is the order used when printing.
enum class Tool { kEuclidean, kOrigami, kT1, kT2, kQuadratrix, kSpiral, kSine };

std::string to_string(ObjectKind k);
std::string to_string(Tool t);

using Provenance = std::set<Tool>;
/// Tags joined with ';' in enum order.
std::string to_string(const Provenance& p);

struct ExactPoint {
  Rational x;
  Rational y;
};

/// One bound object.
///   point:   a
///   line:    through a and b
///   circle:  center a, through b
///   segment: from a to b
///   arc:     center a, from b to c, `sweep` radians in the `ccw` direction
struct GeomObject {
  ObjectKind kind = ObjectKind::kPoint;
  Complex a;
  Complex b;
  Complex c;
  bool ccw = true;
  Real sweep;
  bool tangent = false;
  std::optional<ExactPoint> exact_a;
  std::optional<ExactPoint> exact_b;

  Real radius() const { return abs(b - a); }
  /// Arc length for arcs, length for segments.
  Real length() const;
};

GeomObject make_point(const Complex& z);
GeomObject make_point(const Rational& x, const Rational& y);
GeomObject make_line(const GeomObject& p, const GeomObject& q);
GeomObject make_circle(const GeomObject& center, const GeomObject& through);
GeomObject make_segment(const GeomObject& p, const GeomObject& q);
GeomObject make_arc(const GeomObject& circle, const GeomObject& from, const GeomObject& to, bool ccw);

/// Intersection point `index` of two lines/circles. Up to two points ordered
/// by (re, im); a tangency gives the same point at both indices.
GeomObject euclid_intersect(const GeomObject& a, const GeomObject& b, int index);
/// All intersection points, ordered; tangency yields a single point.
std::vector<GeomObject> euclid_intersections(const GeomObject& a, const GeomObject& b);

/// Segment on the real axis from 0 with the arc's length.
GeomObject arc_to_seg(const GeomObject& arc);
/// Wraps the segment's length around `circle` from `start`.
GeomObject seg_to_arc(const GeomObject& segment, const GeomObject& circle, const GeomObject& start, bool ccw);

enum class QuadratrixMode { kRay, kHline, kLimit };
/// Z(t) = (t cot t, t).
GeomObject quadratrix_point(const Real& param, QuadratrixMode mode);

/// (t cos t, t sin t) with t = theta + 2 pi k.
GeomObject spiral_ray_point(const Real& theta, long k);
/// (r cos r, r sin r).
GeomObject spiral_circle_point(const Real& r);

GeomObject sine_vline_point(const Real& x0);
/// x_n = (-1)^n asin(y0) + n pi.
GeomObject sine_hline_point(const Real& y0, long branch);

/// Fold lines placing p1 onto L1 and p2 onto L2, ordered by the position of
/// the image of p1 along L1. Each is certified by reflecting p1 and p2.
std::vector<GeomObject> origami_fold3(const GeomObject& p1, const GeomObject& l1, const GeomObject& p2,
                                      const GeomObject& l2);

/// Reflection of z across a line.
Complex reflect(const Complex& z, const GeomObject& line);
/// Distance from z to a line.
Real line_distance(const Complex& z, const GeomObject& line);

enum class Command {
  kPoint,
  kLine,
  kCircle,
  kSegment,
  kArc,
  kEndpoint,
  kIntersect,
  kArc2Seg,
  kSeg2Arc,
  kQuadratrix,
  kSpiral,
  kSine,
  kFold,
};

/// Rational multiple of pi (when `pi`) or a plain rational.
struct ScriptValue {
  Rational coeff;
  bool pi = false;

  Real to_real() const;
};

struct Statement {
  Command command = Command::kPoint;
  std::string name;
  std::vector<std::string> refs;
  std::vector<ScriptValue> values;
  std::string mode;
  std::optional<long> index;
  bool ccw = true;
  int line = 0;
  int column = 0;
};

struct Script {
  std::vector<Statement> statements;
};

/// Throws a usage error "line L, column C: ..." on the first problem.
Script parse_script(std::string_view text);

inline constexpr int kDefaultConstructionPrecision = 256;

struct Workspace {
  std::map<std::string, GeomObject> bindings;
  std::map<std::string, Provenance> provenance;
  std::vector<std::string> order;
  int precision = kDefaultConstructionPrecision;

  const GeomObject& at(const std::string& name) const;
};

Workspace run_script(const Script& script, int precision = kDefaultConstructionPrecision);

/// `name,kind,re,im,provenance`, 40 significant digits. Non-point objects
/// report their first defining point (the center for circles and arcs).
std::string export_csv(const Workspace& ws);
std::string export_svg(const Workspace& ws);

}  // namespace trigfield
