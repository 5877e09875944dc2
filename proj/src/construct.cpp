#include "trigfield/construct.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "trigfield/error.hpp"
#include "trigfield/poly.hpp"
#include "trigfield/sturm.hpp"

namespace trigfield {

namespace {

Real tolerance() { return precision_tolerance(working_precision()); }

Real cross(const Complex& a, const Complex& b) { return a.re * b.im - a.im * b.re; }
Real dot(const Complex& a, const Complex& b) { return a.re * b.re + a.im * b.im; }

Complex exact_complex(const ExactPoint& p) { return {Real(p.x), Real(p.y)}; }

void require_kind(const GeomObject& o, std::initializer_list<ObjectKind> kinds, const char* what) {
  for (auto k : kinds) {
    if (o.kind == k) return;
  }
  throw usage_error(std::string("expected ") + what + ", got " + to_string(o.kind));
}

bool is_linear(const GeomObject& o) { return o.kind == ObjectKind::kLine || o.kind == ObjectKind::kSegment; }
bool is_round(const GeomObject& o) { return o.kind == ObjectKind::kCircle || o.kind == ObjectKind::kArc; }

// Lexicographic by (re, im); real parts within tolerance count as equal.
bool point_less(const GeomObject& p, const GeomObject& q) {
  Real tol = tolerance();
  if (abs(p.a.re - q.a.re) > tol) return p.a.re < q.a.re;
  return p.a.im < q.a.im;
}

std::vector<GeomObject> ordered(std::vector<GeomObject> pts) {
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

std::vector<GeomObject> intersect_lines(const GeomObject& l, const GeomObject& m) {
  if (l.exact_a && l.exact_b && m.exact_a && m.exact_b) {
    Rational dx1 = l.exact_b->x - l.exact_a->x, dy1 = l.exact_b->y - l.exact_a->y;
    Rational dx2 = m.exact_b->x - m.exact_a->x, dy2 = m.exact_b->y - m.exact_a->y;
    Rational det = dx1 * dy2 - dy1 * dx2;
    if (det == 0) throw computation_error("lines are parallel");
    Rational ex = m.exact_a->x - l.exact_a->x, ey = m.exact_a->y - l.exact_a->y;
    Rational t = (ex * dy2 - ey * dx2) / det;
    return {make_point(l.exact_a->x + t * dx1, l.exact_a->y + t * dy1)};
  }
  Complex d1 = l.b - l.a;
  Complex d2 = m.b - m.a;
  Real det = cross(d1, d2);
  if (abs(det) <= tolerance() * abs(d1) * abs(d2)) throw computation_error("lines are parallel");
  Real t = cross(m.a - l.a, d2) / det;
  return {make_point(l.a + d1 * Complex(t))};
}

// Points foot +- sqrt(disc) dir, or the tangency point.
std::vector<GeomObject> chord_points(const Complex& foot, const Complex& dir, const Real& disc, const Real& scale) {
  Real tol = tolerance();
  if (disc < -tol * scale) throw computation_error("objects do not intersect");
  if (abs(disc) <= tol * scale) {
    GeomObject p = make_point(foot);
    p.tangent = true;
    return {p};
  }
  Complex off = dir * Complex(sqrt(disc));
  return ordered({make_point(foot + off), make_point(foot - off)});
}

std::vector<GeomObject> intersect_line_circle(const GeomObject& l, const GeomObject& c) {
  Complex d = l.b - l.a;
  Complex u = d / Complex(abs(d));
  Real t = dot(c.a - l.a, u);
  Complex foot = l.a + u * Complex(t);
  Real r = c.radius();
  Real h = abs(c.a - foot);
  return chord_points(foot, u, r * r - h * h, max(Real(1), r * r));
}

std::vector<GeomObject> intersect_circles(const GeomObject& c1, const GeomObject& c2) {
  Complex delta = c2.a - c1.a;
  Real d = abs(delta);
  if (d <= tolerance()) throw computation_error("circles are concentric");
  Real r1 = c1.radius();
  Real r2 = c2.radius();
  // Radical line at distance a from c1 along the centre line.
  Real a = (r1 * r1 - r2 * r2 + d * d) / (Real(2) * d);
  Complex u = delta / Complex(d);
  Complex foot = c1.a + u * Complex(a);
  Complex perp{-u.im, u.re};
  return chord_points(foot, perp, r1 * r1 - a * a, max(Real(1), r1 * r1));
}

Real normalized_angle(Real x) {
  Real two_pi = Real(2) * Real::pi();
  while (x < Real(0)) x += two_pi;
  while (x >= two_pi) x -= two_pi;
  return x;
}

// Real polynomials in one variable, for the fold cubic.
using RPoly = std::vector<Real>;

RPoly rmul(const RPoly& a, const RPoly& b) {
  RPoly out(a.size() + b.size() - 1, Real(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RPoly radd(const RPoly& a, const RPoly& b) {
  RPoly out(std::max(a.size(), b.size()), Real(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

RPoly rscale(RPoly a, const Real& k) {
  for (auto& c : a) c *= k;
  return a;
}

}  // namespace

std::string to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::kPoint: return "point";
    case ObjectKind::kLine: return "line";
    case ObjectKind::kCircle: return "circle";
    case ObjectKind::kSegment: return "segment";
    case ObjectKind::kArc: return "arc";
  }
  return "?";
}

std::string to_string(Tool t) {
  switch (t) {
    case Tool::kEuclidean: return "euclidean";
    case Tool::kOrigami: return "origami";
    case Tool::kT1: return "T1";
    case Tool::kT2: return "T2";
    case Tool::kQuadratrix: return "quadratrix";
    case Tool::kSpiral: return "spiral";
    case Tool::kSine: return "sine";
  }
  return "?";
}

std::string to_string(const Provenance& p) {
  std::string out;
  for (Tool t : p) {
    if (!out.empty()) out += ';';
    out += to_string(t);
  }
  return out;
}

Real GeomObject::length() const {
  if (kind == ObjectKind::kArc) return radius() * sweep;
  if (kind == ObjectKind::kSegment) return abs(b - a);
  throw usage_error("length of a " + to_string(kind));
}

GeomObject make_point(const Complex& z) {
  GeomObject o;
  o.a = z;
  return o;
}

GeomObject make_point(const Rational& x, const Rational& y) {
  GeomObject o;
  o.exact_a = ExactPoint{x, y};
  o.a = exact_complex(*o.exact_a);
  return o;
}

namespace {

GeomObject two_point(ObjectKind kind, const GeomObject& p, const GeomObject& q) {
  require_kind(p, {ObjectKind::kPoint}, "point");
  require_kind(q, {ObjectKind::kPoint}, "point");
  GeomObject o;
  o.kind = kind;
  o.a = p.a;
  o.b = q.a;
  o.exact_a = p.exact_a;
  o.exact_b = q.exact_a;
  if (abs(o.b - o.a) <= tolerance()) throw usage_error("defining points coincide");
  return o;
}

}  // namespace

GeomObject make_line(const GeomObject& p, const GeomObject& q) { return two_point(ObjectKind::kLine, p, q); }
GeomObject make_circle(const GeomObject& center, const GeomObject& through) {
  return two_point(ObjectKind::kCircle, center, through);
}
GeomObject make_segment(const GeomObject& p, const GeomObject& q) { return two_point(ObjectKind::kSegment, p, q); }

GeomObject make_arc(const GeomObject& circle, const GeomObject& from, const GeomObject& to, bool ccw) {
  require_kind(circle, {ObjectKind::kCircle}, "circle");
  require_kind(from, {ObjectKind::kPoint}, "point");
  require_kind(to, {ObjectKind::kPoint}, "point");
  Real r = circle.radius();
  Real tol = tolerance() * max(Real(1), r);
  if (abs(abs(from.a - circle.a) - r) > tol || abs(abs(to.a - circle.a) - r) > tol) {
    throw usage_error("arc endpoint is not on the circle");
  }
  GeomObject o;
  o.kind = ObjectKind::kArc;
  o.a = circle.a;
  o.b = from.a;
  o.c = to.a;
  o.ccw = ccw;
  Real t0 = arg(from.a - circle.a);
  Real t1 = arg(to.a - circle.a);
  Real sweep = normalized_angle(ccw ? t1 - t0 : t0 - t1);
  Real two_pi = Real(2) * Real::pi();
  if (sweep <= tolerance() || two_pi - sweep <= tolerance()) sweep = two_pi;
  o.sweep = sweep;
  return o;
}

std::vector<GeomObject> euclid_intersections(const GeomObject& a, const GeomObject& b) {
  require_kind(a, {ObjectKind::kLine, ObjectKind::kSegment, ObjectKind::kCircle, ObjectKind::kArc}, "line or circle");
  require_kind(b, {ObjectKind::kLine, ObjectKind::kSegment, ObjectKind::kCircle, ObjectKind::kArc}, "line or circle");
  if (is_linear(a) && is_linear(b)) return intersect_lines(a, b);
  if (is_linear(a) && is_round(b)) return intersect_line_circle(a, b);
  if (is_round(a) && is_linear(b)) return intersect_line_circle(b, a);
  return intersect_circles(a, b);
}

GeomObject euclid_intersect(const GeomObject& a, const GeomObject& b, int index) {
  auto pts = euclid_intersections(a, b);
  if (index < 0 || index > 1 || (index == 1 && is_linear(a) && is_linear(b))) {
    throw usage_error("intersection index " + std::to_string(index) + " out of range");
  }
  if (pts.size() == 1) return pts.front();
  return pts[static_cast<std::size_t>(index)];
}

GeomObject arc_to_seg(const GeomObject& arc) {
  require_kind(arc, {ObjectKind::kArc}, "arc");
  GeomObject o;
  o.kind = ObjectKind::kSegment;
  o.exact_a = ExactPoint{Rational(0), Rational(0)};
  o.a = Complex(Real(0), Real(0));
  o.b = Complex(arc.length(), Real(0));
  return o;
}

GeomObject seg_to_arc(const GeomObject& segment, const GeomObject& circle, const GeomObject& start, bool ccw) {
  require_kind(segment, {ObjectKind::kSegment}, "segment");
  require_kind(circle, {ObjectKind::kCircle}, "circle");
  require_kind(start, {ObjectKind::kPoint}, "point");
  Real r = circle.radius();
  Real len = segment.length();
  Real tol = tolerance() * max(Real(1), r);
  if (abs(abs(start.a - circle.a) - r) > tol) throw usage_error("start point is not on the circle");
  Real circumference = Real(2) * Real::pi() * r;
  if (len > circumference + tol) throw usage_error("segment is longer than the circumference");
  Real sweep = min(len / r, Real(2) * Real::pi());
  Real t0 = arg(start.a - circle.a);
  Real t1 = ccw ? t0 + sweep : t0 - sweep;
  GeomObject o;
  o.kind = ObjectKind::kArc;
  o.a = circle.a;
  o.b = start.a;
  o.c = circle.a + polar(r, t1);
  o.ccw = ccw;
  o.sweep = sweep;
  return o;
}

GeomObject quadratrix_point(const Real& param, QuadratrixMode mode) {
  if (mode == QuadratrixMode::kLimit) return make_point(Rational(1), Rational(0));
  Real half_pi = Real::pi() / Real(2);
  if (param.is_zero() || param <= -half_pi || param > half_pi) {
    throw usage_error("quadratrix parameter outside (-pi/2, pi/2] \\ {0}");
  }
  // cot(pi/2) is exactly 0; MPFR rounds pi, so pin the endpoint.
  Real x = abs(param - half_pi) <= tolerance() ? Real(0) : param * cot(param);
  return make_point(Complex(x, param));
}

GeomObject spiral_ray_point(const Real& theta, long k) {
  if (k < 0) throw usage_error("spiral branch must be >= 0");
  Real t = theta + Real(2) * Real::pi() * Real(k);
  return make_point(Complex(t * cos(t), t * sin(t)));
}

GeomObject spiral_circle_point(const Real& r) {
  if (r < Real(0)) throw usage_error("spiral radius must be >= 0");
  return make_point(Complex(r * cos(r), r * sin(r)));
}

GeomObject sine_vline_point(const Real& x0) { return make_point(Complex(x0, sin(x0))); }

GeomObject sine_hline_point(const Real& y0, long branch) {
  if (abs(y0) > Real(1)) throw usage_error("sine level must satisfy |y| <= 1");
  Real base = asin(y0);
  if (branch % 2 != 0) base = -base;
  return make_point(Complex(base + Real::pi() * Real(branch), y0));
}

Complex reflect(const Complex& z, const GeomObject& line) {
  Complex d = line.b - line.a;
  Complex u = d / Complex(abs(d));
  Complex w = z - line.a;
  Complex proj = u * Complex(dot(w, u));
  return line.a + proj + proj - w;
}

Real line_distance(const Complex& z, const GeomObject& line) {
  Complex d = line.b - line.a;
  return abs(cross(d, z - line.a)) / abs(d);
}

std::vector<GeomObject> origami_fold3(const GeomObject& p1, const GeomObject& l1, const GeomObject& p2,
                                      const GeomObject& l2) {
  require_kind(p1, {ObjectKind::kPoint}, "point");
  require_kind(p2, {ObjectKind::kPoint}, "point");
  require_kind(l1, {ObjectKind::kLine, ObjectKind::kSegment}, "line");
  require_kind(l2, {ObjectKind::kLine, ObjectKind::kSegment}, "line");
  const Real tol = tolerance();
  if (line_distance(p1.a, l1) <= tol && line_distance(p2.a, l2) <= tol) {
    throw usage_error("degenerate fold: both points lie on their lines");
  }
  // Image of p1 is Q(s) = A1 + s d1. The fold is the perpendicular bisector
  // of p1 Q; reflecting p2 across it must land on L2. Clearing |v|^2 with
  // v = Q - p1 leaves a cubic in s.
  Complex d1 = l1.b - l1.a;
  d1 = d1 / Complex(abs(d1));
  Complex d2 = l2.b - l2.a;
  Complex n2{-d2.im, d2.re};
  n2 = n2 / Complex(abs(n2));
  Complex u = l1.a - p1.a;
  RPoly vx{u.re, d1.re}, vy{u.im, d1.im};
  Complex m0 = (p1.a + l1.a) / Complex(Real(2));
  RPoly wx{p2.a.re - m0.re, -d1.re / Real(2)}, wy{p2.a.im - m0.im, -d1.im / Real(2)};
  RPoly v2 = radd(rmul(vx, vx), rmul(vy, vy));
  RPoly wv = radd(rmul(wx, vx), rmul(wy, vy));
  RPoly nv{dot(n2, u), dot(n2, d1)};
  Real c = dot(n2, p2.a - l2.a);
  RPoly f = radd(rscale(v2, c), rscale(rmul(wv, nv), Real(-2)));

  Real scale(0);
  for (const auto& x : f) scale = max(scale, abs(x));
  if (scale <= tol) throw usage_error("degenerate fold configuration");
  const Real cutoff = scale * ldexp(Real(1), -(working_precision() - 16));
  std::vector<Rational> coeffs;
  for (const auto& x : f) coeffs.push_back(abs(x) <= cutoff ? Rational(0) : (x / scale).to_rational());
  Poly cubic(coeffs);
  if (cubic.degree() <= 0) throw computation_error("no fold exists");

  Poly sf = squarefree_part(cubic);
  Rational width = Rational(1) / Rational(Integer(1) << (working_precision() + 8));
  std::vector<GeomObject> folds;
  for (auto iv : isolate_real_roots(sf)) {
    if (!iv.is_point()) iv = refine_real_root(sf, iv, width);
    Real s(iv.midpoint());
    Complex q = l1.a + d1 * Complex(s);
    Complex v = q - p1.a;
    if (abs(v) <= tol) continue;
    GeomObject fold;
    fold.kind = ObjectKind::kLine;
    fold.a = (p1.a + q) / Complex(Real(2));
    fold.b = fold.a + Complex(-v.im, v.re);
    Real slack = tol * max(Real(1), abs(p2.a - fold.a));
    if (line_distance(reflect(p1.a, fold), l1) > slack || line_distance(reflect(p2.a, fold), l2) > slack) {
      continue;
    }
    folds.push_back(fold);
  }
  if (folds.empty()) throw computation_error("no real fold exists");
  return folds;
}

Real ScriptValue::to_real() const {
  Real v(coeff);
  return pi ? v * Real::pi() : v;
}

const GeomObject& Workspace::at(const std::string& name) const {
  auto it = bindings.find(name);
  if (it == bindings.end()) throw usage_error("unknown object '" + name + "'");
  return it->second;
}

// ---------------------------------------------------------------------------
// Script parsing

namespace {

struct Token {
  std::string text;
  int column = 0;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '(' || ch == ')' || ch == ',' || ch == '[' || ch == ']' || ch == '=') {
      out.push_back({std::string(1, ch), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           std::string_view("()[],=#").find(line[j]) == std::string_view::npos) {
      ++j;
    }
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void fail_at(int line, int column, const std::string& what) {
  throw usage_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

ScriptValue parse_value(const std::string& text) {
  ScriptValue v;
  auto pos = text.find("pi");
  if (pos == std::string::npos) {
    v.coeff = parse_rational(text);
    return v;
  }
  v.pi = true;
  std::string head = text.substr(0, pos);
  std::string tail = text.substr(pos + 2);
  if (head.empty()) {
    v.coeff = 1;
  } else if (head == "-") {
    v.coeff = -1;
  } else if (head.back() == '*') {
    v.coeff = parse_rational(head.substr(0, head.size() - 1));
  } else {
    throw usage_error("malformed value '" + text + "'");
  }
  if (!tail.empty()) {
    if (tail[0] != '/') throw usage_error("malformed value '" + text + "'");
    v.coeff /= parse_rational(tail.substr(1));
  }
  return v;
}

long parse_integer(const std::string& text) {
  Rational q = parse_rational(text);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw usage_error("expected an integer, got '" + text + "'");
  return q.get_num().get_si();
}

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"point", Command::kPoint},       {"line", Command::kLine},         {"circle", Command::kCircle},
      {"segment", Command::kSegment},   {"arc", Command::kArc},           {"endpoint", Command::kEndpoint},
      {"intersect", Command::kIntersect}, {"arc2seg", Command::kArc2Seg}, {"seg2arc", Command::kSeg2Arc},
      {"quadratrix", Command::kQuadratrix}, {"spiral", Command::kSpiral}, {"sine", Command::kSine},
      {"fold", Command::kFold},
  };
  return table;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

  bool done() const { return pos_ >= tokens_.size(); }

  const Token& next(const char* what) {
    if (done()) {
      int col = tokens_.empty() ? 1 : tokens_.back().column + static_cast<int>(tokens_.back().text.size());
      fail_at(line_, col, std::string("expected ") + what);
    }
    return tokens_[pos_++];
  }

  void expect(const char* text) {
    const Token& t = next(text);
    if (t.text != text) fail_at(line_, t.column, std::string("expected '") + text + "', got '" + t.text + "'");
  }

  template <typename F>
  auto guarded(const Token& t, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      fail_at(line_, t.column, e.what());
    }
  }

  ScriptValue value() {
    const Token& t = next("a number");
    return guarded(t, [&] { return parse_value(t.text); });
  }

  long integer() {
    const Token& t = next("an integer");
    return guarded(t, [&] { return parse_integer(t.text); });
  }

  std::optional<long> optional_index() {
    if (done()) return std::nullopt;
    if (tokens_[pos_].text == "[") {
      ++pos_;
      long v = integer();
      expect("]");
      return v;
    }
    return integer();
  }

  std::string mode(std::initializer_list<const char*> options) {
    const Token& t = next("a mode");
    for (const char* o : options) {
      if (t.text == o) return t.text;
    }
    std::string list;
    for (const char* o : options) list += (list.empty() ? "" : "|") + std::string(o);
    fail_at(line_, t.column, "expected " + list + ", got '" + t.text + "'");
  }

  bool orientation() { return mode({"ccw", "cw"}) == "ccw"; }

  const Token& ref() { return next("an object name"); }

  void finish() {
    if (!done()) fail_at(line_, tokens_[pos_].column, "unexpected '" + tokens_[pos_].text + "'");
  }

  int line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

}  // namespace

Script parse_script(std::string_view text) {
  Script script;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    LineParser p(tokens, line_no);
    Statement st;
    st.line = line_no;
    st.column = tokens.front().column;
    const Token& cmd = p.next("a command");
    auto it = command_table().find(cmd.text);
    if (it == command_table().end()) fail_at(line_no, cmd.column, "unknown command '" + cmd.text + "'");
    st.command = it->second;
    const Token& name = p.next("a name");
    if (!valid_name(name.text) || name.text == "pi") fail_at(line_no, name.column, "invalid name '" + name.text + "'");
    if (names.count(name.text)) fail_at(line_no, name.column, "duplicate name '" + name.text + "'");
    st.name = name.text;
    p.expect("=");

    auto add_ref = [&] {
      const Token& r = p.ref();
      if (!names.count(r.text)) fail_at(line_no, r.column, "unknown object '" + r.text + "'");
      st.refs.push_back(r.text);
    };

    switch (st.command) {
      case Command::kPoint:
        p.expect("(");
        st.values.push_back(p.value());
        p.expect(",");
        st.values.push_back(p.value());
        p.expect(")");
        if (st.values[0].pi || st.values[1].pi) fail_at(line_no, st.column, "point coordinates must be rational");
        break;
      case Command::kLine:
      case Command::kCircle:
      case Command::kSegment:
        add_ref();
        add_ref();
        break;
      case Command::kArc:
        add_ref();
        add_ref();
        add_ref();
        st.ccw = p.orientation();
        break;
      case Command::kEndpoint:
        add_ref();
        st.index = p.integer();
        break;
      case Command::kIntersect:
        add_ref();
        add_ref();
        st.index = p.optional_index();
        break;
      case Command::kArc2Seg:
        add_ref();
        break;
      case Command::kSeg2Arc:
        add_ref();
        add_ref();
        add_ref();
        st.ccw = p.orientation();
        break;
      case Command::kQuadratrix:
        st.mode = p.mode({"ray", "hline", "limit"});
        if (st.mode != "limit") st.values.push_back(p.value());
        break;
      case Command::kSpiral:
        st.mode = p.mode({"ray", "circle"});
        st.values.push_back(p.value());
        if (st.mode == "ray") st.index = p.integer();
        break;
      case Command::kSine:
        st.mode = p.mode({"vline", "hline"});
        st.values.push_back(p.value());
        if (st.mode == "hline") st.index = p.integer();
        break;
      case Command::kFold:
        add_ref();
        add_ref();
        add_ref();
        add_ref();
        st.index = p.optional_index();
        break;
    }
    p.finish();
    names.insert(st.name);
    script.statements.push_back(std::move(st));
  }
  return script;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

GeomObject evaluate(const Statement& st, const Workspace& ws, Tool& tag, bool& tagged) {
  auto ref = [&](std::size_t i) -> const GeomObject& { return ws.at(st.refs[i]); };
  tagged = true;
  tag = Tool::kEuclidean;
  switch (st.command) {
    case Command::kPoint:
      return make_point(st.values[0].coeff, st.values[1].coeff);
    case Command::kLine:
      return make_line(ref(0), ref(1));
    case Command::kCircle:
      return make_circle(ref(0), ref(1));
    case Command::kSegment:
      return make_segment(ref(0), ref(1));
    case Command::kArc:
      return make_arc(ref(0), ref(1), ref(2), st.ccw);
    case Command::kEndpoint: {
      tagged = false;
      const GeomObject& o = ref(0);
      require_kind(o, {ObjectKind::kSegment, ObjectKind::kArc}, "segment or arc");
      if (*st.index != 0 && *st.index != 1) throw usage_error("endpoint index must be 0 or 1");
      if (o.kind == ObjectKind::kSegment) {
        const auto& ex = *st.index == 0 ? o.exact_a : o.exact_b;
        if (ex) return make_point(ex->x, ex->y);
        return make_point(*st.index == 0 ? o.a : o.b);
      }
      return make_point(*st.index == 0 ? o.b : o.c);
    }
    case Command::kIntersect:
      return euclid_intersect(ref(0), ref(1), static_cast<int>(st.index.value_or(0)));
    case Command::kArc2Seg:
      tag = Tool::kT1;
      return arc_to_seg(ref(0));
    case Command::kSeg2Arc:
      tag = Tool::kT2;
      return seg_to_arc(ref(0), ref(1), ref(2), st.ccw);
    case Command::kQuadratrix: {
      tag = Tool::kQuadratrix;
      if (st.mode == "limit") return quadratrix_point(Real(0), QuadratrixMode::kLimit);
      return quadratrix_point(st.values[0].to_real(), st.mode == "ray" ? QuadratrixMode::kRay : QuadratrixMode::kHline);
    }
    case Command::kSpiral:
      tag = Tool::kSpiral;
      if (st.mode == "ray") return spiral_ray_point(st.values[0].to_real(), *st.index);
      return spiral_circle_point(st.values[0].to_real());
    case Command::kSine:
      tag = Tool::kSine;
      if (st.mode == "vline") return sine_vline_point(st.values[0].to_real());
      return sine_hline_point(st.values[0].to_real(), *st.index);
    case Command::kFold: {
      tag = Tool::kOrigami;
      auto folds = origami_fold3(ref(0), ref(1), ref(2), ref(3));
      long idx = st.index.value_or(0);
      if (idx < 0 || idx >= static_cast<long>(folds.size())) {
        throw usage_error("fold index " + std::to_string(idx) + " out of range (" + std::to_string(folds.size()) +
                          " folds)");
      }
      return folds[static_cast<std::size_t>(idx)];
    }
  }
  throw usage_error("unhandled command");
}

}  // namespace

Workspace run_script(const Script& script, int precision) {
  if (precision < 64) throw usage_error("precision must be at least 64 bits");
  PrecisionScope scope(precision);
  Workspace ws;
  ws.precision = precision;
  for (const auto& st : script.statements) {
    Tool tag = Tool::kEuclidean;
    bool tagged = true;
    GeomObject obj;
    try {
      obj = evaluate(st, ws, tag, tagged);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(st.line) + ", column " + std::to_string(st.column) + ": " + e.what());
    }
    Provenance prov;
    for (const auto& r : st.refs) {
      const auto& p = ws.provenance.at(r);
      prov.insert(p.begin(), p.end());
    }
    if (tagged) prov.insert(tag);
    ws.bindings.emplace(st.name, std::move(obj));
    ws.provenance.emplace(st.name, std::move(prov));
    ws.order.push_back(st.name);
  }
  return ws;
}

// ---------------------------------------------------------------------------
// Export

namespace {

// Coordinates below the incidence tolerance print as 0 so that rounding
// noise does not depend on the precision.
std::string coord(const Real& x, int precision) {
  if (abs(x) <= precision_tolerance(precision)) return "0";
  return x.to_string(40);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string export_csv(const Workspace& ws) {
  PrecisionScope scope(ws.precision);
  std::string out = "name,kind,re,im,provenance\n";
  for (const auto& name : ws.order) {
    const GeomObject& o = ws.bindings.at(name);
    out += name + "," + to_string(o.kind) + "," + coord(o.a.re, ws.precision) + "," + coord(o.a.im, ws.precision) +
           "," + to_string(ws.provenance.at(name)) + "\n";
  }
  return out;
}

std::string export_svg(const Workspace& ws) {
  PrecisionScope scope(ws.precision);
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  auto include = [&](double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const auto& name : ws.order) {
    const GeomObject& o = ws.bindings.at(name);
    include(o.a.re.to_double(), o.a.im.to_double());
    if (o.kind != ObjectKind::kPoint) include(o.b.re.to_double(), o.b.im.to_double());
    if (is_round(o)) {
      double r = o.radius().to_double();
      include(o.a.re.to_double() - r, o.a.im.to_double() - r);
      include(o.a.re.to_double() + r, o.a.im.to_double() + r);
    }
  }
  double pad = 0.05 * std::max(x1 - x0, y1 - y0);
  x0 -= pad;
  x1 += pad;
  y0 -= pad;
  y1 += pad;
  const double w = x1 - x0, h = y1 - y0;
  const double stroke = 0.003 * std::max(w, h);
  auto X = [](const Real& v) { return fmt(v.to_double()); };
  auto Y = [](const Real& v) { return fmt(-v.to_double()); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << " " << fmt(-y1) << " " << fmt(w) << " "
    << fmt(h) << "\">\n";
  s << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(stroke) << "\">\n";
  for (const auto& name : ws.order) {
    const GeomObject& o = ws.bindings.at(name);
    switch (o.kind) {
      case ObjectKind::kPoint:
        s << "<circle cx=\"" << X(o.a.re) << "\" cy=\"" << Y(o.a.im) << "\" r=\"" << fmt(2 * stroke)
          << "\" fill=\"black\"/>\n";
        break;
      case ObjectKind::kLine: {
        // Extend well past the view box.
        Complex d = o.b - o.a;
        Complex u = d / Complex(abs(d));
        Complex far = u * Complex(Real(4 * (w + h)));
        Complex p = o.a - far, q = o.a + far;
        s << "<line x1=\"" << X(p.re) << "\" y1=\"" << Y(p.im) << "\" x2=\"" << X(q.re) << "\" y2=\"" << Y(q.im)
          << "\"/>\n";
        break;
      }
      case ObjectKind::kSegment:
        s << "<line x1=\"" << X(o.a.re) << "\" y1=\"" << Y(o.a.im) << "\" x2=\"" << X(o.b.re) << "\" y2=\"" << Y(o.b.im)
          << "\"/>\n";
        break;
      case ObjectKind::kCircle:
        s << "<circle cx=\"" << X(o.a.re) << "\" cy=\"" << Y(o.a.im) << "\" r=\"" << fmt(o.radius().to_double())
          << "\"/>\n";
        break;
      case ObjectKind::kArc: {
        double r = o.radius().to_double();
        double sweep = o.sweep.to_double();
        if (sweep > 6.283) {
          s << "<circle cx=\"" << X(o.a.re) << "\" cy=\"" << Y(o.a.im) << "\" r=\"" << fmt(r) << "\"/>\n";
          break;
        }
        // y is flipped, so counterclockwise becomes sweep-flag 0.
        s << "<path d=\"M " << X(o.b.re) << " " << Y(o.b.im) << " A " << fmt(r) << " " << fmt(r) << " 0 "
          << (sweep > 3.14159265358979 ? 1 : 0) << " " << (o.ccw ? 0 : 1) << " " << X(o.c.re) << " " << Y(o.c.im)
          << "\"/>\n";
        break;
      }
    }
  }
  s << "</g>\n";
  s << "<g font-family=\"sans-serif\" font-size=\"" << fmt(0.03 * std::max(w, h)) << "\">\n";
  for (const auto& name : ws.order) {
    const GeomObject& o = ws.bindings.at(name);
    Complex at = o.kind == ObjectKind::kSegment ? (o.a + o.b) / Complex(Real(2)) : o.a;
    s << "<text x=\"" << X(at.re) << "\" y=\"" << Y(at.im) << "\">" << name << "</text>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace trigfield
