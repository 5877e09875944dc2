#include "trigfield/transcendental.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>

#include "trigfield/error.hpp"
#include "trigfield/parallel.hpp"

namespace trigfield {

namespace {

using cd = std::complex<double>;

// A zero on (or numerically at) the integration contour.
struct BoundaryZero {};

Real omega(CotScale s) { return s == CotScale::kPlain ? Real(1) : Real::pi() / Real(2); }

// ---------------------------------------------------------------------------
// Double-precision evaluation for the contour integrals.

struct DoubleFamily {
  Family family;
  double a;
  double b;
  double w;

  explicit DoubleFamily(const FamilyParams& p)
      : family(p.family), a(p.a.get_d()), b(p.b.get_d()), w(p.scale == CotScale::kPlain ? 1.0 : M_PI / 2) {}

  // f'/f at z; throws BoundaryZero when |f| is lost in rounding.
  cd log_derivative(cd z) const {
    cd f, df;
    double scale;
    if (family == Family::kSinLine) {
      cd s = std::sin(z);
      f = s - a * z - b;
      df = std::cos(z) - a;
      scale = std::abs(s) + std::abs(a * z) + std::abs(b);
    } else {
      cd s = std::sin(w * z), c = std::cos(w * z);
      cd lin = a * z + b;
      f = z * c - lin * s;
      df = c - w * z * s - a * s - w * lin * c;
      scale = std::abs(z * c) + std::abs(lin * s);
    }
    if (!(std::abs(f) > 1e-12 * std::max(scale, 1e-300))) throw BoundaryZero{};
    cd q = df / f;
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) throw BoundaryZero{};
    return q;
  }
};

// Zeroth, first and second moments of f'/f.
using Moments = std::array<cd, 3>;

Moments& operator+=(Moments& a, const Moments& b) {
  for (int i = 0; i < 3; ++i) a[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
  return a;
}

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Integrator {
  const DoubleFamily& fam;
  long evaluations = 0;

  Moments segment(cd z0, cd z1, double tol, int depth) {
    const cd mid = 0.5 * (z0 + z1);
    const cd half = 0.5 * (z1 - z0);
    Moments kron{}, gauss{};
    for (int i = 0; i < 8; ++i) {
      const int signs = i == 7 ? 1 : 2;
      for (int s = 0; s < signs; ++s) {
        cd z = mid + (s == 0 ? 1.0 : -1.0) * kXgk[i] * half;
        cd q = fam.log_derivative(z) * half;
        Moments v{q, q * z, q * z * z};
        for (int m = 0; m < 3; ++m) {
          kron[static_cast<std::size_t>(m)] += kWgk[i] * v[static_cast<std::size_t>(m)];
          if (i % 2 == 1) gauss[static_cast<std::size_t>(m)] += kWg[i / 2] * v[static_cast<std::size_t>(m)];
        }
      }
    }
    evaluations += 15;
    if (std::abs(kron[0] - gauss[0]) <= tol) return kron;
    if (depth >= 48 || evaluations > 2000000) throw BoundaryZero{};
    Moments left = segment(z0, mid, tol / 2, depth + 1);
    left += segment(mid, z1, tol / 2, depth + 1);
    return left;
  }
};

struct DRect {
  double x0, x1, y0, y1;

  double diagonal() const { return std::hypot(x1 - x0, y1 - y0); }
  bool contains(cd z, double margin = 0) const {
    return z.real() > x0 - margin && z.real() < x1 + margin && z.imag() > y0 - margin && z.imag() < y1 + margin;
  }
};

struct Winding {
  int count = 0;
  cd s1;
  cd s2;
};

// Raw winding number of f (or of g for the cot family) around the rectangle.
Winding wind(const DoubleFamily& fam, const DRect& r) {
  const cd corners[4] = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
  for (double tol : {1e-9, 1e-12}) {
    Integrator in{fam};
    Moments total{};
    for (int e = 0; e < 4; ++e) total += in.segment(corners[e], corners[(e + 1) % 4], tol, 0);
    const cd two_pi_i(0, 2 * M_PI);
    const cd n = total[0] / two_pi_i;
    const double rounded = std::round(n.real());
    if (std::abs(n - rounded) < kWindingAcceptance) {
      return {static_cast<int>(rounded), total[1] / two_pi_i, total[2] / two_pi_i};
    }
  }
  throw computation_error("argument-principle quadrature did not converge");
}

DRect to_drect(const ComplexRect& r) {
  return {r.re_lo.to_double(), r.re_hi.to_double(), r.im_lo.to_double(), r.im_hi.to_double()};
}

// Outward jitter: attempt j moves each edge by j * 2^-20 * diagonal, scaled
// per edge so that the four edges never move in lockstep.
DRect jittered(const DRect& r, int attempt) {
  static constexpr double kEdge[4] = {1.0, 0.75, 1.25, 0.5};
  const double d = std::ldexp(r.diagonal(), -20) * attempt;
  return {r.x0 - d * kEdge[0], r.x1 + d * kEdge[1], r.y0 - d * kEdge[2], r.y1 + d * kEdge[3]};
}

// Winding on the rectangle or its first jitter free of boundary zeros.
std::pair<DRect, Winding> wind_with_jitter(const DoubleFamily& fam, const DRect& r) {
  for (int attempt = 0; attempt <= kBoundaryJitterAttempts; ++attempt) {
    DRect j = jittered(r, attempt);
    try {
      return {j, wind(fam, j)};
    } catch (const BoundaryZero&) {
    }
  }
  throw computation_error("zero on the rectangle boundary persists after " +
                          std::to_string(kBoundaryJitterAttempts) + " jitters");
}

// Zero of g at the origin introduced by clearing the poles of cot(w z) - a - b/z.
int spurious_origin_order(const FamilyParams& p) {
  if (p.family != Family::kCotLine) return 0;
  return (p.scale == CotScale::kPlain && p.b == 1) ? 2 : 1;
}

// ---------------------------------------------------------------------------
// Newton refinement at the working precision.

Complex entire_value(const FamilyParams& p, const Complex& z) { return family_derivative(p, z, 0); }

// Newton on f^(m-1), which has a simple zero at a zero of f of order m.
std::optional<Complex> polish(const FamilyParams& p, Complex z, int m, const Real& reach) {
  const Complex start = z;
  const int bits = working_precision();
  const Real eps = ldexp(Real(1), -(bits - 8));
  int small_steps = 0;
  for (int it = 0; it < 200; ++it) {
    Complex d = family_derivative(p, z, m);
    if (abs(d).is_zero()) return std::nullopt;
    Complex step = family_derivative(p, z, m - 1) / d;
    z -= step;
    if (!z.re.is_finite() || !z.im.is_finite() || abs(z - start) > reach) return std::nullopt;
    if (abs(step) <= eps * max(Real(1), abs(z))) {
      if (++small_steps >= 2) return z;
    }
  }
  return z;
}

struct Cell {
  DRect rect;
  Winding w;
  int depth = 0;
};

struct CellOutcome {
  std::optional<RootRecord> record;
  std::vector<Cell> children;
};

constexpr double kSplitOffsets[kBoundaryJitterAttempts] = {0.0, 0.0173, -0.0291, 0.0419, -0.0547, 0.0683, -0.0811,
                                                           0.0937};

CellOutcome process(const FamilyParams& p, const DoubleFamily& fam, const Cell& cell, const Real& tol) {
  CellOutcome out;
  const int n = cell.w.count;
  const double diag = cell.rect.diagonal();
  const cd centre = cell.w.s1 / static_cast<double>(n);
  if (cell.rect.contains(centre, 1e-9 * diag)) {
    auto z = polish(p, Complex(Real(centre.real()), Real(centre.imag())), n, Real(2 * diag));
    if (z) {
      // Real parameters: a root this close to the axis is real.
      if (abs(z->im) <= precision_tolerance(working_precision()) * max(Real(1), abs(z->re))) {
        auto r = polish(p, Complex(z->re, Real(0)), n, Real(2 * diag));
        if (r) z = r;
      }
      cd approx(z->re.to_double(), z->im.to_double());
      bool ok = abs(entire_value(p, *z)) < tol && cell.rect.contains(approx, 1e-9 * diag);
      // A genuine zero of order n also kills the lower derivatives.
      const Real loose = sqrt(tol);
      for (int j = 1; ok && j < n; ++j) ok = abs(family_derivative(p, *z, j)) < loose;
      if (ok) {
        RootRecord rec;
        rec.z = *z;
        rec.multiplicity = n;
        rec.params = p;
        out.record = rec;
        return out;
      }
    }
  }
  if (cell.depth >= 60) throw computation_error("could not separate zeros of f");
  for (int attempt = 0; attempt < kBoundaryJitterAttempts; ++attempt) {
    const DRect& r = cell.rect;
    const double xm = r.x0 + (0.5 + kSplitOffsets[attempt]) * (r.x1 - r.x0);
    const double ym = r.y0 + (0.5 - kSplitOffsets[attempt]) * (r.y1 - r.y0);
    const DRect quads[4] = {{r.x0, xm, r.y0, ym}, {xm, r.x1, r.y0, ym}, {r.x0, xm, ym, r.y1}, {xm, r.x1, ym, r.y1}};
    try {
      std::vector<Cell> kids;
      int total = 0;
      for (const auto& q : quads) {
        Winding w = wind(fam, q);
        total += w.count;
        if (w.count != 0) kids.push_back({q, w, cell.depth + 1});
      }
      if (total != n) continue;
      out.children = std::move(kids);
      return out;
    } catch (const BoundaryZero&) {
    }
  }
  throw computation_error("could not split a cell without a boundary zero");
}

Real residual_of(const FamilyParams& p, const Complex& z) {
  if (p.family == Family::kCotLine && abs(z) <= precision_tolerance(working_precision())) {
    return abs(entire_value(p, z));
  }
  return abs(family_value(p, z));
}

// Real parts closer than `slack` count as equal, so conjugate pairs keep
// their order across precisions.
bool complex_less(const Complex& a, const Complex& b, const Real& slack) {
  if (abs(a.re - b.re) > slack) return a.re < b.re;
  return a.im < b.im;
}

std::string coord(const Real& x) {
  if (abs(x) <= precision_tolerance(working_precision())) return "0";
  return x.to_string(40);
}

}  // namespace

std::string to_string(Family f) { return f == Family::kSinLine ? "sin_line" : "cot_line"; }

void ComplexRect::validate() const {
  if (!(re_lo < re_hi) || !(im_lo < im_hi)) throw usage_error("rectangle needs re_lo < re_hi and im_lo < im_hi");
}

Real ComplexRect::diagonal() const { return abs(Complex(re_hi - re_lo, im_hi - im_lo)); }

bool ComplexRect::contains(const Complex& z) const {
  return z.re > re_lo && z.re < re_hi && z.im > im_lo && z.im < im_hi;
}

ComplexRect make_rect(const Rational& re_lo, const Rational& re_hi, const Rational& im_lo, const Rational& im_hi) {
  ComplexRect r{Real(re_lo), Real(re_hi), Real(im_lo), Real(im_hi)};
  r.validate();
  return r;
}

Complex family_derivative(const FamilyParams& p, const Complex& z, int k) {
  // Derivatives of sin and cos cycle with period four.
  auto sin_k = [](const Complex& s, const Complex& c, int j) {
    switch (j % 4) {
      case 0: return s;
      case 1: return c;
      case 2: return -s;
      default: return -c;
    }
  };
  auto cos_k = [](const Complex& s, const Complex& c, int j) {
    switch (j % 4) {
      case 0: return c;
      case 1: return -s;
      case 2: return -c;
      default: return s;
    }
  };
  const Complex a{Real(p.a)};
  const Complex b{Real(p.b)};
  if (p.family == Family::kSinLine) {
    Complex v = sin_k(sin(z), cos(z), k);
    if (k == 0) v -= a * z + b;
    if (k == 1) v -= a;
    return v;
  }
  const Complex w{omega(p.scale)};
  const Complex wz = w * z;
  const Complex s = sin(wz), c = cos(wz);
  const Complex lin = a * z + b;
  Complex wk = pow(w, k);
  Complex out = z * cos_k(s, c, k) * wk - lin * sin_k(s, c, k) * wk;
  if (k >= 1) {
    Complex wk1 = pow(w, k - 1);
    Complex kk{Real(k)};
    out += kk * cos_k(s, c, k - 1) * wk1 - kk * a * sin_k(s, c, k - 1) * wk1;
  }
  return out;
}

Complex family_value(const FamilyParams& p, const Complex& z) {
  if (p.family == Family::kSinLine) return family_derivative(p, z, 0);
  const Complex wz = Complex(omega(p.scale)) * z;
  return cos(wz) / sin(wz) - Complex(Real(p.a)) - Complex(Real(p.b)) / z;
}

int count_zeros(const FamilyParams& p, const ComplexRect& rect) {
  rect.validate();
  DoubleFamily fam(p);
  auto [r, w] = wind_with_jitter(fam, to_drect(rect));
  int n = w.count;
  if (r.contains(cd(0, 0))) n -= spurious_origin_order(p);
  return n;
}

std::vector<RootRecord> find_roots(const FamilyParams& p, const ComplexRect& rect, const Real& tol) {
  rect.validate();
  if (!(tol > Real(0))) throw usage_error("tolerance must be positive");
  DoubleFamily fam(p);
  auto [top, w] = wind_with_jitter(fam, to_drect(rect));
  std::vector<RootRecord> found;
  std::vector<Cell> level;
  if (w.count > 0) level.push_back({top, w, 0});
  while (!level.empty()) {
    std::vector<CellOutcome> outcomes(level.size());
    parallel_for(level.size(), [&](std::size_t i) { outcomes[i] = process(p, fam, level[i], tol); });
    std::vector<Cell> next;
    for (auto& o : outcomes) {
      if (o.record) found.push_back(*o.record);
      for (auto& c : o.children) next.push_back(std::move(c));
    }
    level = std::move(next);
  }

  const Real spacing = sqrt(tol);
  std::sort(found.begin(), found.end(),
            [&](const RootRecord& x, const RootRecord& y) { return complex_less(x.z, y.z, spacing); });
  std::vector<RootRecord> merged;
  for (auto& rec : found) {
    auto same = std::find_if(merged.begin(), merged.end(), [&](const RootRecord& m) { return abs(m.z - rec.z) < spacing; });
    if (same != merged.end()) {
      same->multiplicity += rec.multiplicity;
    } else {
      merged.push_back(rec);
    }
  }

  std::vector<RootRecord> out;
  const int spurious = spurious_origin_order(p);
  for (auto& rec : merged) {
    if (spurious > 0 && abs(rec.z) < spacing) {
      rec.multiplicity -= spurious;
      if (rec.multiplicity <= 0) continue;
      rec.z = Complex(Real(0), Real(0));
    }
    rec.residual = residual_of(p, rec.z);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Tangency> tangency_locus(int max_k) {
  if (max_k < 1) throw usage_error("max_k must be >= 1");
  std::vector<Tangency> out;
  const Real pi = Real::pi();
  const int iterations = working_precision() + 8;
  for (int k = 1; k <= max_k; ++k) {
    Real lo = pi * Real(k);
    Real hi = lo + pi / Real(2);
    auto h = [](const Real& x) { return sin(x) - x * cos(x); };
    const int sign_lo = h(lo).sign();
    for (int i = 0; i < iterations; ++i) {
      Real mid = (lo + hi) / Real(2);
      if (h(mid).sign() == sign_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    Real x = (lo + hi) / Real(2);
    out.push_back({k, x, cos(x)});
  }
  return out;
}

Atlas atlas(Family family, const Rational& a_lo, const Rational& a_hi, const Rational& b_lo, const Rational& b_hi,
            int steps, const ComplexRect& rect, const Real& tol, CotScale scale) {
  if (steps < 1) throw usage_error("steps must be >= 1");
  rect.validate();
  Atlas at;
  at.family = family;
  at.scale = scale;
  at.window = rect;
  auto grid = [steps](const Rational& lo, const Rational& hi, int i) {
    if (steps == 1) return lo;
    return Rational(lo + (hi - lo) * i / (steps - 1));
  };
  const int na = a_lo == a_hi ? 1 : steps;
  const int nb = b_lo == b_hi ? 1 : steps;
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      AtlasCell c;
      c.a = grid(a_lo, a_hi, i);
      c.b = grid(b_lo, b_hi, j);
      at.cells.push_back(std::move(c));
    }
  }
  parallel_for(at.cells.size(), [&](std::size_t i) {
    AtlasCell& c = at.cells[i];
    try {
      c.records = find_roots(FamilyParams{family, c.a, c.b, scale}, rect, tol);
    } catch (const Error& e) {
      c.error = e.what();
    }
  });
  return at;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void append_records(std::string& out, const std::vector<RootRecord>& records) {
  for (const auto& r : records) {
    out += to_string(r.params.a) + "," + to_string(r.params.b) + "," + coord(r.z.re) + "," + coord(r.z.im) + "," +
           std::to_string(r.multiplicity) + "," + r.residual.to_string(6) + "\n";
  }
}

}  // namespace

std::string render_roots_csv(const std::vector<RootRecord>& records) {
  std::string out = "a,b,re,im,multiplicity,residual\n";
  append_records(out, records);
  return out;
}

std::string render_atlas_csv(const Atlas& at) {
  std::string out = "a,b,re,im,multiplicity,residual\n";
  for (const auto& c : at.cells) {
    if (c.error) {
      out += to_string(c.a) + "," + to_string(c.b) + ",nan,nan,0," + csv_field(*c.error) + "\n";
      continue;
    }
    append_records(out, c.records);
  }
  return out;
}

std::string contour_samples(const FamilyParams& p, const ComplexRect& rect, int nx, int ny) {
  if (nx < 1 || ny < 1) throw usage_error("sample grid must be at least 1 x 1");
  rect.validate();
  DRect r = to_drect(rect);
  std::ostringstream s;
  s.precision(10);
  s << "re,im,|f|\n";
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      Complex z(Real(r.x0 + (i + 0.5) * (r.x1 - r.x0) / nx), Real(r.y0 + (j + 0.5) * (r.y1 - r.y0) / ny));
      s << z.re.to_double() << "," << z.im.to_double() << "," << abs(family_value(p, z)).to_double() << "\n";
    }
  }
  return s.str();
}

}  // namespace trigfield
