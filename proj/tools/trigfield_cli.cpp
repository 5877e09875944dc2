// trigfield command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trigfield/alg_expr.hpp"
#include "trigfield/classifier.hpp"
#include "trigfield/construct.hpp"
#include "trigfield/error.hpp"
#include "trigfield/minpoly.hpp"
#include "trigfield/poly_parse.hpp"
#include "trigfield/transcendental.hpp"

using namespace trigfield;

namespace {

struct RunConfig {
  int precision = 256;
  std::string tol = "1e-30";
  std::string format = "text";
  std::string out;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::kUsage: return 1;
    case ErrorKind::kComputation: return 2;
    case ErrorKind::kCapExceeded: return 3;
  }
  return 2;
}

Real parse_tol(const std::string& text) {
  Real t;
  try {
    t = Real::parse(text);
  } catch (const std::exception&) {
    throw usage_error("malformed tolerance '" + text + "'");
  }
  if (!(t > Real(0))) throw usage_error("tolerance must be positive");
  return t;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string cmd_minpoly(const std::vector<std::string>& args, const RunConfig& cfg) {
  if (args.empty()) throw usage_error("minpoly needs an argument");
  const std::string& kind = args[0];
  auto need = [&](std::size_t n) {
    if (args.size() != n + 1) throw usage_error("minpoly " + kind + " takes " + std::to_string(n) + " argument(s)");
  };
  std::string poly;
  int degree = 0;
  if (kind == "unit-radical") {
    need(3);
    Rational n = parse_rational(args[3]);
    if (n.get_den() != 1 || n < 1 || n > 1000) throw usage_error("n must be a positive integer");
    auto r = minpoly_unit_radical({parse_rational(args[1]), parse_rational(args[2]), static_cast<int>(n.get_num().get_si())});
    poly = to_string(r.minpoly);
    degree = r.minpoly.degree();
  } else if (kind == "rational") {
    need(1);
    Poly p = AlgebraicNumber::from_rational(parse_rational(args[1])).integer_minpoly();
    poly = to_string(p);
    degree = p.degree();
  } else if (kind == "sum-conj") {
    need(1);
    Rational n = parse_rational(args[1]);
    if (n.get_den() != 1 || n < 1 || n > 200) throw usage_error("n must be an integer in 1..200");
    PolyC p = minpoly_sum_conj(static_cast<int>(n.get_num().get_si()));
    poly = to_string(p);
    degree = p.degree();
  } else {
    std::string text;
    for (std::size_t i = kind == "expr" ? 1 : 0; i < args.size(); ++i) text += (text.empty() ? "" : " ") + args[i];
    Poly p = parse_algebraic(text).integer_minpoly();
    poly = to_string(p);
    degree = p.degree();
  }
  if (cfg.format == "text") return poly + "\n";
  return "polynomial,degree\n" + poly + "," + std::to_string(degree) + "\n";
}

std::string cmd_partition_polys(int max_n, const RunConfig& cfg) {
  if (max_n < 3) throw usage_error("max_n must be >= 3");
  if (max_n > 200) throw cap_error("max_n is capped at 200");
  PatternAudit audit = audit_s_patterns(max_n);
  if (cfg.format == "text") {
    std::string out;
    for (int n = 3; n <= max_n; ++n) out += to_string(audit.rows[static_cast<std::size_t>(n - 1)]) + "\n";
    return out + "\n" + render_audit(audit);
  }
  std::string out = "n,polynomial\n";
  for (int n = 3; n <= max_n; ++n) {
    out += std::to_string(n) + "," + to_string(audit.rows[static_cast<std::size_t>(n - 1)]) + "\n";
  }
  return out;
}

ComplexRect parse_window(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 4) throw usage_error("window must be re_lo,re_hi,im_lo,im_hi");
  return make_rect(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
                   parse_rational(parts[3]));
}

struct RootsOptions {
  std::vector<std::string> args;
  std::string window;
  std::string scale = "plain";
  std::string a_to;
  std::string b_to;
  int steps = 0;
  std::string samples;
};

std::string cmd_roots(const RootsOptions& o, const RunConfig& cfg) {
  if (o.args.empty()) throw usage_error("roots needs a family: sin, cot or tangency");
  const std::string& fam = o.args[0];
  if (fam == "tangency") {
    if (o.args.size() != 2) throw usage_error("roots tangency takes max_k");
    Rational k = parse_rational(o.args[1]);
    if (k.get_den() != 1 || k < 1 || k > 10000) throw usage_error("max_k must be an integer in 1..10000");
    std::string out = "k,x,a\n";
    for (const auto& t : tangency_locus(static_cast<int>(k.get_num().get_si()))) {
      out += std::to_string(t.k) + "," + t.x.to_string(40) + "," + t.a.to_string(40) + "\n";
    }
    return out;
  }
  if (fam != "sin" && fam != "cot") throw usage_error("unknown family '" + fam + "'");
  if (o.args.size() != 3) throw usage_error("roots " + fam + " takes a and b");
  FamilyParams p;
  p.family = fam == "sin" ? Family::kSinLine : Family::kCotLine;
  p.a = parse_rational(o.args[1]);
  p.b = parse_rational(o.args[2]);
  if (o.scale == "half-pi") {
    p.scale = CotScale::kHalfPi;
  } else if (o.scale != "plain") {
    throw usage_error("--scale must be plain or half-pi");
  }
  ComplexRect rect = !o.window.empty()        ? parse_window(o.window)
                     : p.family == Family::kSinLine ? make_rect(-10, 10, -10, 10)
                                                    : make_rect(Rational(1, 10), 20, -5, 5);
  if (!o.samples.empty()) {
    auto dims = split(o.samples, 'x');
    if (dims.size() != 2) throw usage_error("--samples must look like 40x30");
    return contour_samples(p, rect, std::stoi(dims[0]), std::stoi(dims[1]));
  }
  Real tol = parse_tol(cfg.tol);
  if (o.steps > 0 || !o.a_to.empty() || !o.b_to.empty()) {
    Rational a_hi = o.a_to.empty() ? p.a : parse_rational(o.a_to);
    Rational b_hi = o.b_to.empty() ? p.b : parse_rational(o.b_to);
    Atlas at = atlas(p.family, p.a, a_hi, p.b, b_hi, std::max(o.steps, 1), rect, tol, p.scale);
    return render_atlas_csv(at);
  }
  return render_roots_csv(find_roots(p, rect, tol));
}

std::string cmd_construct(const std::string& path, bool svg, const RunConfig& cfg) {
  Workspace ws = run_script(parse_script(read_file(path)), cfg.precision);
  return svg ? export_svg(ws) : export_csv(ws);
}

void emit(const std::string& text, const RunConfig& cfg) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw usage_error("cannot write '" + cfg.out + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric tools for ruler, compass, origami and trigonometric constructions"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--precision", cfg.precision, "working precision in bits (>= 64)")->check(CLI::Range(64, 1 << 20));
  app.add_option("--tol", cfg.tol, "numeric tolerance");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "records", "csv"}));
  app.add_option("--out", cfg.out, "write output to a file");

  std::vector<std::string> minpoly_args;
  auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial: unit-radical a b n | rational q | sum-conj n | <expr>");
  minpoly->add_option("args", minpoly_args)->required();

  std::string galois_poly;
  auto* galois = app.add_subcommand("galois", "splitting field and Galois group of a polynomial");
  galois->add_option("polynomial", galois_poly)->required();

  std::string classify_poly;
  auto* classify = app.add_subcommand("classify", "C / O / P / T1 verdicts for an irreducible polynomial");
  classify->add_option("polynomial", classify_poly)->required();

  auto* doubling = app.add_subcommand("report-doubling-cube", "verdicts for x^3 - 2");

  std::string script;
  bool svg = false;
  auto* construct = app.add_subcommand("construct", "run a construction script");
  construct->add_option("script", script)->required();
  construct->add_flag("--svg", svg, "emit SVG instead of CSV");

  RootsOptions roots_opt;
  auto* roots = app.add_subcommand("roots", "zeros of sin z - a z - b or cot z - a - b/z: roots sin|cot a b, roots tangency k");
  roots->add_option("args", roots_opt.args)->required();
  roots->add_option("--window", roots_opt.window, "re_lo,re_hi,im_lo,im_hi");
  roots->add_option("--scale", roots_opt.scale, "cot argument: plain or half-pi");
  roots->add_option("--a-to", roots_opt.a_to, "atlas: upper end of the a range");
  roots->add_option("--b-to", roots_opt.b_to, "atlas: upper end of the b range");
  roots->add_option("--steps", roots_opt.steps, "atlas: grid points per parameter");
  roots->add_option("--samples", roots_opt.samples, "emit |f| on an NXxNY grid");

  int max_n = 0;
  auto* partition = app.add_subcommand("partition-polys", "z + conj(z) minimal polynomials and the pattern audit");
  partition->add_option("max_n", max_n)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    set_working_precision(cfg.precision);
    std::string text;
    const bool records = cfg.format != "text";
    if (minpoly->parsed()) {
      text = cmd_minpoly(minpoly_args, cfg);
    } else if (galois->parsed()) {
      auto r = galois_report(parse_poly(galois_poly));
      text = records ? render_galois_record(r) : render_galois_text(r);
    } else if (classify->parsed()) {
      auto v = classify_all(parse_poly(classify_poly));
      text = records ? render_verdicts_records(v) : render_verdicts_text(v);
    } else if (doubling->parsed()) {
      auto v = doubling_cube_report();
      text = records ? render_verdicts_records(v) : render_verdicts_text(v);
    } else if (construct->parsed()) {
      text = cmd_construct(script, svg, cfg);
    } else if (roots->parsed()) {
      text = cmd_roots(roots_opt, cfg);
    } else if (partition->parsed()) {
      text = cmd_partition_polys(max_n, cfg);
    }
    emit(text, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
