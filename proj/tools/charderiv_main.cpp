// Batch front door: parse a job from flags (or a JSON job file), dispatch to
// the evaluators and ensemble applications, and emit canonical JSON or CSV.
//
// Exit codes: 0 success, 1 precondition/usage failure, 2 internal invariant
// breach (e.g. a nonzero Vandermonde remainder or a route disagreement).

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "charderiv/combinatorics.hpp"
#include "charderiv/diffop.hpp"
#include "charderiv/evaluators.hpp"
#include "charderiv/json_io.hpp"
#include "charderiv/oracle.hpp"
#include "charderiv/rmt.hpp"
#include "charderiv/special.hpp"
#include "charderiv/verify.hpp"

namespace {

using namespace charderiv;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<ExactScalar> parse_scalar_list(const std::string& text) {
  std::vector<ExactScalar> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ExactScalar::from_string(item));
  return out;
}

struct Output {
  std::string format = "json";
  std::string path;
  bool numeric = false;

  void emit_json(Json j) const {
    if (format != "json")
      throw std::invalid_argument("this command only supports --format json");
    write_output(canonical_dump(j), path);
  }
};

// ---- eval job file -------------------------------------------------------

PolyKernel kernel_from_json(const Json& j) {
  if (!j.contains("table")) throw std::invalid_argument("kernel: missing \"table\"");
  std::vector<std::vector<ExactScalar>> c;
  for (const auto& row : j.at("table")) {
    c.emplace_back();
    for (const auto& v : row) c.back().push_back(ExactScalar::from_string(v.get<std::string>()));
  }
  if (j.value("antisymmetrize", false)) return PolyKernel::antisymmetrize(c);
  return PolyKernel(std::move(c));
}

std::vector<UniPoly> columns_from_json(const Json& j) {
  std::vector<UniPoly> cols;
  for (const auto& col : j) {
    std::vector<ExactScalar> c;
    for (const auto& v : col) c.push_back(ExactScalar::from_string(v.get<std::string>()));
    cols.emplace_back(std::move(c));
  }
  return cols;
}

std::vector<PointDerivs> side_from_json(const Json& j) {
  std::vector<PointDerivs> pts;
  for (const auto& p : j) {
    PointDerivs pd;
    pd.chi = ExactScalar::from_string(p.at("chi").get<std::string>());
    for (const auto& o : p.at("orders")) pd.orders.push_back(o.get<int>());
    pts.push_back(std::move(pd));
  }
  return pts;
}

Json side_bounds_json(const std::vector<PointDerivs>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) {
    Json b;
    b["chi"] = p.chi.str();
    b["mult"] = p.mult();
    b["cap"] = p.total();
    b["jet_order"] = p.mult() - 1 + p.total();
    arr.push_back(std::move(b));
  }
  return arr;
}

int run_eval_job(const std::string& job_path, const Output& out) {
  std::ifstream f(job_path);
  if (!f) throw std::invalid_argument("cannot open job file: " + job_path);
  Json job = Json::parse(f);
  std::string mode = job.at("mode").get<std::string>();
  Json result;
  result["mode"] = mode;
  if (mode == "det1") {
    auto pts = side_from_json(job.at("x"));
    auto cols = columns_from_json(job.at("columns"));
    result["bounds"] = Json{{"x", side_bounds_json(pts)}};
    result["value"] = scalar_json(eval_det_onesided(pts, cols));
  } else if (mode == "det") {
    auto xpts = side_from_json(job.at("x"));
    auto ypts = side_from_json(job.at("y"));
    PolyKernel B = kernel_from_json(job.at("kernel"));
    result["bounds"] = Json{{"x", side_bounds_json(xpts)}, {"y", side_bounds_json(ypts)}};
    result["value"] = scalar_json(eval_det_twosided(xpts, ypts, B));
  } else if (mode == "pf" || mode == "main") {
    auto pts = side_from_json(job.at("x"));
    PolyKernel A = kernel_from_json(job.at("kernel"));
    std::vector<UniPoly> cols;
    if (job.contains("columns")) cols = columns_from_json(job.at("columns"));
    size_t q = cols.size();
    RingMatrix<ExactScalar> C(q, q, ExactScalar(0));
    if (job.contains("cmatrix")) {
      const Json& cm = job.at("cmatrix");
      for (size_t a = 0; a < q; ++a)
        for (size_t b = 0; b < q; ++b)
          C.at(a, b) = ExactScalar::from_string(cm.at(a).at(b).get<std::string>());
    }
    result["bounds"] = Json{{"x", side_bounds_json(pts)}};
    result["value"] = scalar_json(eval_pf_main(pts, A, cols, C));
  } else if (mode == "pf2") {
    WeightVector alpha;
    for (const auto& a : job.at("alpha")) alpha.push_back(a.get<int>());
    ExactScalar chi = ExactScalar::from_string(job.at("chi").get<std::string>());
    ExactScalar xi = ExactScalar::from_string(job.at("xi").get<std::string>());
    PolyKernel A = kernel_from_json(job.at("kernel"));
    result["bounds"] = Json{{"alpha", job.at("alpha")}};
    result["value"] = scalar_json(eval_pf_twopoint_kostka(alpha, chi, xi, A));
  } else {
    throw std::invalid_argument("unknown eval mode: " + mode);
  }
  out.emit_json(result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact limits of derivatives of characteristic-polynomial moments"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out.path, "Output file (default: stdout)");
  app.add_flag("--numeric", out.numeric, "Also emit round-to-nearest doubles");

  std::string shape_s, weight_s, points_s, alpha_s, beta_s, chi_s = "0", c_s = "0", t_s,
              job_path, suite = "cross";
  int k = 0, d = 0, h = -1, h1 = 0, h2 = 0, n = 0, n1 = -1, n2 = -1, cases = 100, max_k = 3;
  long N = 0;
  std::uint64_t seed = 7;
  bool serial = false, grid = false;

  auto* c_kostka = app.add_subcommand("kostka", "Kostka number of a shape and content");
  c_kostka->add_option("--shape", shape_s, "Partition, e.g. 3,1")->required();
  c_kostka->add_option("--weight", weight_s, "Content, e.g. 2,1,1")->required();

  auto* c_schur = app.add_subcommand("schur", "Schur polynomial value at exact points");
  c_schur->add_option("--shape", shape_s, "Partition")->required();
  c_schur->add_option("--points", points_s, "Comma-separated exact scalars")->required();

  auto* c_dop = app.add_subcommand("dop", "Derivative-symbol operator D_k");
  c_dop->add_option("--k", k, "Order k >= 1")->required();
  c_dop->add_option("--d", d, "Ambient arity (default k)");

  auto* c_eval = app.add_subcommand("eval", "Evaluate a limit from a JSON job file");
  c_eval->add_option("--job", job_path, "Job description file")->required();

  auto* c_gin = app.add_subcommand("ginibre", "Ginibre bulk-limit moment polynomials");
  // "--h" would collide with the default "-h" help alias.
  c_gin->set_help_flag("--help", "Print help and exit");
  c_gin->add_option("--k", k, "Number of moment factors")->required();
  c_gin->add_option("--alpha", alpha_s, "Derivative orders, e.g. 2,1");
  c_gin->add_option("--h", h, "Plain factors for the first-derivative form");
  c_gin->add_option("--n", n, "Single higher derivative order");
  c_gin->add_option("--n1", n1, "First of two higher derivative orders");
  c_gin->add_option("--n2", n2, "Second of two higher derivative orders");
  c_gin->add_option("--chi", chi_s, "Evaluate the polynomial at t = |chi|^2");
  c_gin->add_flag("--grid", grid, "First-derivative moment grid k=1..max-k, h=0..k");
  c_gin->add_option("--max-k", max_k, "Grid extent");

  auto* c_cue = app.add_subcommand("cue", "CUE moments: finite N, disc limit, circle limit");
  std::string cue_mode = "finite";
  c_cue->add_option("--mode", cue_mode, "finite | disc | circle")
      ->check(CLI::IsMember({"finite", "disc", "circle"}));
  c_cue->add_option("--N", N, "Matrix dimension (finite mode)");
  c_cue->add_option("--k", k, "Number of moment factors")->required();
  c_cue->add_option("--h1", h1, "First-derivative pairs");
  c_cue->add_option("--h2", h2, "Second-derivative pairs (finite mode)");
  c_cue->add_option("--chi", chi_s, "Limiting point (exact)");
  c_cue->add_option("--t", t_s, "t = |chi|^2 for the disc limit");
  c_cue->add_option("--c", c_s, "Normalization parameter for the circle limit");

  auto* c_verify = app.add_subcommand("verify", "Cross-route verification suite");
  c_verify->add_option("--suite", suite, "Suite name (cross)");
  c_verify->add_option("--seed", seed, "Base seed");
  c_verify->add_option("--max-k", max_k, "Largest dimension");
  c_verify->add_option("--cases", cases, "Number of cases");
  c_verify->add_flag("--serial", serial, "Use the serial reference runner");

  // Let output flags appear after the subcommand name as well.
  for (CLI::App* sub : {c_kostka, c_schur, c_dop, c_eval, c_gin, c_cue, c_verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (c_kostka->parsed()) {
      Partition shape = parse_int_list(shape_s);
      WeightVector weight = parse_int_list(weight_s);
      Integer kn = kostka(shape, weight);
      Json j;
      j["shape"] = shape_s;
      j["weight"] = weight_s;
      j["kostka"] = rational_str(Rational(kn));
      out.emit_json(j);
      return 0;
    }
    if (c_schur->parsed()) {
      Partition shape = parse_int_list(shape_s);
      auto pts = parse_scalar_list(points_s);
      Json j;
      j["shape"] = shape_s;
      j["value"] = scalar_json(schur_eval_kostka(shape, pts));
      bool distinct = true;
      for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b)
          if (pts[a] == pts[b]) distinct = false;
      if (distinct) j["value_bialternant"] = scalar_json(schur_eval_bialternant(shape, pts));
      out.emit_json(j);
      return 0;
    }
    if (c_dop->parsed()) {
      if (d == 0) d = k;
      DiffOperator op = build_D(k, d);
      Json j;
      j["k"] = k;
      j["d"] = d;
      j["operator"] = op.str();
      out.emit_json(j);
      return 0;
    }
    if (c_eval->parsed()) return run_eval_job(job_path, out);
    if (c_gin->parsed()) {
      if (grid) {
        std::vector<std::vector<std::string>> rows;
        for (int kk = 1; kk <= max_k; ++kk)
          for (int hh = 0; hh <= kk; ++hh) {
            GinibreMomentResult r = ginibre_moment_first(kk, hh);
            std::ostringstream poly;
            for (const auto& [m, c] : r.poly) {
              if (poly.tellp() > 0) poly << " + ";
              poly << rational_str(c) << "*t^" << m;
            }
            rows.push_back({std::to_string(kk), std::to_string(hh), poly.str()});
          }
        write_output(csv_table({"k", "h", "poly_t"}, rows), out.path);
        return 0;
      }
      GinibreMomentResult r;
      if (!alpha_s.empty()) {
        std::vector<int> av = parse_int_list(alpha_s);
        r = ginibre_moment_general(k, WeightVector(av.begin(), av.end()));
      } else if (h >= 0) {
        r = ginibre_moment_first(k, h);
      } else if (n2 >= 0) {
        r = ginibre_moment_two_higher(k, n1, n2);
      } else {
        r = ginibre_moment_one_higher(k, n);
      }
      Json j = ginibre_result_json(r);
      ExactScalar chi = ExactScalar::from_string(chi_s);
      if (!chi.is_zero() || out.numeric) {
        Rational t = (chi * chi.conj()).re();
        j["t"] = rational_str(t);
        j["value_at_t"] = rational_str(tpoly_eval(r.poly, t));
        if (out.numeric) j["value_at_t_numeric"] = double_str(tpoly_eval(r.poly, t).get_d());
      }
      out.emit_json(j);
      return 0;
    }
    if (c_cue->parsed()) {
      Json j;
      j["k"] = k;
      j["h1"] = h1;
      if (cue_mode == "finite") {
        if (N < 1) throw std::invalid_argument("finite mode needs --N >= 1");
        ExactScalar chi = ExactScalar::from_string(chi_s);
        ExactScalar v = cue_finite_moment(N, k, h1, h2, chi);
        j["N"] = N;
        j["h2"] = h2;
        j["chi"] = chi.str();
        j["value"] = scalar_json(v);
        if (out.numeric) {
          j["value_numeric_re"] = double_str(v.to_double_re());
          j["value_numeric_im"] = double_str(v.to_double_im());
        }
      } else if (cue_mode == "disc") {
        if (t_s.empty()) throw std::invalid_argument("disc mode needs --t");
        Rational t = ExactScalar::from_string(t_s).re();
        Rational v = cue_disc_limit(k, h1, t);
        j["t"] = rational_str(t);
        j["value"] = rational_str(v);
        if (out.numeric) j["value_numeric"] = double_str(v.get_d());
      } else {
        Rational c = ExactScalar::from_string(c_s).re();
        Rational v = cue_circle_limit_d1_exact(k, h1, c);
        j["c"] = rational_str(c);
        j["value"] = rational_str(v);
        j["value_numeric"] = double_str(v.get_d());
      }
      out.emit_json(j);
      return 0;
    }
    if (c_verify->parsed()) {
      if (suite != "cross") throw std::invalid_argument("unknown suite: " + suite);
      VerifyOptions opt;
      opt.seed = seed;
      opt.max_k = max_k;
      opt.cases = cases;
      auto results = serial ? run_cross_suite_serial(opt) : run_cross_suite(opt);
      std::ostringstream os;
      int failures = 0;
      for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << " " << r.name;
        if (!r.detail.empty()) os << "  " << r.detail;
        os << "\n";
        if (!r.pass) ++failures;
      }
      os << (failures == 0 ? "all cases passed" : "FAILURES: " + std::to_string(failures))
         << " (" << results.size() << " cases, threads=" << (serial ? 1 : verify_thread_count())
         << ")\n";
      write_output(os.str(), out.path);
      return failures == 0 ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
