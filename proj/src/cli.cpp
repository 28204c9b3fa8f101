#include "ising/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "ising/cylinder_tm.hpp"
#include "ising/effspin.hpp"
#include "ising/oracle.hpp"
#include "ising/pfaffian.hpp"
#include "ising/qseries.hpp"
#include "ising/spectral.hpp"
#include "ising/thermo.hpp"

namespace ising::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kPfaffianMaxSites = 64;  // dense 4LM x 4LM determinant
constexpr int kEffspinCheckMaxM = 12;
constexpr int kDenseT2MaxM = 8;

const char* const kCheckNames[] = {
    "oracle-vs-pfaffian", "pfaffian-vs-tm",   "tm-vs-spectral",   "pfaffian-vs-spectral",
    "detM-vs-spectral",   "schur-complement", "char-poly",        "sin-ratio",
    "half-angle",         "tan-identities",   "prod-lambda",      "T2-pairing",
    "eigvec-orthonormal", "cauchy-inverse",   "detY-vs-effspin",  "detY-vs-closedL0",
    "casimir-fd",         "casimir-vs-magnetization",             "zsres-decay",
};

struct Coupling {
  std::string label;
  Real kh, kv;
};

std::vector<Coupling> validation_couplings() {
  Real kc = critical_coupling_isotropic().K_c;
  return {{"K=0.2", Real("0.2"), Real("0.2")},
          {"K=Kc", kc, kc},
          {"K=0.7", Real("0.7"), Real("0.7")},
          {"Kh=0.2,Kv=0.6", Real("0.2"), Real("0.6")}};
}

std::vector<Coupling> temperature_regimes() {
  Real kc = critical_coupling_isotropic().K_c;
  return {{"K=0.3", Real("0.3"), Real("0.3")}, {"K=Kc", kc, kc}, {"K=0.6", Real("0.6"), Real("0.6")}};
}

std::string size_label(const LatticeSpec& s) {
  return std::to_string(s.L) + "x" + std::to_string(s.M) + (s.bc == VerticalBoundary::periodic ? "p" : "");
}

Real rel(const Real& a, const Real& b) {
  Real scale = std::max(abs(a), abs(b));
  return scale == 0 ? Real(0) : Real(abs(a - b) / scale);
}

class Suite {
 public:
  Suite(const ValidateOptions& o) : opts_(o), ctx_(o.digits) {}

  bool wanted(const std::string& name) const { return opts_.only.empty() || opts_.only == name; }

  Real tol(int k) const { return std::min(ctx_.tol(k), Real(opts_.tol_cap)); }

  // Runs one check; the callback returns the defect.
  void check(const std::string& name, const std::string& label, const Real& tolerance,
             const std::function<Real()>& defect) {
    if (!wanted(name)) return;
    CheckRow row{name, label, Real(0), tolerance, "pass", ""};
    try {
      row.defect = defect();
      if (!(row.defect <= tolerance)) row.status = "fail";
    } catch (const PrecisionError& e) {
      row.status = "precision";
      row.detail = e.what();
    } catch (const DomainError& e) {
      row.status = "domain";
      row.detail = e.what();
    } catch (const std::exception& e) {
      row.status = "error";
      row.detail = e.what();
    }
    rows_.push_back(std::move(row));
  }

  std::vector<CheckRow> run() {
    PrecisionScope scope(ctx_);
    auto sizes = opts_.sizes.empty() ? default_sizes() : opts_.sizes;
    for (const auto& spec : sizes) {
      spec.validate();
      for (const auto& c : validation_couplings()) lattice_checks(spec, c);
    }
    std::vector<int> ms;
    for (const auto& s : sizes)
      if (s.M % 2 == 0 && s.bc == VerticalBoundary::open) ms.push_back(s.M);
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    for (int M : ms)
      for (const auto& c : temperature_regimes()) spectrum_checks(M, c, sizes);
    return std::move(rows_);
  }

 private:
  void lattice_checks(const LatticeSpec& spec, const Coupling& c) {
    const std::string label = size_label(spec) + " " + c.label;
    auto grid = CouplingGrid::homogeneous(spec, c.kh, c.kv);
    const bool spectral_ok = spec.bc == VerticalBoundary::open && spec.M % 2 == 0;
    const bool pf_ok = spec.sites() <= kPfaffianMaxSites;
    std::optional<Real> pf, tm, sp;
    auto get_pf = [&]() -> const Real& {
      if (!pf) pf = logZ_pfaffian(ctx_, grid);
      return *pf;
    };
    auto get_tm = [&]() -> const Real& {
      if (!tm) tm = logZ_cylinder(ctx_, grid);
      return *tm;
    };
    auto get_sp = [&]() -> const Real& {
      if (!sp) {
        auto h = HomogeneousCouplings::from_couplings(c.kh, c.kv);
        sp = logZ_spectral(ctx_, spec, h.z, h.t);
      }
      return *sp;
    };
    if (spec.sites() <= kOracleMaxSites && pf_ok)
      check("oracle-vs-pfaffian", label, tol(10), [&] { return rel(brute_force_logZ(ctx_, grid).logZ, get_pf()); });
    if (pf_ok) check("pfaffian-vs-tm", label, tol(10), [&] { return rel(get_pf(), get_tm()); });
    if (spectral_ok) {
      check("tm-vs-spectral", label, tol(10), [&] { return rel(get_tm(), get_sp()); });
      if (pf_ok) check("pfaffian-vs-spectral", label, tol(10), [&] { return rel(get_pf(), get_sp()); });
      check("detM-vs-spectral", label, tol(10), [&] {
        auto h = HomogeneousCouplings::from_couplings(c.kh, c.kv);
        return rel(logZ_via_detM(ctx_, Real(spec.L), find_modes(ctx_, h.z, h.t, spec.M)), get_sp());
      });
      if (pf_ok && spec.sites() <= 36)
        check("schur-complement", label, tol(10), [&] { return schur_check(ctx_, grid); });
    }
  }

  void spectrum_checks(int M, const Coupling& c, const std::vector<LatticeSpec>& sizes) {
    const std::string label = "M=" + std::to_string(M) + " " + c.label;
    auto h = HomogeneousCouplings::from_couplings(c.kh, c.kv);
    std::optional<Spectrum> spec;
    std::optional<ModeDefects> defects;
    auto spectrum = [&]() -> const Spectrum& {
      if (!spec) spec = find_modes(ctx_, h.z, h.t, M);
      return *spec;
    };
    auto d = [&]() -> const ModeDefects& {
      if (!defects) defects = mode_defects(spectrum());
      return *defects;
    };
    check("char-poly", label, tol(8), [&] { return d().char_poly; });
    check("sin-ratio", label, tol(8), [&] { return d().sin_ratio; });
    check("half-angle", label, tol(8), [&] { return d().half_angle; });
    check("tan-identities", label, tol(10), [&] { return std::max(d().tan_product, d().tan_m_half); });
    check("prod-lambda", label, tol(8), [&] { return d().prod_lambda + Real(std::abs(d().sigma_sum)); });
    if (M <= kDenseT2MaxM) {
      check("T2-pairing", label, tol(15), [&] {
        auto ev = symmetric_eigenvalues(build_T2(h.z, h.t, M).full(), ctx_.tol(4));
        std::vector<Real> expect;
        for (const auto& md : spectrum().modes) {
          expect.push_back(md.lambda_hat);
          expect.push_back(1 / md.lambda_hat);
        }
        std::sort(ev.begin(), ev.end());
        std::sort(expect.begin(), expect.end());
        Real worst = 0;
        for (std::size_t i = 0; i < ev.size(); ++i) worst = std::max(worst, rel(ev[i], expect[i]));
        return worst;
      });
      check("eigvec-orthonormal", label, tol(8), [&] {
        auto x = eigvec_matrix(spectrum());
        return max_abs_diff(x * x.transpose(), DenseMatrix::identity(x.rows()));
      });
    }
    check("cauchy-inverse", label, tol(8), [&] { return cauchy_inverse_defect(residual_system(spectrum(), Real(1))); });
    if (M <= kEffspinCheckMaxM) {
      for (const char* L : {"0", "1", "2.5", "10"}) {
        check("detY-vs-effspin", label + " L=" + L, tol(8), [&] {
          auto rs = residual_system(spectrum(), Real(L));
          Real a = log_zsres(rs);
          Real b = log_z_eff(build_eff_model(spectrum(), rs));
          return Real(abs(exp(a - b) - 1));
        });
      }
      check("detY-vs-closedL0", label, tol(8), [&] {
        return Real(abs(exp(log_zsres(residual_system(spectrum(), Real(0))) - log_zsres_closed_L0(spectrum())) - 1));
      });
      std::vector<int> lengths;
      for (const auto& s : sizes)
        if (s.M == M && s.bc == VerticalBoundary::open) lengths.push_back(s.L);
      for (int L : lengths) {
        const std::string ll = label + " L=" + std::to_string(L);
        check("casimir-fd", ll, Real("1e-6"), [&] {
          return rel(casimir_force_strip(ctx_, Real(L), M, h.z, h.t), casimir_force_strip_fd(ctx_, Real(L), M, h.z, h.t));
        });
        check("casimir-vs-magnetization", ll, tol(8), [&] {
          auto rs = residual_system(spectrum(), Real(L));
          return rel(casimir_force_strip(spectrum(), rs), -magnetization_eff(build_eff_model(spectrum(), rs)));
        });
      }
    }
    if (c.label == "K=0.3")
      check("zsres-decay", label + " L=" + std::to_string(10 * M), Real("1e-8"),
            [&] { return Real(abs(log_zsres(residual_system(spectrum(), Real(10 * M))))); });
  }

  ValidateOptions opts_;
  Context ctx_;
  std::vector<CheckRow> rows_;
};

// Output rows share one column list; missing values print as empty fields.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& out, bool json) const {
    if (json) {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json o;
        for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = r[i];
        arr.push_back(o);
      }
      out << ordered_json{{"rows", arr}}.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
      out << '\n';
    }
  }
};

const std::vector<std::string> kReportColumns = {"Kh", "Kv", "L", "M", "logZ", "F", "F_strip", "F_strip_res",
                                                 "casimir_strip"};

std::vector<std::string> report_fields(const ThermoReport& r, int digits) {
  return {format_real(r.Kh, digits),          format_real(r.Kv, digits),          std::to_string(r.L),
          std::to_string(r.M),                format_real(r.logZ, digits),        format_real(r.F, digits),
          format_real(r.F_strip, digits),     format_real(r.F_strip_res, digits), format_real(r.casimir_strip, digits)};
}

struct Sink {
  std::ostream* stream;
  std::ofstream file;
  explicit Sink(const std::string& path, std::ostream& fallback) : stream(&fallback) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw DomainError("cannot open output file '" + path + "'");
    stream = &file;
  }
};

VerticalBoundary parse_bc(const std::string& s) {
  if (s == "open") return VerticalBoundary::open;
  if (s == "periodic") return VerticalBoundary::periodic;
  throw DomainError("--bc must be open or periodic");
}

struct Common {
  int digits = 40;
  std::string out;
  bool json = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--digits", c.digits, "working precision in decimal digits (>= 15)");
  app->add_option("--out", c.out, "write output to this file instead of stdout");
  app->add_flag("--json", c.json, "JSON instead of CSV");
}

struct EvalArgs {
  std::string path = "auto";
  int L = 0, M = 0;
  std::string kh, kv, grid, bc = "open";
};

int cmd_eval(const Common& c, const EvalArgs& a, std::ostream& out) {
  Context ctx(c.digits);
  PrecisionScope scope(ctx);
  const bool scalars = !a.kh.empty() || !a.kv.empty();
  if (scalars == !a.grid.empty()) throw DomainError("give either --Kh/--Kv or --grid, not both and not neither");
  const auto bc = parse_bc(a.bc);
  std::optional<CouplingGrid> grid;
  LatticeSpec spec{a.L, a.M, bc};
  if (scalars) {
    if (a.kh.empty() || a.kv.empty()) throw DomainError("--Kh and --Kv are both required");
    spec.validate();
    grid = CouplingGrid::homogeneous(spec, parse_real(a.kh), parse_real(a.kv));
  } else {
    if (a.L == 0 && a.M == 0) spec = grid_csv_extent(a.grid, bc);
    spec.validate();
    grid = load_grid_csv(a.grid, spec);
  }
  std::string path = a.path;
  if (path == "auto") {
    bool spectral_ok = grid->is_homogeneous() && bc == VerticalBoundary::open && spec.M % 2 == 0 &&
                       grid->kh(1, 1) > 0 && grid->kv(1, 1) > 0;
    path = spectral_ok ? "spectral" : "pfaffian";
  }
  Table t{kReportColumns, {}};
  std::string kh = scalars ? format_real(parse_real(a.kh), c.digits) : "";
  std::string kv = scalars ? format_real(parse_real(a.kv), c.digits) : "";
  auto partial = [&](const Real& logZ) {
    return std::vector<std::string>{kh, kv, std::to_string(spec.L), std::to_string(spec.M),
                                    format_real(logZ, c.digits), format_real(Real(-logZ), c.digits), "", "", ""};
  };
  if (path == "spectral") {
    if (!grid->is_homogeneous()) throw DomainError("spectral path needs homogeneous couplings");
    auto r = report(ctx, spec, grid->kh(1, 1), grid->kv(1, 1));
    auto f = report_fields(r, c.digits);
    if (!scalars) f[0] = f[1] = "";
    t.rows.push_back(f);
  } else if (path == "oracle") {
    t.rows.push_back(partial(brute_force_logZ(ctx, *grid).logZ));
  } else if (path == "pfaffian") {
    t.rows.push_back(partial(logZ_pfaffian(ctx, *grid)));
  } else if (path == "tm") {
    t.rows.push_back(partial(logZ_cylinder(ctx, *grid)));
  } else {
    throw DomainError("--path must be oracle, pfaffian, tm, spectral or auto");
  }
  t.write(out, c.json);
  return 0;
}

struct SweepArgs {
  std::string sweep_k, sweep_t, sizes;
  int L = 0, M = 0;
  int threads = 1;
};

std::vector<Real> sweep_couplings(const std::string& k, const std::string& t) {
  if (k.empty() == t.empty()) throw DomainError("give exactly one of --sweep-K and --sweep-T");
  if (!k.empty()) return parse_range(k);
  const Real kc = critical_coupling_isotropic().K_c;
  std::vector<Real> out;
  for (const auto& r : parse_range(t)) {
    if (!(r > 0)) throw DomainError("T/T_c must be positive");
    out.push_back(kc / r);
  }
  return out;
}

int cmd_sweep(const Common& c, const SweepArgs& a, std::ostream& out) {
  Context ctx(c.digits);
  PrecisionScope scope(ctx);
  auto Ks = sweep_couplings(a.sweep_k, a.sweep_t);
  std::vector<LatticeSpec> sizes;
  if (!a.sizes.empty()) sizes = parse_sizes(a.sizes);
  else sizes.push_back({a.L, a.M});
  for (const auto& s : sizes) s.validate();
  if (a.threads < 1) throw DomainError("--threads must be >= 1");

  struct Point {
    Real K;
    LatticeSpec spec;
  };
  std::vector<Point> points;
  for (const auto& K : Ks)
    for (const auto& s : sizes) points.push_back({K, s});
  std::vector<std::vector<std::string>> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    PrecisionScope inner(ctx);
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        const auto& p = points[i];
        auto f = report_fields(report(ctx, p.spec, p.K, p.K), c.digits);
        try {
          auto q = free_energy_pieces(ctx, p.K);
          for (const Real* v : {&q.q, &q.f_b, &q.f_s, &q.f_c}) f.push_back(format_real(*v, c.digits));
        } catch (const DomainError&) {
          // at or too near the critical point the products are not evaluated
          f.insert(f.end(), 4, "");
        }
        rows[i] = std::move(f);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (a.threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < a.threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Table t{kReportColumns, std::move(rows)};
  for (const char* col : {"q", "f_b", "f_s", "f_c"}) t.columns.push_back(col);
  t.write(out, c.json);
  return 0;
}

struct QArgs {
  std::string sweep_k, sweep_t;
  bool printed = false;
};

int cmd_qseries(const Common& c, const QArgs& a, std::ostream& out) {
  Context ctx(c.digits);
  PrecisionScope scope(ctx);
  auto Ks = sweep_couplings(a.sweep_k, a.sweep_t);
  Table t{{"K", "q", "f_b", "f_s", "f_c", "phase", "near_critical"}, {}};
  for (const auto& K : Ks) {
    auto p = free_energy_pieces(ctx, K, !a.printed);
    t.rows.push_back({format_real(K, c.digits), format_real(p.q, c.digits), format_real(p.f_b, c.digits),
                      format_real(p.f_s, c.digits), format_real(p.f_c, c.digits),
                      p.phase == Phase::below ? "below" : "above", p.near_critical ? "1" : "0"});
  }
  t.write(out, c.json);
  return 0;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names(std::begin(kCheckNames), std::end(kCheckNames));
  return names;
}

std::vector<LatticeSpec> default_sizes() { return {{2, 2}, {2, 4}, {3, 4}, {4, 4}, {4, 6}}; }

std::vector<CheckRow> run_validation(const ValidateOptions& opts) {
  if (!opts.only.empty() &&
      std::find(check_names().begin(), check_names().end(), opts.only) == check_names().end())
    throw DomainError("unknown check '" + opts.only + "'");
  Suite suite(opts);
  return suite.run();
}

int validation_exit_code(const std::vector<CheckRow>& rows) {
  int code = 0;
  for (const auto& r : rows) {
    if (r.status == "precision") return 3;
    if (r.status == "domain") code = 2;
    else if (r.status != "pass" && code == 0) code = 1;
  }
  return code;
}

void write_check_table(std::ostream& out, const std::vector<CheckRow>& rows, bool json) {
  Table t{{"check", "case", "defect", "tolerance", "status", "detail"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({r.check, r.label, format_real(r.defect, 3), format_real(r.tolerance, 2), r.status,
                      json ? r.detail : (r.detail.empty() ? "" : "\"" + r.detail + "\"")});
  t.write(out, json);
}

std::vector<Real> parse_range(const std::string& text) {
  auto first = text.find(':');
  auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos) throw DomainError("range must look like a:b:n, got '" + text + "'");
  Real a = parse_real(text.substr(0, first));
  Real b = parse_real(text.substr(first + 1, second - first - 1));
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(text.substr(second + 1), &used);
    if (used != text.size() - second - 1) n = 0;
  } catch (const std::exception&) {
    n = 0;
  }
  if (n < 1) throw DomainError("range point count must be a positive integer in '" + text + "'");
  std::vector<Real> out;
  for (int i = 0; i < n; ++i) out.push_back(n == 1 ? a : Real(a + (b - a) * i / (n - 1)));
  return out;
}

std::vector<LatticeSpec> parse_sizes(const std::string& text) {
  std::vector<LatticeSpec> out;
  std::stringstream ss(text);
  std::string tok;
  auto to_int = [&text](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw DomainError("bad size list '" + text + "'");
    return v;
  };
  while (std::getline(ss, tok, ',')) {
    auto x = tok.find('x');
    if (x == std::string::npos) {
      int n = to_int(tok);
      out.push_back({n, n});
    } else {
      out.push_back({to_int(tok.substr(0, x)), to_int(tok.substr(x + 1))});
    }
  }
  if (out.empty()) throw DomainError("empty size list");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact partition functions of the finite two-dimensional Ising model"};
  app.require_subcommand(1);

  Common ce, cv, cs, cq;
  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "logZ of one lattice by one path");
  add_common(eval, ce);
  eval->add_option("--path", ea.path, "oracle, pfaffian, tm, spectral or auto");
  eval->add_option("-L", ea.L, "columns");
  eval->add_option("-M", ea.M, "rows");
  eval->add_option("--Kh", ea.kh, "horizontal reduced coupling");
  eval->add_option("--Kv", ea.kv, "vertical reduced coupling");
  eval->add_option("--grid", ea.grid, "coupling grid CSV (ell,m,Kh,Kv)");
  eval->add_option("--bc", ea.bc, "vertical boundary: open or periodic");

  ValidateOptions vo;
  std::string vsizes;
  auto* validate = app.add_subcommand("validate", "cross-path and identity checks");
  add_common(validate, cv);
  validate->add_option("--sizes", vsizes, "lattice sizes, e.g. 4,4x6");
  validate->add_option("--only", vo.only, "run a single check");
  validate->add_option("--tol", vo.tol_cap, "upper cap on every digit-relative tolerance");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "thermodynamics over isotropic couplings and sizes");
  add_common(sweep, cs);
  sweep->add_option("--sweep-K", sa.sweep_k, "couplings a:b:n");
  sweep->add_option("--sweep-T", sa.sweep_t, "T/T_c values a:b:n");
  sweep->add_option("--sizes", sa.sizes, "lattice sizes, e.g. 8,16x8");
  sweep->add_option("-L", sa.L, "columns when --sizes is absent");
  sweep->add_option("-M", sa.M, "rows when --sizes is absent");
  sweep->add_option("--threads", sa.threads, "worker threads");

  QArgs qa;
  auto* qs = app.add_subcommand("qseries", "bulk, surface and corner free energies from the products");
  add_common(qs, cq);
  qs->add_option("--sweep-K", qa.sweep_k, "couplings a:b:n");
  qs->add_option("--sweep-T", qa.sweep_t, "T/T_c values a:b:n");
  qs->add_flag("--printed", qa.printed, "keep the uncorrected corner constant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (eval->parsed()) {
      Sink sink(ce.out, out);
      return cmd_eval(ce, ea, *sink.stream);
    }
    if (validate->parsed()) {
      vo.digits = cv.digits;
      if (!vsizes.empty()) vo.sizes = parse_sizes(vsizes);
      Context check(vo.digits);
      Sink sink(cv.out, out);
      auto rows = run_validation(vo);
      write_check_table(*sink.stream, rows, cv.json);
      return validation_exit_code(rows);
    }
    if (sweep->parsed()) {
      Sink sink(cs.out, out);
      return cmd_sweep(cs, sa, *sink.stream);
    }
    Sink sink(cq.out, out);
    return cmd_qseries(cq, qa, *sink.stream);
  } catch (const PrecisionError& e) {
    err << "precision failure: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ising::cli
