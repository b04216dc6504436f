#include "hartogs/report_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hartogs/dft.hpp"
#include "hartogs/smoothing.hpp"

namespace hartogs {

namespace {

Complex parse_complex(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(std::string(what) + ": expected [re, im]");
  return {j[0].get<Scalar>(), j[1].get<Scalar>()};
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

std::function<Complex(Scalar)> profile_expr(const Json& p) {
  const std::string kind = p.at("kind").get<std::string>();
  if (kind == "poly") {
    std::vector<Complex> coeffs;
    for (const auto& c : p.at("coeffs"))
      coeffs.push_back(parse_complex(c, "poly coeff"));
    return [coeffs](Scalar r) {
      Complex acc = 0;
      Scalar rk = 1;
      for (const Complex& c : coeffs) {
        acc += c * rk;
        rk *= r;
      }
      return acc;
    };
  }
  if (kind == "cutoff" || kind == "cutoff_over_r") {
    const Scalar a = p.at("a").get<Scalar>();
    const Scalar b = p.at("b").get<Scalar>();
    const Complex amp = parse_complex(p.at("amp"), "cutoff amp");
    const SmoothSwitch sw(a, b);
    const bool over_r = kind == "cutoff_over_r";
    return [sw, amp, over_r](Scalar r) {
      const Scalar s = sw(r);
      if (s == 0.0) return Complex(0, 0);
      return over_r ? amp * (s / r) : amp * s;
    };
  }
  if (kind == "wermer") {
    const Scalar scale = p.at("scale").get<Scalar>();
    return [scale](Scalar r) {
      const Scalar r2 = r * r, r4 = r2 * r2;
      return scale * Complex(r * (1 - r4), r * (1 - r2));
    };
  }
  throw ParseError("profile: unknown kind '" + kind + "'");
}

RadialProfile parse_profile(const Json& p, const ArrayXd& radii) {
  const std::string kind = p.at("kind").get<std::string>();
  if (kind == "samples") {
    const Json& vals = p.at("values");
    if (static_cast<Eigen::Index>(vals.size()) != radii.size())
      throw ParseError("samples profile: length != grid radii count");
    ArrayXcd samples(radii.size());
    for (Eigen::Index i = 0; i < radii.size(); ++i)
      samples[i] = parse_complex(vals[i], "sample");
    Complex at0(0, 0);
    if (p.contains("at0")) at0 = parse_complex(p.at("at0"), "at0");
    return RadialProfile(radii, std::move(samples), at0);
  }
  return RadialProfile(radii, profile_expr(p));
}

PolarGrid grid_from_json(const Json& j, int max_mode) {
  int n_radii = 64;
  Scalar r_min = 0.01;
  int n_theta = 0;
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    if (g.contains("radii")) {
      ArrayXd radii(g.at("radii").size());
      for (Eigen::Index i = 0; i < radii.size(); ++i)
        radii[i] = g.at("radii")[i].get<Scalar>();
      const int nt = g.contains("n_theta")
                         ? g.at("n_theta").get<int>()
                         : std::max(256, next_power_of_two(4 * max_mode + 4));
      return PolarGrid(std::move(radii), nt);
    }
    if (g.contains("n_radii")) n_radii = g.at("n_radii").get<int>();
    if (g.contains("r_min")) r_min = g.at("r_min").get<Scalar>();
    if (g.contains("n_theta")) n_theta = g.at("n_theta").get<int>();
  }
  PolarGrid base = PolarGrid::make_default(max_mode, n_radii, r_min);
  if (n_theta == 0) return base;
  return PolarGrid(base.radii(), n_theta);
}

}  // namespace

RadialModeSeries parse_mode_json(const Json& j) {
  if (!j.contains("m") || !j.contains("components"))
    throw ParseError("mode form: need fields 'm' and 'components'");
  const int m = j.at("m").get<int>();
  const Json& comps = j.at("components");
  if (!comps.is_array() || static_cast<int>(comps.size()) != m)
    throw ParseError("mode form: 'components' must list m mode arrays");
  int max_mode = 1;
  for (const auto& comp : comps)
    for (const auto& entry : comp)
      max_mode = std::max(max_mode, std::abs(entry.at("n").get<int>()));
  const PolarGrid grid = grid_from_json(j, max_mode);

  std::vector<RadialModeSeries::ModeMap> modes(m);
  for (int jc = 0; jc < m; ++jc) {
    for (const auto& entry : comps[jc]) {
      const int n = entry.at("n").get<int>();
      if (modes[jc].count(n))
        throw ParseError("mode form: duplicate mode n = " + std::to_string(n));
      modes[jc].emplace(n, parse_profile(entry.at("profile"), grid.radii()));
    }
  }
  return RadialModeSeries(grid, std::move(modes));
}

RadialModeSeries parse_sample_csv(std::istream& in, int max_mode) {
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("sample csv: empty input");
  {
    std::string h = line;
    h.erase(std::remove_if(h.begin(), h.end(), ::isspace), h.end());
    if (h != "r,theta,j,re,im")
      throw ParseError("sample csv: header must be r,theta,j,re,im");
  }
  struct Row {
    Scalar r, theta;
    int j;
    Complex v;
  };
  std::vector<Row> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    Row row;
    char c1, c2, c3, c4;
    Scalar re, im;
    if (!(ls >> row.r >> c1 >> row.theta >> c2 >> row.j >> c3 >> re >> c4 >>
          im) ||
        c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',')
      throw ParseError("sample csv: malformed line " + std::to_string(lineno));
    row.v = Complex(re, im);
    rows.push_back(row);
  }
  if (rows.empty()) throw ParseError("sample csv: no data rows");

  std::vector<Scalar> radii, thetas;
  int m = 0;
  for (const Row& row : rows) {
    radii.push_back(row.r);
    thetas.push_back(row.theta);
    m = std::max(m, row.j);
  }
  auto unique_sorted = [](std::vector<Scalar>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(),
                        [](Scalar a, Scalar b) { return std::abs(a - b) < 1e-12; }),
            v.end());
  };
  unique_sorted(radii);
  unique_sorted(thetas);
  const int nt = static_cast<int>(thetas.size());
  if (!is_power_of_two(nt))
    throw ParseError("sample csv: angle count must be a power of two");
  for (int k = 0; k < nt; ++k)
    if (std::abs(thetas[k] - 2 * std::numbers::pi * k / nt) > 1e-9)
      throw ParseError("sample csv: angles must be theta_k = 2 pi k / K");

  ArrayXd r_arr(radii.size());
  for (size_t i = 0; i < radii.size(); ++i) r_arr[i] = radii[i];
  PolarGrid grid(std::move(r_arr), nt);

  std::vector<ArrayXXcd> values(m, ArrayXXcd::Zero(grid.n_radii(), nt));
  std::vector<std::vector<char>> seen(
      m, std::vector<char>(grid.n_radii() * nt, 0));
  auto r_index = [&](Scalar r) {
    const auto it = std::lower_bound(radii.begin(), radii.end(), r - 1e-12);
    return static_cast<int>(it - radii.begin());
  };
  auto t_index = [&](Scalar th) {
    return static_cast<int>(std::lround(th * nt / (2 * std::numbers::pi))) % nt;
  };
  for (const Row& row : rows) {
    if (row.j < 1 || row.j > m)
      throw ParseError("sample csv: component index out of range");
    const int ri = r_index(row.r), ti = t_index(row.theta);
    values[row.j - 1](ri, ti) = row.v;
    seen[row.j - 1][ri * nt + ti] = 1;
  }
  for (int j = 0; j < m; ++j)
    for (char s : seen[j])
      if (!s) throw ParseError("sample csv: incomplete grid coverage");
  return modes_from_samples(DiscSample(grid, std::move(values)), max_mode);
}

RadialModeSeries load_series(const std::string& path, int max_mode) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return parse_sample_csv(in, max_mode);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("json parse failure in " + path + ": " + e.what());
  }
  return parse_mode_json(j);
}

namespace {

Json series_to_json(const RadialModeSeries& series) {
  Json out;
  out["m"] = series.components();
  Json radii = Json::array();
  for (int i = 0; i < series.grid().n_radii(); ++i)
    radii.push_back(series.grid().radii()[i]);
  out["grid"] = {{"radii", radii}, {"n_theta", series.grid().n_theta()}};
  Json comps = Json::array();
  for (int j = 0; j < series.components(); ++j) {
    Json comp = Json::array();
    for (const auto& [n, profile] : series.modes(j)) {
      Json vals = Json::array();
      for (Eigen::Index i = 0; i < profile.samples().size(); ++i)
        vals.push_back(complex_to_json(profile.samples()[i]));
      Json entry = {{"n", n},
                    {"profile",
                     {{"kind", "samples"},
                      {"values", vals},
                      {"at0", complex_to_json(profile.at_zero())}}}};
      comp.push_back(entry);
    }
    comps.push_back(comp);
  }
  out["components"] = comps;
  return out;
}

}  // namespace

Json approximant_to_json(const SmoothApproximant& g, bool embed_source) {
  Json out = series_to_json(g.series());
  out["schema"] = kSchemaId;
  out["type"] = "approximant";
  out["mode_sign"] = to_string(g.mode_sign());
  out["ledger"] = ledger_to_json(g.ledger());
  // Attach derivative estimates per mode.
  for (int j = 0; j < g.series().components(); ++j) {
    for (auto& entry : out["components"][j]) {
      const ModeForm* f = g.form(j, entry["n"].get<int>());
      if (!f) continue;
      Json d = Json::array();
      for (const Complex& c : f->derivs0) d.push_back(complex_to_json(c));
      entry["derivs0"] = d;
    }
  }
  if (embed_source) out["source"] = series_to_json(g.source());
  return out;
}

SmoothApproximant approximant_from_json(const Json& j) {
  if (!j.contains("type") || j.at("type") != "approximant")
    throw ParseError("approximant json: missing type tag");
  const RadialModeSeries series = parse_mode_json(j);
  const ModeSign sign = j.at("mode_sign").get<std::string>() == "two-sided"
                            ? ModeSign::two_sided
                            : ModeSign::nonnegative_only;
  SmoothApproximant g = SmoothApproximant::from_series(series, sign);

  BudgetLedger led;
  const Json& lj = j.at("ledger");
  led.epsilon = lj.value("epsilon", 0.0);
  led.eta = lj.value("eta", 0.0);
  led.delta = lj.value("delta", 0.0);
  led.degree = lj.value("degree", series.degree_bound());
  led.r0 = lj.value("r0", 0.0);
  led.per_mode_budget = lj.value("per_mode_budget", 0.0);
  led.achieved_closeness = lj.value("achieved_closeness", 0.0);
  led.boundary_sup_g = lj.value("boundary_sup_g", g.ledger().boundary_sup_g);
  led.margin_g = lj.value("margin_g", g.ledger().margin_g);
  led.eta_slack = lj.value("eta_slack", g.ledger().eta_slack);
  if (lj.contains("achieved")) {
    const Json& a = lj.at("achieved");
    led.achieved.fejer = a.value("fejer", 0.0);
    led.achieved.b_negative = a.value("b_negative", 0.0);
    led.achieved.b_positive_inner = a.value("b_positive_inner", 0.0);
    led.achieved.b_positive_outer = a.value("b_positive_outer", 0.0);
    led.achieved.b_zero = a.value("b_zero", 0.0);
  }

  std::vector<std::vector<ModeForm>> forms = g.forms();
  for (int jc = 0; jc < series.components(); ++jc) {
    for (const auto& entry : j.at("components")[jc]) {
      if (!entry.contains("derivs0")) continue;
      const int n = entry.at("n").get<int>();
      for (auto& f : forms[jc])
        if (f.n == n) {
          for (int k = 0; k <= kFlatOrder; ++k)
            f.derivs0[k] = parse_complex(entry.at("derivs0")[k], "derivs0");
          for (int k = 1; k <= kFlatOrder; ++k)
            f.flat_residual[k - 1] = std::abs(f.derivs0[k]);
        }
    }
  }

  RadialModeSeries source = j.contains("source")
                                ? parse_mode_json(j.at("source"))
                                : series;
  return SmoothApproximant(series, std::move(source), series, led, sign,
                           std::move(forms));
}

SmoothApproximant load_approximant(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open approximant file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("json parse failure in " + path + ": " + e.what());
  }
  return approximant_from_json(j);
}

Json hypothesis_to_json(const HypothesisReport& rep) {
  Json out;
  out["boundary_sup"] = rep.boundary_sup;
  out["condition_margin"] = rep.condition_margin;
  out["has_negative_modes"] = rep.has_negative_modes;
  out["fact_violation"] = rep.fact_violation;
  out["verdict"] = to_string(rep.verdict);
  out["smallest_radius_flag"] = rep.smallest_radius_flag;
  return out;
}

Json ledger_to_json(const BudgetLedger& led) {
  Json out;
  out["epsilon"] = led.epsilon;
  out["eta"] = led.eta;
  out["delta"] = led.delta;
  out["degree"] = led.degree;
  out["r0"] = led.r0;
  out["per_mode_budget"] = led.per_mode_budget;
  out["flat_order_checked"] = led.flat_order_checked;
  out["achieved"] = {{"fejer", led.achieved.fejer},
                     {"b_negative", led.achieved.b_negative},
                     {"b_positive_inner", led.achieved.b_positive_inner},
                     {"b_positive_outer", led.achieved.b_positive_outer},
                     {"b_zero", led.achieved.b_zero}};
  out["achieved_closeness"] = led.achieved_closeness;
  out["boundary_sup_g"] = led.boundary_sup_g;
  out["margin_g"] = led.margin_g;
  out["eta_slack"] = led.eta_slack;
  return out;
}

Json verify_to_json(const VerifyReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"name", r.name},
                    {"allowed", r.allowed},
                    {"achieved", r.achieved},
                    {"slack", r.slack},
                    {"strict", r.strict},
                    {"required", r.required},
                    {"pass", r.pass}});
  return {{"rows", rows}, {"pass", rep.pass}};
}

Json certificate_to_json(const KontinuitaetssatzCertificate& cert) {
  Json out;
  out["pass"] = cert.pass;
  out["first_violation"] = cert.first_violation;
  out["boundary_containment"] = cert.boundary_containment;
  out["initial_containment"] = cert.initial_containment;
  out["continuity_modulus"] = cert.continuity_modulus;
  out["kset_bound"] = cert.kset_bound;
  if (std::isfinite(cert.kset_inner_radius))
    out["kset_inner_radius"] = cert.kset_inner_radius;
  else
    out["kset_inner_radius"] = nullptr;
  out["kset_count"] = cert.kset_count;
  out["kset_allowed_bound"] = cert.kset_allowed_bound;
  out["delta0"] = cert.delta0;
  out["worst_inner_attachment"] = cert.worst_inner_attachment;
  out["worst_outer_modulus"] = cert.worst_outer_modulus;
  out["holomorphy_residual"] = cert.holomorphy_residual;
  out["slices_evaluated"] = cert.slices_evaluated;
  out["eta_within_pre"] = cert.eta_within_pre;
  return out;
}

Json limit_graph_to_json(const LimitGraph& lg) {
  Json out;
  out["kind"] = to_string(lg.kind);
  Json comps = Json::array();
  for (const auto& comp : lg.coeffs) {
    Json entries = Json::array();
    for (const auto& [n, c] : comp)
      entries.push_back({{"n", n}, {"c", complex_to_json(c)}});
    comps.push_back(entries);
  }
  out["coefficients"] = comps;
  Json conv = Json::array();
  for (const auto& [r, dev] : lg.convergence)
    conv.push_back({{"r", r}, {"deviation", dev}});
  out["convergence"] = conv;
  out["extrapolation_checked"] = lg.extrapolation_checked;
  return out;
}

Json example_to_json(const ExampleReport& rep) {
  Json out;
  out["name"] = rep.name;
  out["constants"] = rep.constants;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e = {{"name", c.name},
              {"value", c.value},
              {"tol", c.tol},
              {"pass", c.pass},
              {"provenance", c.provenance}};
    if (c.expected) e["expected"] = *c.expected;
    if (c.lower) e["lower"] = *c.lower;
    if (c.upper) e["upper"] = *c.upper;
    checks.push_back(e);
  }
  out["checks"] = checks;
  out["grid_info"] = rep.grid_info;
  out["notes"] = rep.notes;
  out["pass"] = rep.pass;
  return out;
}

Json extension_report_to_json(const ExtensionConsistencyReport& rep) {
  Json out;
  out["rho"] = rep.rho;
  out["collar_max_dev"] = rep.collar_max_dev;
  out["graph_max_dev"] = rep.graph_max_dev;
  if (rep.interior_oracle_dev)
    out["interior_oracle_dev"] = *rep.interior_oracle_dev;
  out["interior_skipped"] = rep.interior_skipped;
  out["graph_points_checked"] = rep.graph_points_checked;
  out["pass"] = rep.pass;
  return out;
}

void dump_slice_csv(std::ostream& out, const FamilySlice& slice, int eta_index,
                    bool header) {
  if (header) out << "r,eta_index,abs_zeta,arg_zeta,component,re,im\n";
  for (int j = 0; j < static_cast<int>(slice.values.size()); ++j)
    for (Eigen::Index i = 0; i < slice.rho.size(); ++i)
      for (Eigen::Index k = 0; k < slice.thetas.size(); ++k) {
        const Complex v = slice.values[j](i, k);
        out << slice.r << ',' << eta_index << ',' << slice.rho[i] << ','
            << slice.thetas[k] << ',' << (j + 1) << ',' << v.real() << ','
            << v.imag() << '\n';
      }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

Json make_run_report(const std::string& input_digest,
                     const std::string& command) {
  Json out;
  out["schema"] = kSchemaId;
  out["version"] = kToolVersion;
  out["input_digest"] = input_digest;
  out["command"] = command;
  return out;
}

}  // namespace hartogs
