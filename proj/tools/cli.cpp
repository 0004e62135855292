#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "monopole/cartan.hpp"
#include "monopole/chart.hpp"
#include "monopole/dtilde.hpp"
#include "monopole/error.hpp"
#include "monopole/flows.hpp"
#include "monopole/io.hpp"
#include "monopole/leaves.hpp"
#include "monopole/parallel.hpp"
#include "monopole/poisson.hpp"
#include "monopole/sampling.hpp"

namespace monopole::cli {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

json read_json_arg(const std::string& arg) {
  if (arg.empty()) throw Error(Errc::parse_error, "a point is required (--point <file>|-|<json>)");
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (arg.front() == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw Error(Errc::parse_error, "cannot open '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

CartanDatum parse_cartan(const std::string& text) {
  if (text.empty()) throw Error(Errc::parse_error, "--cartan is required");
  if (text.front() == '{') return io::cartan_from_json(json::parse(text));
  return CartanDatum::from_name(text);
}

std::vector<bool> parse_j(const std::string& text, std::size_t rank) {
  std::vector<bool> in_j(rank, false);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long label = 0;
    try {
      label = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "J entry '" + item + "' is not a node label");
    }
    if (pos != item.size() || label == 0 || label > rank)
      throw Error(Errc::parse_error, "J entry '" + item + "' out of range 1.." + std::to_string(rank));
    in_j[label - 1] = true;
  }
  return in_j;
}

std::string replay_command(const std::string& sub, const std::vector<CoordIndex>& idx, const char* names) {
  std::string cmd = "monopole " + sub + " --point <point.json>";
  for (std::size_t k = 0; k < idx.size(); ++k) cmd += std::string(" --") + names[k] + " " + idx[k].str();
  return cmd;
}

struct Section {
  std::size_t count = 0;
  json failures = json::array();

  void fail(json entry) {
    ++count;
    if (failures.size() < kMaxListedFailures) failures.push_back(std::move(entry));
  }
};

struct PointChecks {
  std::size_t triples = 0;
  std::size_t comparisons = 0;
  std::vector<json> jacobi, inverse, oracle, rank, roundtrip;
};

PointChecks check_point(const ChartPoint& pt, bool with_jacobi, bool with_table_checks) {
  PointChecks out;
  const ChartLayout& layout = pt.layout();
  const json pj = io::point_to_json(pt);

  if (with_jacobi) {
    const JacobiScan scan = jacobi_scan(pt);
    out.triples = scan.triples;
    for (const auto& f : scan.failures) {
      const std::vector<CoordIndex> idx{layout.index(f.a), layout.index(f.b), layout.index(f.c)};
      out.jacobi.push_back({{"point", pj},
                            {"indices", {idx[0].str(), idx[1].str(), idx[2].str()}},
                            {"value", to_string(f.value)},
                            {"replay", replay_command("jacobi-check", idx, "abc")}});
    }
  }

  const RatMatrix p = bivector_matrix(pt);
  if (with_table_checks) {
    const RatMatrix product = symplectic_matrix(pt) * p;
    if (product != RatMatrix::identity(layout.size()))
      out.inverse.push_back({{"point", pj}, {"product", io::matrix_to_json(product)}, {"replay", "monopole omega --point <point.json>"}});

    const std::size_t r = exact_rank(p);
    if (r != layout.size())
      out.rank.push_back({{"point", pj}, {"rank", r}, {"expected", layout.size()}, {"replay", "monopole rank --point <point.json>"}});

    std::vector<std::vector<Rat>> xs;
    for (std::size_t i = 0; i < layout.colors(); ++i) xs.push_back(pt.x_block(i));
    if (!(from_polys(to_polys(pt), xs) == pt))
      out.roundtrip.push_back({{"point", pj}, {"replay", "monopole chart to-polys <point.json>"}});
  }

  std::vector<std::vector<Rat>> roots;
  for (std::size_t i = 0; i < layout.colors(); ++i) roots.push_back(pt.x_block(i));
  const DTildeOracle oracle(to_polys(pt), roots);
  for (std::size_t a = 0; a < layout.size(); ++a)
    for (std::size_t b = 0; b < layout.size(); ++b) {
      ++out.comparisons;
      const CoordIndex ia = layout.index(a);
      const CoordIndex ib = layout.index(b);
      const Rat via_oracle = oracle.bracket(ia, ib);
      if (via_oracle != p(a, b))
        out.oracle.push_back({{"point", pj},
                              {"indices", {ia.str(), ib.str()}},
                              {"table", to_string(p(a, b))},
                              {"oracle", to_string(via_oracle)},
                              {"replay", replay_command("bracket", {ia, ib}, "ab")}});
    }
  return out;
}

std::vector<ChartPoint> sample_points(const RunConfig& cfg, CartanDatum& cartan, Degree& alpha) {
  cartan = parse_cartan(cfg.cartan);
  if (cfg.alpha.empty()) throw Error(Errc::parse_error, "--alpha is required");
  alpha = io::parse_degree_list(cfg.alpha, cartan.rank());
  Sampler sampler(cfg.seed);
  std::vector<ChartPoint> pts;
  pts.reserve(cfg.points);
  for (std::size_t k = 0; k < cfg.points; ++k) pts.push_back(sampler.chart_point(cartan, alpha));
  return pts;
}

json header(const RunConfig& cfg, const CartanDatum& cartan, const Degree& alpha) {
  return json{{"command", cfg.command},
              {"cartan", io::cartan_to_json(cartan)},
              {"alpha", alpha.coefficients()},
              {"seed", cfg.seed},
              {"points", cfg.points}};
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw Error(Errc::parse_error, "cannot write '" + cfg.out + "'");
  file << text;
}

std::string fmt_double(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

}  // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MONOPOLE_SEED")) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::parse_error, std::string("MONOPOLE_SEED is not an unsigned integer: '") + env + "'");
  }
  return 0;
}

Report cmd_verify(const RunConfig& cfg) {
  CartanDatum cartan = CartanDatum::from_name("A1");
  Degree alpha;
  const auto pts = sample_points(cfg, cartan, alpha);

  std::vector<PointChecks> results(pts.size());
  parallel_for_index(pts.size(), cfg.jobs, [&](std::size_t k) { results[k] = check_point(pts[k], true, true); });

  Section jacobi, inverse, oracle, rank_section, roundtrip;
  std::size_t triples = 0, comparisons = 0;
  for (auto& r : results) {
    triples += r.triples;
    comparisons += r.comparisons;
    for (auto& f : r.jacobi) jacobi.fail(std::move(f));
    for (auto& f : r.inverse) inverse.fail(std::move(f));
    for (auto& f : r.oracle) oracle.fail(std::move(f));
    for (auto& f : r.rank) rank_section.fail(std::move(f));
    for (auto& f : r.roundtrip) roundtrip.fail(std::move(f));
  }
  Report rep;
  rep.body = header(cfg, cartan, alpha);
  rep.body["jacobi"] = {{"points", pts.size()}, {"triples", triples}, {"failure_count", jacobi.count}, {"failures", jacobi.failures}};
  rep.body["inverse"] = {{"failure_count", inverse.count}, {"failures", inverse.failures}};
  rep.body["oracle"] = {{"comparisons", comparisons}, {"failure_count", oracle.count}, {"failures", oracle.failures}};
  rep.body["rank"] = {{"expected", 2 * alpha.total()}, {"failure_count", rank_section.count}, {"failures", rank_section.failures}};
  rep.body["roundtrip"] = {{"failure_count", roundtrip.count}, {"failures", roundtrip.failures}};
  const bool ok = jacobi.count + inverse.count + oracle.count + rank_section.count + roundtrip.count == 0;
  rep.body["ok"] = ok;
  rep.exit_code = ok ? kExitOk : kExitFailed;
  return rep;
}

Report cmd_oracle_check(const RunConfig& cfg) {
  CartanDatum cartan = CartanDatum::from_name("A1");
  Degree alpha;
  const auto pts = sample_points(cfg, cartan, alpha);
  std::vector<PointChecks> results(pts.size());
  parallel_for_index(pts.size(), cfg.jobs, [&](std::size_t k) { results[k] = check_point(pts[k], false, false); });
  Section oracle;
  std::size_t comparisons = 0;
  for (auto& r : results) {
    comparisons += r.comparisons;
    for (auto& f : r.oracle) oracle.fail(std::move(f));
  }
  Report rep;
  rep.body = header(cfg, cartan, alpha);
  rep.body["oracle"] = {{"comparisons", comparisons}, {"failure_count", oracle.count}, {"failures", oracle.failures}};
  rep.body["ok"] = oracle.count == 0;
  rep.exit_code = oracle.count == 0 ? kExitOk : kExitFailed;
  return rep;
}

Report cmd_leaves(const RunConfig& cfg) {
  const CartanDatum cartan = parse_cartan(cfg.cartan);
  std::vector<bool> in_j = parse_j(cfg.j_labels, cartan.rank());
  if (cfg.beta.empty()) throw Error(Errc::parse_error, "--beta is required");
  const Degree beta = io::parse_degree_list(cfg.beta, cartan.rank());
  const LiftConvention convention = parse_convention(cfg.convention.empty() ? "lemma" : cfg.convention);
  const ParabolicDatum pd(cartan, in_j, beta);
  const SpecialLiftSet set = enumerate_special_lifts(pd, convention);

  json lifts = json::array(), dims = json::array(), j_list = json::array();
  for (const auto& a : set.lifts) {
    lifts.push_back(a.coefficients());
    dims.push_back(leaf_dimension(a));
  }
  for (std::size_t i = 0; i < in_j.size(); ++i)
    if (in_j[i]) j_list.push_back(i + 1);
  Report rep;
  rep.body = {{"cartan", io::cartan_to_json(cartan)},
              {"J", j_list},
              {"beta", beta.coefficients()},
              {"convention", std::string(to_string(convention))},
              {"lifts", lifts},
              {"dimensions", dims}};
  return rep;
}

namespace {

int run_flow(const RunConfig& cfg, const std::string& hamiltonian, const std::string& report_path, std::ostream& out,
             std::ostream& err) {
  const ChartPoint start = io::point_from_json(read_json_arg(cfg.point));
  const ChartLayout& layout = start.layout();
  const Hamiltonian h = Hamiltonian::parse(hamiltonian, layout);

  std::vector<Hamiltonian> watched{h};
  for (std::size_t i = 0; i < layout.colors(); ++i)
    for (int m = 1; m <= layout.alpha()[i]; ++m) {
      Hamiltonian e(layout, MultiPoly::elementary_x(layout, i, m));
      e.set_label("e:" + std::to_string(m) + ":" + std::to_string(i + 1));
      watched.push_back(std::move(e));
    }

  json report = {{"hamiltonian", hamiltonian}, {"x_only", h.x_only()}, {"t", cfg.t}, {"dt", cfg.dt}, {"method", "rk4"}};
  int code = kExitOk;
  std::ostringstream csv;
  csv << "t";
  for (std::size_t a = 0; a < layout.size(); ++a) {
    const std::string name = layout.index(a).str();
    csv << ",re(" << name << "),im(" << name << ")";
  }
  csv << '\n';
  try {
    const Trajectory traj = integrate(h, start.to_complex(), cfg.t, cfg.dt);
    for (const auto& s : traj.samples) {
      csv << fmt_double(s.t);
      for (const auto& c : s.point.coords()) csv << ',' << fmt_double(c.real()) << ',' << fmt_double(c.imag());
      csv << '\n';
    }
    const auto drift = conservation_report(traj, watched);
    json drift_json = json::object();
    drift_json["H"] = drift[0];
    for (std::size_t f = 1; f < watched.size(); ++f) drift_json[watched[f].label()] = drift[f];
    report["steps"] = traj.samples.size() - 1;
    report["drift"] = drift_json;
    if (h.x_only()) {
      const double dev = closed_form_deviation(h, traj);
      report["closed_form_deviation"] = dev;
      report["ok"] = dev <= cfg.tol;
      for (std::size_t f = 0; f < drift.size(); ++f)
        if (drift[f] > cfg.tol) report["ok"] = false;
    } else {
      report["ok"] = drift[0] <= cfg.tol;
    }
    if (!report["ok"].get<bool>()) code = kExitFailed;
  } catch (const LeftChart& e) {
    report["left_chart_at"] = e.time();
    report["error"] = e.what();
    report["ok"] = false;
    code = kExitFailed;
  }

  const std::string report_text = report.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << csv.str();
    if (report_path.empty()) err << report_text;
  } else {
    write_output(cfg, csv.str(), out);
    if (report_path.empty()) out << report_text;
  }
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) throw Error(Errc::parse_error, "cannot write '" + report_path + "'");
    file << report_text;
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poisson geometry of based maps to flag varieties: charts, brackets, flows and leaves", "monopole"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<std::uint64_t> seed_flag;
  std::string a_text, b_text, c_text, f_text, g_text, hamiltonian, report_path, chart_file;
  bool with_roots = false, float_mode = false;

  const auto add_random = [&](CLI::App* sub) {
    sub->add_option("--cartan", cfg.cartan, "Cartan type name (A2, G2, ...) or {\"dot\": [[...]]}");
    sub->add_option("--alpha", cfg.alpha, "Degree as comma-separated coefficients, e.g. 2,1");
    sub->add_option("--seed", seed_flag, "Sampling seed (fallback: MONOPOLE_SEED)");
    sub->add_option("--points", cfg.points, "Number of random chart points")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs, "Worker threads (0 = hardware)");
  };
  const auto add_point = [&](CLI::App* sub) {
    sub->add_option("--point", cfg.point, "Chart point JSON: file path, '-' for stdin, or inline");
  };
  const auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Output file (default stdout)"); };

  auto* verify = app.add_subcommand("verify", "Jacobi, inverse, oracle, rank and round-trip checks on random points");
  add_random(verify);
  add_out(verify);

  auto* oracle = app.add_subcommand("oracle-check", "Compare divided-difference oracle with the bracket table");
  add_random(oracle);
  add_out(oracle);

  auto* chart = app.add_subcommand("chart", "Convert between chart points and polynomial data");
  auto* to_polys_cmd = chart->add_subcommand("to-polys", "Chart point -> (p_i, q_i)");
  to_polys_cmd->add_option("file", chart_file, "Point JSON file, '-' or inline")->required();
  to_polys_cmd->add_flag("--with-roots", with_roots, "Include the x-coordinates as \"roots\"");
  add_out(to_polys_cmd);
  auto* from_polys_cmd = chart->add_subcommand("from-polys", "(p_i, q_i) plus roots -> chart point");
  from_polys_cmd->add_option("file", chart_file, "Polychart JSON file, '-' or inline")->required();
  from_polys_cmd->add_flag("--float", float_mode, "Find roots numerically (companion matrix) instead of reading \"roots\"");
  add_out(from_polys_cmd);
  chart->require_subcommand(1);

  auto* bracket = app.add_subcommand("bracket", "Bracket of two coordinates (or two polynomials) at a point");
  add_point(bracket);
  bracket->add_option("--a", a_text, "First coordinate, x:i:k or y:i:k");
  bracket->add_option("--b", b_text, "Second coordinate");
  bracket->add_option("--f", f_text, "First polynomial (instead of --a)");
  bracket->add_option("--g", g_text, "Second polynomial (instead of --b)");

  auto* bivector = app.add_subcommand("bivector", "Matrix of the Poisson bivector at a point");
  add_point(bivector);
  add_out(bivector);
  auto* omega = app.add_subcommand("omega", "Matrix of the symplectic form at a point");
  add_point(omega);
  add_out(omega);

  auto* jacobi = app.add_subcommand("jacobi-check", "Jacobiator over coordinate triples");
  add_point(jacobi);
  add_random(jacobi);
  jacobi->add_option("--a", a_text);
  jacobi->add_option("--b", b_text);
  jacobi->add_option("--c", c_text);

  auto* rank_cmd = app.add_subcommand("rank", "Exact rank of the bivector at a point");
  add_point(rank_cmd);

  auto* flow = app.add_subcommand("flow", "RK4 Hamiltonian flow; CSV trajectory plus JSON conservation report");
  add_point(flow);
  flow->add_option("--hamiltonian", hamiltonian, "Polynomial, e.g. 'e:1:1 + x:2:1^2'")->required();
  flow->add_option("--t", cfg.t, "End time")->check(CLI::NonNegativeNumber);
  flow->add_option("--dt", cfg.dt, "Step")->check(CLI::PositiveNumber);
  flow->add_option("--tol", cfg.tol, "Drift / closed-form tolerance")->check(CLI::PositiveNumber);
  flow->add_option("--report", report_path, "Write the JSON report here");
  add_out(flow);

  auto* leaves = app.add_subcommand("leaves", "Enumerate special lifts of a parabolic degree");
  leaves->add_option("--cartan", cfg.cartan)->required();
  leaves->add_option("--J", cfg.j_labels, "Comma-separated node labels of J");
  leaves->add_option("--beta", cfg.beta, "Parabolic degree, comma-separated over all nodes")->required();
  leaves->add_option("--convention", cfg.convention, "lemma (default) or literal");
  add_out(leaves);

  auto* casimir = app.add_subcommand("casimir", "Rank-1 Casimir scalars on V (x) V");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    cfg.seed = resolve_seed(seed_flag);
    const auto emit = [&](const json& j) { write_output(cfg, j.dump(2) + "\n", out); };

    if (verify->parsed() || oracle->parsed()) {
      cfg.command = verify->parsed() ? "verify" : "oracle-check";
      const Report rep = verify->parsed() ? cmd_verify(cfg) : cmd_oracle_check(cfg);
      emit(rep.body);
      return rep.exit_code;
    }
    if (to_polys_cmd->parsed()) {
      const ChartPoint pt = io::point_from_json(read_json_arg(chart_file));
      json j = io::polychart_to_json(to_polys(pt));
      if (with_roots) {
        json roots = json::object();
        for (std::size_t i = 0; i < pt.alpha().size(); ++i) {
          json list = json::array();
          for (const auto& r : pt.x_block(i)) list.push_back(io::rat_to_json(r));
          roots[std::to_string(i + 1)] = list;
        }
        j["roots"] = roots;
      }
      emit(j);
      return kExitOk;
    }
    if (from_polys_cmd->parsed()) {
      const json j = read_json_arg(chart_file);
      const PolyChart pc = io::polychart_from_json(j);
      if (float_mode) {
        const ComplexPoint pt = from_polys_float(pc);
        json x = json::object(), y = json::object();
        for (std::size_t i = 0; i < pc.alpha.size(); ++i) {
          json xs = json::array(), ys = json::array();
          for (const auto& v : pt.x_block(i)) xs.push_back({v.real(), v.imag()});
          for (const auto& v : pt.y_block(i)) ys.push_back({v.real(), v.imag()});
          x[std::to_string(i + 1)] = xs;
          y[std::to_string(i + 1)] = ys;
        }
        emit({{"cartan", io::cartan_to_json(pc.cartan)}, {"alpha", io::degree_to_json(pc.alpha)}, {"x", x}, {"y", y}});
        return kExitOk;
      }
      if (!j.contains("roots")) throw Error(Errc::not_a_root, "from-polys needs \"roots\" (or --float)");
      emit(io::point_to_json(from_polys(pc, io::roots_from_json(j.at("roots"), pc.alpha))));
      return kExitOk;
    }
    if (bracket->parsed()) {
      const ChartPoint pt = io::point_from_json(read_json_arg(cfg.point));
      Rat value;
      if (!f_text.empty() || !g_text.empty()) {
        const auto f = f_text.empty() ? MultiPoly::variable(pt.layout().position(CoordIndex::parse(a_text)))
                                      : parse_multipoly(f_text, pt.layout());
        const auto g = g_text.empty() ? MultiPoly::variable(pt.layout().position(CoordIndex::parse(b_text)))
                                      : parse_multipoly(g_text, pt.layout());
        value = bracket_functions(pt, f, g);
      } else {
        value = bracket_coords(pt, CoordIndex::parse(a_text), CoordIndex::parse(b_text));
      }
      out << to_string(value) << "\n";
      return kExitOk;
    }
    if (bivector->parsed() || omega->parsed()) {
      const ChartPoint pt = io::point_from_json(read_json_arg(cfg.point));
      emit(io::matrix_to_json(bivector->parsed() ? bivector_matrix(pt) : symplectic_matrix(pt)));
      return kExitOk;
    }
    if (jacobi->parsed()) {
      std::vector<ChartPoint> pts;
      if (!cfg.point.empty()) {
        pts.push_back(io::point_from_json(read_json_arg(cfg.point)));
      } else {
        CartanDatum cartan = CartanDatum::from_name("A1");
        Degree alpha;
        pts = sample_points(cfg, cartan, alpha);
      }
      json failures = json::array();
      std::size_t triples = 0;
      for (const auto& pt : pts) {
        if (!a_text.empty() || !b_text.empty() || !c_text.empty()) {
          const std::vector<CoordIndex> idx{CoordIndex::parse(a_text), CoordIndex::parse(b_text), CoordIndex::parse(c_text)};
          ++triples;
          const Rat v = jacobiator(pt, idx[0], idx[1], idx[2]);
          if (v != 0)
            failures.push_back({{"point", io::point_to_json(pt)}, {"indices", {idx[0].str(), idx[1].str(), idx[2].str()}}, {"value", to_string(v)}});
          continue;
        }
        const JacobiScan scan = jacobi_scan(pt);
        triples += scan.triples;
        for (const auto& f : scan.failures) {
          const auto& l = pt.layout();
          failures.push_back({{"point", io::point_to_json(pt)},
                              {"indices", {l.index(f.a).str(), l.index(f.b).str(), l.index(f.c).str()}},
                              {"value", to_string(f.value)}});
        }
      }
      emit({{"points", pts.size()}, {"triples", triples}, {"failures", failures}});
      return failures.empty() ? kExitOk : kExitFailed;
    }
    if (rank_cmd->parsed()) {
      const ChartPoint pt = io::point_from_json(read_json_arg(cfg.point));
      const std::size_t r = rank(pt);
      emit({{"rank", r}, {"expected", dimension(pt.alpha())}});
      return r == static_cast<std::size_t>(dimension(pt.alpha())) ? kExitOk : kExitFailed;
    }
    if (flow->parsed()) return run_flow(cfg, hamiltonian, report_path, out, err);
    if (leaves->parsed()) {
      if (cfg.convention.empty())
        err << "warning: using the lemma convention (<alpha, j'> <= 0 on J); under the literal "
               "antidominance reading (alpha - beta antidominant) the only lift is beta itself\n";
      emit(cmd_leaves(cfg).body);
      return kExitOk;
    }
    if (casimir->parsed()) {
      const Rank1Casimir c = casimir_scalars_rank1();
      emit({{"symmetric", to_string(c.on_symmetric)},
            {"antisymmetric", to_string(c.on_antisymmetric)},
            {"denominator", to_string(c.denominator)},
            {"ratio", to_string(c.ratio())}});
      return kExitOk;
    }
  } catch (const LeftChart& e) {
    err << "error: " << e.what() << " (t = " << e.time() << ")\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace monopole::cli
