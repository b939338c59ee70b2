#include "posetope/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

#include "posetope/enumeration.hpp"
#include "posetope/error.hpp"
#include "posetope/harness.hpp"
#include "posetope/poset_io.hpp"
#include "posetope/report_json.hpp"
#include "posetope/transfer.hpp"

namespace posetope {

namespace {

struct Globals {
  bool json = false;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string cache_dir;

  HarnessOptions harness(std::size_t n) const {
    HarnessOptions o;
    o.n_max = n;
    o.jobs = jobs;
    if (!cache_dir.empty()) o.cache_dir = cache_dir;
    return o;
  }
};

std::string chain_text(const Poset& p, const std::vector<Index>& chain, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k) out += sep;
    out += p.name(chain[k]);
  }
  return out;
}

bool is_order(const std::string& which) { return which == "order"; }

HPolytope hrep_for(const Poset& p, const std::string& which) {
  return is_order(which) ? order_hrep(p) : chain_hrep(p);
}

VertexSet vertices_for(const Poset& p, const std::string& which) {
  return is_order(which) ? order_vertices(p) : chain_vertices(p);
}

Json class_json(const Poset& p, Index i) {
  Json j{{"name", p.name(i)}};
  if (auto c = try_classify_element(p, i)) {
    j.update(to_json(p, *c));
  } else {
    j["class"] = "NotClassifiable";
  }
  return j;
}

int cmd_show(const Globals& g, const Poset& p, std::ostream& out) {
  const auto s = stats(p);
  const auto counts = facet_counts(p);
  const auto witness = contains_forbidden_x(p);
  Json elements = Json::array();
  for (Index i = 0; i < p.size(); ++i) elements.push_back(class_json(p, i));
  const bool canonical = p.size() <= kMaxCanonicalSize;

  if (g.json) {
    Json covers = Json::array();
    for (const auto& [lo, hi] : p.covers()) covers.push_back({p.name(lo), p.name(hi)});
    out << Json{{"names", p.names()},
                {"covers", covers},
                {"stats", to_json(s)},
                {"facet_counts", {{"order", counts.order}, {"chain", counts.chain}}},
                {"forbidden_witness", witness ? to_json(p, *witness) : Json(nullptr)},
                {"elements", elements},
                {"canonical_id", canonical ? Json(canonical_form(p).id()) : Json(nullptr)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "elements: " << s.d << "\n"
      << "minimal: " << s.m_min << "  maximal: " << s.m_max << "  hasse edges: " << s.hasse_edges
      << "  maximal chains: " << s.max_chain_count << "\n"
      << "facets: order " << counts.order << ", chain " << counts.chain << "\n";
  if (witness) {
    out << "X subposet: center " << p.name(witness->center) << ", below {" << p.name(witness->below.first) << ", "
        << p.name(witness->below.second) << "}, above {" << p.name(witness->above.first) << ", "
        << p.name(witness->above.second) << "}\n";
  } else {
    out << "X subposet: none\n";
  }
  out << "classification:\n";
  for (Index i = 0; i < p.size(); ++i) {
    out << "  " << std::left << std::setw(8) << p.name(i) << " ";
    auto c = try_classify_element(p, i);
    if (!c) {
      out << "NotClassifiable\n";
      continue;
    }
    out << class_name(*c);
    if (const auto* down = std::get_if<DownUnique>(&*c)) out << " " << chain_text(p, down->chain, ">");
    if (const auto* up = std::get_if<UpUnique>(&*c)) out << " " << chain_text(p, up->chain, "<");
    out << "\n";
  }
  if (canonical) out << "canonical id: " << canonical_form(p).id() << "\n";
  return kExitOk;
}

int cmd_facets(const Globals& g, const Poset& p, const std::string& which, std::ostream& out) {
  const auto h = hrep_for(p, which);
  if (g.json) {
    Json list = Json::array();
    for (const auto& q : h.inequalities) {
      list.push_back({{"tag", describe_tag(q.tag, p)},
                      {"coeffs", q.coeffs},
                      {"rhs", q.rhs},
                      {"text", render_inequality(p, q)}});
    }
    out << Json{{"polytope", which}, {"dim", h.dim}, {"inequalities", list}}.dump(2) << "\n";
    return kExitOk;
  }
  out << which << " polytope: " << h.inequalities.size() << " facets\n";
  for (const auto& q : h.inequalities) {
    out << "  " << std::left << std::setw(24) << describe_tag(q.tag, p) << " " << render_inequality(p, q) << "\n";
  }
  return kExitOk;
}

int cmd_vertices(const Globals& g, const Poset& p, const std::string& which, std::ostream& out) {
  const auto v = vertices_for(p, which);
  auto support = [&](const IntVector& point) {
    std::vector<std::string> names;
    for (Index i = 0; i < point.size(); ++i)
      if (point[i]) names.push_back(p.name(i));
    return names;
  };
  if (g.json) {
    Json list = Json::array();
    for (const auto& point : v.points) list.push_back({{"point", point}, {"support", support(point)}});
    out << Json{{"polytope", which}, {"count", v.points.size()}, {"vertices", list}}.dump(2) << "\n";
    return kExitOk;
  }
  out << which << " polytope: " << v.points.size() << " vertices\n";
  for (const auto& point : v.points) {
    out << "  ";
    for (auto c : point) out << c;
    out << "  {";
    const auto names = support(point);
    for (std::size_t k = 0; k < names.size(); ++k) out << (k ? "," : "") << names[k];
    out << "}\n";
  }
  return kExitOk;
}

int cmd_fvector(const Globals& g, const Poset& p, const std::string& which, std::ostream& out) {
  const auto f = f_vector(hrep_for(p, which), vertices_for(p, which));
  if (g.json) {
    out << Json{{"polytope", which}, {"f_vector", to_json(f)}, {"euler_holds", f.euler_holds()}}.dump(2) << "\n";
    return kExitOk;
  }
  out << which << " polytope f-vector: (";
  for (std::size_t i = 0; i < f.f.size(); ++i) out << (i ? ", " : "") << f.f[i];
  out << ")\n";
  return kExitOk;
}

int cmd_volume(const Globals& g, const Poset& p, std::ostream& out) {
  const auto e = linear_extension_count(p);
  const auto vol = volume(p);
  if (g.json) {
    out << Json{{"d", p.size()}, {"linear_extensions", e.str()}, {"volume", to_string(vol)}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "linear extensions: " << e << "\nvolume: " << to_string(vol) << "\n";
  return kExitOk;
}

int cmd_psi(const Globals& g, const Poset& p, std::ostream& out) {
  const auto table = psi_table(p);
  const auto map = build_psi(p);
  const auto det = determinant(map.matrix);
  if (g.json) {
    Json rows = Json::object();
    for (const auto& entry : table) rows[p.name(entry.element)] = psi_expression(p, entry);
    out << Json{{"table", rows}, {"map", to_json(map)}, {"determinant", det.str()}}.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& line : psi_lines(p)) out << line << "\n";
  out << "matrix (z -> A z + b):\n";
  for (std::size_t i = 0; i < map.dim(); ++i) {
    out << "  ";
    for (auto a : map.matrix[i]) out << std::right << std::setw(3) << a;
    out << "  | " << std::setw(2) << map.offset[i] << "\n";
  }
  out << "determinant: " << det << "\n";
  return kExitOk;
}

int cmd_check(const Globals& g, const Poset& p, std::ostream& out) {
  const auto report = verify_equivalence(p);
  const Json j = to_json(p, report);
  if (g.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const char* key : {"verdict", "order_facets", "chain_facets", "det_abs", "facet_bijection_ok",
                          "vertex_bijection_ok", "inverse_round_trip_ok", "f_vectors_equal", "order_f_vector",
                          "chain_f_vector", "forbidden_witness"}) {
    out << key << ": " << (j[key].is_string() ? j[key].get<std::string>() : j[key].dump()) << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const Globals& g, std::size_t n, const std::string& out_path, std::ostream& out) {
  const auto census = load_or_enumerate(n, g.harness(n));
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + out_path + "'");
    write_census(file, census);
  }
  const auto summary = census_statistics(census);
  if (g.json) {
    out << Json{{"n", n},
                {"unlabeled_count", census.unlabeled_count()},
                {"labeled_count", census.labeled_count},
                {"x_free", summary.x_free},
                {"x_containing", summary.x_containing}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "n=" << n << " classes=" << census.unlabeled_count() << " labeled=" << census.labeled_count
      << " x_free=" << summary.x_free << " x_containing=" << summary.x_containing << "\n";
  return kExitOk;
}

void write_report(const Json& j, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  file << j.dump(2) << "\n";
}

int cmd_verify(const Globals& g, std::size_t n, const std::string& report_path, std::ostream& out) {
  const auto report = verify_paper_theorems(g.harness(n));
  const Json j = to_json(report);
  if (!report_path.empty()) write_report(j, report_path);
  if (g.json) {
    out << j.dump(2) << "\n";
  } else {
    out << std::left << std::setw(4) << "n" << std::setw(10) << "classes" << std::setw(10) << "x_free"
        << std::setw(10) << "failures" << "\n";
    for (std::size_t size = 1; size <= n; ++size) {
      std::size_t classes = 0;
      std::size_t x_free = 0;
      std::size_t failures = 0;
      for (const auto& r : report.per_class) {
        if (r.n != size) continue;
        ++classes;
        if (r.x_free) ++x_free;
        if (!r.all_ok()) ++failures;
      }
      out << std::setw(4) << size << std::setw(10) << classes << std::setw(10) << x_free << std::setw(10)
          << failures << "\n";
    }
    for (const auto& f : report.failures) out << "FAIL " << f.canonical_id << " " << f.check << ": " << f.detail << "\n";
    out << (report.ok() ? "all checks passed" : "theorem checks FAILED") << "\n";
  }
  return report.ok() ? kExitOk : kExitTheoremFailure;
}

int cmd_conjecture(const Globals& g, std::size_t n, const std::string& report_path, std::ostream& out) {
  const auto report = conjecture_scan(g.harness(n));
  const Json j = to_json(report);
  if (!report_path.empty()) write_report(j, report_path);
  if (g.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "classes scanned (2 <= d <= " << n << "): " << report.classes_scanned << "\n"
      << "f_0 equal: " << report.f0_equal << "\n"
      << "part (a) violations: " << report.part_a_violations.size() << "\n"
      << "part (b) equality cases: " << report.part_b_observations.size()
      << ", with X present: " << report.part_b_counterexamples << "\n";
  for (const auto& v : report.part_a_violations) {
    out << "  violation " << v.canonical_id << " i=" << v.index << " f=" << v.f_order << " f'=" << v.f_chain << "\n";
  }
  for (const auto& o : report.part_b_observations) {
    if (!o.x_free) out << "  part (b) counterexample " << o.canonical_id << "\n";
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order and chain polytopes of finite posets"};
  app.name("posetope");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration and harness runs")->check(CLI::PositiveNumber);
  app.add_option("--seed-cache", g.cache_dir, "Directory for census and result caches");

  std::string file;
  std::string which = "order";
  std::size_t n = 0;
  std::string out_path;
  std::string report_path;

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Poset file")->required()->check(CLI::ExistingFile);
    return sub;
  };
  auto with_polytope = [&](CLI::App* sub) {
    sub->add_option("--polytope", which, "order or chain")->check(CLI::IsMember({"order", "chain"}));
    return sub;
  };
  auto with_size = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-n", n, "Largest poset size")->required()->check(CLI::Range(1, 7));
    return sub;
  };

  auto* show = with_file("show", "Statistics, element classes and X witness");
  auto* facets = with_polytope(with_file("facets", "Facet inequalities"));
  auto* vertices = with_polytope(with_file("vertices", "Vertices"));
  auto* fvector = with_polytope(with_file("fvector", "Face numbers f_0..f_{d-1}"));
  auto* vol = with_file("volume", "Linear extensions and volume");
  auto* psi = with_file("psi", "Transfer map table, matrix and determinant");
  auto* check = with_file("check", "Equivalence report");
  auto* enumerate = with_size("enumerate", "Posets up to isomorphism");
  enumerate->add_option("--out", out_path, "Write the census file here");
  auto* verify = with_size("verify", "Exhaustive theorem checks");
  verify->add_option("--report", report_path, "Write the JSON report here");
  auto* conjecture = with_size("conjecture", "f-vector comparison scan");
  conjecture->add_option("--report", report_path, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(g, n, out_path, out);
    if (*verify) return cmd_verify(g, n, report_path, out);
    if (*conjecture) return cmd_conjecture(g, n, report_path, out);

    const Poset p = read_poset_file(file);
    if (*show) return cmd_show(g, p, out);
    if (*facets) return cmd_facets(g, p, which, out);
    if (*vertices) return cmd_vertices(g, p, which, out);
    if (*fvector) return cmd_fvector(g, p, which, out);
    if (*vol) return cmd_volume(g, p, out);
    if (*psi) return cmd_psi(g, p, out);
    if (*check) return cmd_check(g, p, out);
  } catch (const ForbiddenSubposetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInconsistency ? kExitTheoremFailure : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace posetope
