// qbw: construct, verify, and search quasi-balanced weighing matrices,
// signed strongly regular graphs, signed group divisible designs, and their
// association schemes. All certification is exact; numeric output appears
// only in the scheme eigenmatrix step.
//
// Exit codes: 0 success, 1 certification failure, 2 usage/parse error,
// 3 search budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbw/construct.hpp"
#include "qbw/fixtures.hpp"
#include "qbw/scheme.hpp"
#include "qbw/search.hpp"
#include "qbw/verify.hpp"

using json = nlohmann::json;
using namespace qbw;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// FNV-1a, stable across platforms; good enough to pin fixture content in
// run manifests.
std::string content_digest(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return "missing";
  unsigned long long h = 1469598103934665603ULL;
  char c;
  while (is.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

struct Manifest {
  json j;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Manifest(const std::string& command) {
    j["command"] = command;
    j["inputs"] = json::array();
    j["outputs"] = json::array();
  }
  void input(const std::string& path) {
    j["inputs"].push_back({{"path", path}, {"digest", content_digest(path)}});
  }
  void output(const std::string& path) {
    j["outputs"].push_back({{"path", path}, {"digest", content_digest(path)}});
  }
  void finish(bool json_out) {
    j["elapsed_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (json_out) std::cout << j.dump(2) << '\n';
  }
};

json report_json(const DesignReport& r) {
  json j;
  j["kind"] = r.kind;
  j["pass"] = r.pass;
  json params = json::object();
  for (std::size_t i = 0; i < r.params.size(); ++i) params[r.param_names[i]] = r.params[i];
  j["params"] = params;
  if (!r.value_set.empty()) j["value_set"] = r.value_set;
  if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

GridMatrix load_graph(const std::string& spec) {
  if (spec.find(".qbw") != std::string::npos) return parse_qbw_file(spec);
  return srg_fixture(spec);
}

int run_construct(const std::string& family, int q, const std::string& bgw_path,
                  const std::string& core_path, const std::string& out,
                  const std::string& siamese_dir, bool json_out) {
  Manifest man("construct " + family);
  man.j["parameters"] = {{"family", family}};
  if (q > 0) man.j["parameters"]["q"] = q;

  GridMatrix w;
  std::vector<GridMatrix> siamese;
  if (family == "cons1") {
    SiameseFamily fam = cons1(q);
    w = fam.w;
    siamese = fam.members;
  } else if (family == "cons2") {
    w = cons2(q);
  } else if (family == "pp") {
    w = cons_pp(q);
  } else if (family == "gdd1" || family == "gdd2" || family == "gdd3") {
    if (bgw_path.empty() || core_path.empty())
      throw CLI::ValidationError("--bgw and --core are required for " + family);
    man.input(bgw_path);
    man.input(core_path);
    BgwMatrix h = parse_bgw_file(bgw_path);
    GridMatrix c2 = parse_qbw_file(core_path);
    w = family == "gdd1" ? gdd1(h, c2) : family == "gdd2" ? gdd2(h, c2) : gdd3(h, c2);
  } else if (family == "gh_example") {
    std::string gh = fixture_path("gh16_c4.bgw");
    man.input(gh);
    w = gdd1(gh_import(gh), negacirculant({Entry(0), Entry(1)}));
  } else {
    throw CLI::ValidationError("unknown family " + family);
  }

  if (!out.empty()) {
    write_qbw_file(out, w);
    man.output(out);
    // recipe sidecar records the construction inputs
    std::ofstream rs(out + ".recipe.json");
    rs << man.j["parameters"].dump(2) << '\n';
  } else {
    write_qbw(std::cout, w);
  }
  if (!siamese_dir.empty()) {
    for (std::size_t l = 0; l < siamese.size(); ++l) {
      std::string path = siamese_dir + "/siamese_" + std::to_string(l) + ".qbw";
      write_qbw_file(path, siamese[l]);
      man.output(path);
    }
  }
  man.j["outcome"] = "constructed";
  man.finish(json_out);
  return kExitPass;
}

int run_paley(long qpow, int group, const std::string& out, bool json_out) {
  Manifest man("construct paley");
  BgwMatrix h = paley_bgw(qpow, group);
  DesignReport rep = bgw_check(h);
  man.j["report"] = report_json(rep);
  man.j["skew"] = skew_check(h);
  man.j["symmetric"] = symmetric_check(h);
  if (!out.empty()) {
    write_bgw_file(out, h);
    man.output(out);
  } else {
    write_bgw(std::cout, h);
  }
  man.finish(json_out);
  return rep.pass ? kExitPass : kExitFail;
}

int run_verify(const std::string& kind, const std::vector<std::string>& files, int m,
               int n, int roots, bool json_out) {
  Manifest man("verify " + kind);
  for (const auto& f : files) man.input(f);
  std::vector<DesignReport> reports;

  if (kind == "siamese") {
    std::vector<GridMatrix> family;
    for (const auto& f : files) family.push_back(parse_qbw_file(f));
    reports.push_back(siamese_check(family));
  } else {
    for (const auto& f : files) {
      GridMatrix w = parse_qbw_file(f);
      if (kind == "weighing") {
        reports.push_back(is_weighing(w));
      } else if (kind == "qb") {
        reports.push_back(quasi_balanced_profile(w));
      } else if (kind == "srg") {
        reports.push_back(srg_check(w));
      } else if (kind == "gdd") {
        reports.push_back(gdd_check(w, m, n));
      } else if (kind == "ddg") {
        reports.push_back(ddg_check(w, m, n));
      } else if (kind == "deza") {
        reports.push_back(deza_check(w));
      } else if (kind == "srg-balanced") {
        reports.push_back(srg_balanced_check(w, abs_matrix(w), roots));
      } else {
        throw CLI::ValidationError("unknown verification kind " + kind);
      }
    }
  }

  bool all_pass = true;
  json jr = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    jr.push_back(report_json(r));
    if (!json_out) std::cout << r.summary() << '\n';
  }
  man.j["reports"] = jr;
  man.j["outcome"] = all_pass ? "pass" : "fail";
  man.finish(json_out);
  return all_pass ? kExitPass : kExitFail;
}

SchemeFamily parse_family(const std::string& name) {
  if (name == "srg") return SchemeFamily::Srg;
  if (name == "gdd1") return SchemeFamily::Gdd1;
  if (name == "gdd2") return SchemeFamily::Gdd2;
  throw CLI::ValidationError("unknown scheme family " + name);
}

int run_scheme_build(const std::string& family, const std::string& wfile, int m, int n,
                     const std::string& out, bool json_out) {
  Manifest man("scheme build");
  man.input(wfile);
  GridMatrix w = parse_qbw_file(wfile);
  SchemeFamily fam = parse_family(family);
  SchemeData s = fam == SchemeFamily::Srg    ? build_srg_scheme(w)
                 : fam == SchemeFamily::Gdd1 ? build_gdd_scheme_case1(w, m, n)
                                             : build_gdd_scheme_case2(w, m, n);
  DesignReport rep = verify_scheme(s);
  man.j["report"] = report_json(rep);
  if (!rep.pass) {
    man.finish(json_out);
    return kExitFail;
  }
  if (!out.empty()) {
    write_scheme_file(out, s);
    man.output(out);
  } else {
    write_scheme(std::cout, s);
  }
  man.j["outcome"] = "pass";
  man.finish(json_out);
  return kExitPass;
}

int run_scheme_verify(const std::string& file, bool json_out) {
  Manifest man("scheme verify");
  man.input(file);
  SchemeData s = parse_scheme_file(file);
  DesignReport rep = verify_scheme(s);
  man.j["report"] = report_json(rep);
  if (!json_out) std::cout << rep.summary() << '\n';
  man.finish(json_out);
  return rep.pass ? kExitPass : kExitFail;
}

int run_scheme_eig(const std::string& file, const std::string& compare, bool json_out) {
  Manifest man("scheme eig");
  man.input(file);
  SchemeData s = parse_scheme_file(file);
  DesignReport vrep = verify_scheme(s);
  if (!vrep.pass) {
    man.j["report"] = report_json(vrep);
    man.finish(json_out);
    return kExitFail;
  }
  EigenPair e = eigenmatrices(s);
  const int d1 = s.dim();
  auto mat_json = [&](const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (int i = 0; i < d1; ++i) {
      json row = json::array();
      for (int j = 0; j < d1; ++j) {
        // 12 significant digits in reports
        double v = m(i, j);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        row.push_back(std::stod(buf));
      }
      rows.push_back(row);
    }
    return rows;
  };
  man.j["P"] = mat_json(e.P);
  man.j["Q"] = mat_json(e.Q);
  json tensor = json::array();
  for (int i = 0; i < d1; ++i) tensor.push_back(s.tensor[i]);
  man.j["intersection_numbers"] = tensor;

  int rc = kExitPass;
  if (!compare.empty()) {
    auto colon = compare.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--compare expects family:p1,p2,p3");
    SchemeFamily fam = parse_family(compare.substr(0, colon));
    double p[3];
    std::string rest = compare.substr(colon + 1);
    if (std::sscanf(rest.c_str(), "%lf,%lf,%lf", &p[0], &p[1], &p[2]) != 3)
      throw CLI::ValidationError("--compare expects three numeric parameters");
    DesignReport cmp = compare_closed_form(e, fam, p[0], p[1], p[2]);
    man.j["compare"] = report_json(cmp);
    if (!json_out) std::cout << cmp.summary() << '\n';
    rc = cmp.pass ? kExitPass : kExitFail;
  } else if (!json_out) {
    std::cout << "P =\n" << e.P << "\nQ =\n" << e.Q << '\n';
  }
  man.j["outcome"] = rc == kExitPass ? "pass" : "fail";
  man.finish(json_out);
  return rc;
}

int run_scheme_extract(const std::string& file, const std::string& family,
                       const std::string& out, bool json_out) {
  Manifest man("scheme extract");
  man.input(file);
  SchemeData s = parse_scheme_file(file);
  DesignReport vrep = verify_scheme(s);
  if (!vrep.pass) {
    man.j["report"] = report_json(vrep);
    man.finish(json_out);
    return kExitFail;
  }
  GridMatrix w = extract_from_scheme(s, parse_family(family));
  if (!out.empty()) {
    write_qbw_file(out, w);
    man.output(out);
  } else {
    write_qbw(std::cout, w);
  }
  man.j["outcome"] = "pass";
  man.finish(json_out);
  return kExitPass;
}

int run_search_sign(const std::string& graph, int roots, const std::string& mode,
                    bool general, long long budget, const std::string& out,
                    bool json_out) {
  Manifest man("search sign");
  SearchProblem prob;
  prob.adjacency = load_graph(graph);
  prob.roots = roots;
  prob.mode = mode == "weighing" ? SearchMode::WeighingOnly : SearchMode::Balanced;
  prob.symmetric = !general;
  prob.budget = budget;
  SearchOutcome o = search_signing(prob);
  man.j["graph"] = graph;
  man.j["roots"] = roots;
  man.j["mode"] = mode;
  man.j["symmetric"] = prob.symmetric;
  man.j["nodes"] = o.nodes;
  man.j["seconds"] = o.seconds;
  man.j["status"] = o.status == SearchOutcome::Status::Found        ? "found"
                    : o.status == SearchOutcome::Status::ExhaustedNo ? "exhausted-no"
                                                                     : "budget-exceeded";
  if (o.signing && !out.empty()) {
    write_qbw_file(out, *o.signing);
    man.output(out);
  }
  man.finish(json_out);
  if (!json_out) {
    std::cout << man.j["status"].get<std::string>() << " after " << o.nodes
              << " nodes\n";
  }
  if (o.status == SearchOutcome::Status::BudgetExceeded) return kExitBudget;
  return kExitPass;
}

int run_search_gh(int group, int order, long long budget, const std::string& out,
                  bool json_out) {
  Manifest man("search gh");
  GhSearchResult r = gh_search(group, order, budget);
  man.j["group"] = group;
  man.j["order"] = order;
  man.j["nodes"] = r.nodes;
  man.j["status"] = r.matrix ? "found" : r.exhausted ? "exhausted-no" : "budget-exceeded";
  if (r.matrix && !out.empty()) {
    write_bgw_file(out, *r.matrix);
    man.output(out);
  } else if (r.matrix) {
    write_bgw(std::cout, *r.matrix);
  }
  man.finish(json_out);
  if (!json_out) std::cout << man.j["status"].get<std::string>() << '\n';
  if (!r.matrix && !r.exhausted) return kExitBudget;
  return kExitPass;
}

// Known generators for the table's parameter rows.
const std::map<std::string, std::string>& table_graphs() {
  static const std::map<std::string, std::string> g = {
      {"5-2-0-1", "paley(5)"},
      {"9-4-1-2", "paley(9)"},
      {"10-3-0-1", "complement(triangular(5))"},
      {"10-6-3-4", "triangular(5)"},
      {"13-6-2-3", "paley(13)"},
      {"15-6-1-3", "complement(triangular(6))"},
      {"15-8-4-4", "triangular(6)"},
      {"16-5-0-2", "clebsch"},
      {"16-6-2-2", "lattice(4)"},
      {"16-9-4-6", "complement(lattice(4))"},
      {"16-10-6-6", "complement(clebsch)"},
      {"17-8-3-4", "paley(17)"},
      {"21-10-3-6", "complement(triangular(7))"},
      {"21-10-5-4", "triangular(7)"},
      {"25-8-3-2", "lattice(5)"},
      {"25-12-5-6", "paley(25)"},
      {"25-16-9-12", "complement(lattice(5))"},
      {"28-12-6-4", "triangular(8)"},
      {"28-15-6-10", "complement(triangular(8))"},
      {"29-14-6-7", "paley(29)"},
  };
  return g;
}

int run_table(const std::string& rows, int roots, long long budget,
              const std::string& graph_override, bool json_out) {
  Manifest man("table");
  json results = json::array();
  int rc = kExitPass;
  std::vector<std::string> row_list;
  if (rows == "all") {
    for (const auto& [k, v] : table_graphs()) row_list.push_back(k);
  } else {
    std::string cur;
    for (char c : rows + ",") {
      if (c == ',') {
        if (!cur.empty()) row_list.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  for (const std::string& row : row_list) {
    json entry;
    entry["parameters"] = row;
    entry["roots"] = roots;
    std::string gname = graph_override;
    if (gname.empty()) {
      auto it = table_graphs().find(row);
      if (it == table_graphs().end()) {
        entry["result"] = "no generator";
        results.push_back(entry);
        rc = std::max(rc, kExitFail);
        continue;
      }
      gname = it->second;
    }
    entry["graph"] = gname;
    GridMatrix a = srg_fixture(gname);
    DesignReport srg = srg_check(a);
    long long lambda = srg.param("lambda"), mu = srg.param("mu");
    if (lambda % roots != 0 || mu % roots != 0) {
      // the parameters exclude a balanced signing outright
      entry["result"] = "---";
      results.push_back(entry);
      if (!json_out) std::cout << row << "  ---  (divisibility obstruction)\n";
      continue;
    }
    SearchProblem prob;
    prob.adjacency = a;
    prob.roots = roots;
    prob.mode = SearchMode::Balanced;
    prob.budget = budget;
    SearchOutcome o = search_signing(prob);
    std::string res = o.status == SearchOutcome::Status::Found        ? "YES"
                      : o.status == SearchOutcome::Status::ExhaustedNo ? "NO"
                                                                       : "?";
    entry["result"] = res;
    entry["nodes"] = o.nodes;
    results.push_back(entry);
    if (!json_out) std::cout << row << "  " << res << "  (" << o.nodes << " nodes)\n";
    if (o.status == SearchOutcome::Status::BudgetExceeded) rc = std::max(rc, kExitBudget);
  }
  man.j["rows"] = results;
  man.finish(json_out);
  return rc;
}

int run_fixtures(bool json_out) {
  Manifest man("fixtures verify");
  std::vector<DesignReport> reports = verify_fixture_signings(fixture_dir());
  bool all = true;
  json jr = json::array();
  for (const auto& r : reports) {
    all = all && r.pass;
    jr.push_back(report_json(r));
    if (!json_out) std::cout << r.summary() << '\n';
  }
  man.j["reports"] = jr;
  man.j["outcome"] = all ? "pass" : "fail";
  man.finish(json_out);
  return all ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-balanced weighing matrices, signed graphs and association schemes"};
  app.require_subcommand(1);
  app.fallthrough(true);
  bool json_out = false;
  app.add_flag("--json", json_out, "emit a JSON run manifest on stdout");

  // construct
  auto* c = app.add_subcommand("construct", "run a construction family");
  std::string family, bgw_path, core_path, out_path, siamese_dir;
  int q = 0;
  long paley_q = 0;
  int paley_group = 0;
  c->add_option("family", family,
                "cons1|cons2|pp|gdd1|gdd2|gdd3|gh_example|paley")->required();
  c->add_option("--q", q, "prime power parameter");
  c->add_option("--Q", paley_q, "paley: prime power field size");
  c->add_option("--group", paley_group, "paley: cyclic group order");
  c->add_option("--bgw", bgw_path, "BGW exponent file ingredient");
  c->add_option("--core", core_path, "weighing core .qbw ingredient");
  c->add_option("--out", out_path, "output file");
  c->add_option("--emit-siamese", siamese_dir, "directory for the Siamese members");

  // verify
  auto* v = app.add_subcommand("verify", "certify matrices from files");
  std::string kind;
  std::vector<std::string> files;
  int vm = 0, vn = 0, roots = 2;
  v->add_option("--kind", kind,
                "weighing|qb|srg|gdd|ddg|deza|srg-balanced|siamese")->required();
  v->add_option("files", files, "input .qbw files")->required();
  v->add_option("--m", vm, "group count for gdd/ddg");
  v->add_option("--n", vn, "group size for gdd/ddg");
  v->add_option("--roots", roots, "root-of-unity order for srg-balanced");

  // scheme
  auto* s = app.add_subcommand("scheme", "association scheme operations");
  s->require_subcommand(1);
  std::string sfamily, sfile, sout, scompare;
  int sm = 0, sn = 0;
  auto* sb = s->add_subcommand("build", "build a scheme from a signed matrix");
  sb->add_option("--family", sfamily, "srg|gdd1|gdd2")->required();
  sb->add_option("file", sfile, "signed matrix .qbw")->required();
  sb->add_option("--m", sm, "group count");
  sb->add_option("--n", sn, "group size");
  sb->add_option("--out", sout, "output scheme file");
  auto* sv = s->add_subcommand("verify", "verify scheme axioms");
  sv->add_option("file", sfile, "scheme file")->required();
  auto* se = s->add_subcommand("eig", "eigenmatrices and closed-form comparison");
  se->add_option("file", sfile, "scheme file")->required();
  se->add_option("--compare", scompare, "family:p1,p2,p3 closed form");
  auto* sx = s->add_subcommand("extract", "extract the signed matrix back");
  sx->add_option("file", sfile, "scheme file")->required();
  sx->add_option("--family", sfamily, "srg|gdd1|gdd2")->required();
  sx->add_option("--out", sout, "output .qbw");

  // search
  auto* se2 = app.add_subcommand("search", "backtracking searches");
  se2->require_subcommand(1);
  std::string graph, mode = "balanced";
  bool general = false;
  long long budget = 1000000000;
  int gh_group = 0, gh_order = 0;
  auto* ss = se2->add_subcommand("sign", "sign a strongly regular graph");
  ss->add_option("--graph", graph, "fixture name or .qbw path")->required();
  ss->add_option("--roots", roots, "root-of-unity order");
  ss->add_option("--mode", mode, "balanced|weighing");
  ss->add_flag("--general", general, "do not assume a symmetric signing");
  ss->add_option("--budget", budget, "node budget");
  ss->add_option("--out", out_path, "write the found signing");
  auto* sg = se2->add_subcommand("gh", "search for a generalized Hadamard matrix");
  sg->add_option("--group", gh_group, "cyclic group order")->required();
  sg->add_option("--order", gh_order, "matrix order")->required();
  sg->add_option("--budget", budget, "node budget");
  sg->add_option("--out", out_path, "write the found matrix");

  // table
  auto* t = app.add_subcommand("table", "reproduce the srg-balanced signing table");
  std::string rows;
  std::string graph_override;
  t->add_option("--rows", rows, "comma separated parameter rows, or 'all'")->required();
  t->add_option("--roots", roots, "root-of-unity order");
  t->add_option("--budget", budget, "node budget per row");
  t->add_option("--graph", graph_override, "generator override for one row");

  // fixtures
  auto* f = app.add_subcommand("fixtures", "certify the shipped appendix signings");
  (void)f;

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c) {
      if (family == "paley") return run_paley(paley_q, paley_group, out_path, json_out);
      return run_construct(family, q, bgw_path, core_path, out_path, siamese_dir,
                           json_out);
    }
    if (*v) return run_verify(kind, files, vm, vn, roots, json_out);
    if (*s) {
      if (*sb) return run_scheme_build(sfamily, sfile, sm, sn, sout, json_out);
      if (*sv) return run_scheme_verify(sfile, json_out);
      if (*se) return run_scheme_eig(sfile, scompare, json_out);
      if (*sx) return run_scheme_extract(sfile, sfamily, sout, json_out);
    }
    if (*se2) {
      if (*ss) return run_search_sign(graph, roots, mode, general, budget, out_path,
                                      json_out);
      if (*sg) return run_search_gh(gh_group, gh_order, budget, out_path, json_out);
    }
    if (*t) return run_table(rows, roots, budget, graph_override, json_out);
    if (*f) return run_fixtures(json_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
