#include "qhecke/coxeter.hpp"
#include "qhecke/cyclotomic.hpp"
#include "qhecke/fock.hpp"
#include "qhecke/hall.hpp"
#include "qhecke/klr_analysis.hpp"
#include "qhecke/polyring.hpp"
#include "qhecke/suites.hpp"
#include "qhecke/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace qh;

namespace {

struct Options {
  std::string target;
  std::string quiver = "a2";
  int n = 3;
  int max_exp = 3;
  int truncation = 4;
  int q = 2;
  int p = 3;
  int max_size = 8;
  std::string max_dim = "2,2";
  int samples = 100;
  std::uint64_t seed = 1;
  std::string v, vprime;
  int i = 1;
  std::string op = "f";
  std::string format = "text";
  bool timings = false;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::vector<int> parse_ints(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--" + flag + " expects comma-separated integers, got '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError("--" + flag + " is empty");
  return out;
}

QuiverData load_quiver(const std::string& source) {
  if (source.size() >= 2 && source[0] == 'a' && source.find_first_not_of("0123456789", 1) == std::string::npos)
    return QuiverData::preset(source);
  std::ifstream in(source);
  if (!in) throw UsageError("quiver must be a1, a2, a3, ... or a readable file, got '" + source + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return QuiverData::parse(ss.str());
}

json config_json(const Options& o, const std::string& command) {
  json c;
  c["command"] = command;
  c["target"] = o.target;
  c["quiver"] = o.quiver;
  c["n"] = o.n;
  c["max_exp"] = o.max_exp;
  c["truncation"] = o.truncation;
  c["q"] = o.q;
  c["p"] = o.p;
  c["max_size"] = o.max_size;
  c["max_dim"] = o.max_dim;
  c["samples"] = o.samples;
  c["seed"] = o.seed;
  c["v"] = o.v;
  c["vprime"] = o.vprime;
  c["i"] = o.i;
  c["op"] = o.op;
  c["format"] = o.format;
  return c;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return r + "\"";
}

void emit(const Options& o, const std::string& command, const std::vector<Table>& tables, const json& summary) {
  const json cfg = config_json(o, command);
  if (o.format == "json") {
    json out;
    out["version"] = kVersion;
    out["config"] = cfg;
    out["seed"] = o.seed;
    for (const auto& [k, v] : summary.items()) out[k] = v;
    json ts = json::array();
    for (const auto& t : tables) {
      json rows = json::array();
      for (const auto& r : t.rows) {
        json row;
        for (std::size_t k = 0; k < t.columns.size(); ++k) row[t.columns[k]] = r[k];
        rows.push_back(row);
      }
      ts.push_back({{"name", t.name}, {"rows", rows}});
    }
    out["tables"] = ts;
    std::cout << out.dump(2) << "\n";
    return;
  }
  const bool csv = o.format == "csv";
  const std::string sep = csv ? "," : "\t";
  std::cout << "# qhecke " << kVersion << "\n";
  std::cout << "# config";
  for (const auto& [k, v] : cfg.items()) std::cout << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  std::cout << "\n# seed " << o.seed << "\n";
  for (const auto& [k, v] : summary.items()) std::cout << "# " << k << " " << v.dump() << "\n";
  for (const auto& t : tables) {
    std::cout << "# table " << t.name << "\n";
    for (std::size_t k = 0; k < t.columns.size(); ++k) std::cout << (k ? sep : "") << t.columns[k];
    std::cout << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t k = 0; k < r.size(); ++k) std::cout << (k ? sep : "") << (csv ? csv_field(r[k]) : r[k]);
      std::cout << "\n";
    }
  }
}

int run_verify(Options o, const CLI::App& sub) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.target) == names.end()) throw UsageError("unknown suite '" + o.target + "'");
  SuiteConfig cfg = default_config(o.target);
  // suite defaults apply unless the flag was given
  auto given = [&](const char* flag) { return sub.count(flag) > 0; };
  if (!given("--n")) o.n = cfg.n;
  if (!given("--max-exp")) o.max_exp = cfg.max_exp;
  if (!given("--samples")) o.samples = cfg.samples;
  cfg.quiver_name = o.quiver;
  cfg.quiver = load_quiver(o.quiver);
  cfg.n = o.n;
  cfg.max_exp = o.max_exp;
  cfg.truncation = o.truncation;
  cfg.q = o.q;
  cfg.p = o.p;
  cfg.max_size = o.max_size;
  cfg.max_dim = parse_ints(o.max_dim, "max-dim");
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  if (cfg.n < 1 || cfg.max_exp < 0 || cfg.truncation < 1 || cfg.max_size < 0 || cfg.samples < 0)
    throw UsageError("caps must be positive");

  const SuiteReport rep = run_suite(o.target, cfg);
  Table t{"checks", {"suite", "check", "params", "result", "detail"}, {}};
  if (o.timings) t.columns.push_back("seconds");
  for (const auto& c : rep.checks) {
    t.rows.push_back({rep.suite, c.name, c.params, c.pass ? "PASS" : "FAIL", c.detail});
    if (o.timings) t.rows.back().push_back(std::to_string(c.seconds));
  }
  json summary;
  summary["ok"] = rep.ok();
  std::size_t failed = 0;
  for (const auto& c : rep.checks) failed += !c.pass;
  summary["checks"] = rep.checks.size();
  summary["failed"] = failed;
  emit(o, "verify", {t}, summary);
  return rep.ok() ? 0 : 1;
}

std::vector<Table> hall_tables(const Options& o) {
  const HallAlgebra H(HallQuiver::from(load_quiver(o.quiver)), o.q);
  const DimVector maxd = parse_ints(o.max_dim, "max-dim");
  const int m = H.quiver().vertices;
  if (static_cast<int>(maxd.size()) != m) throw UsageError("--max-dim needs one entry per vertex");
  std::vector<DimVector> dims;
  DimVector cur(m, 0);
  while (true) {
    dims.push_back(cur);
    int k = m - 1;
    while (k >= 0 && ++cur[k] > maxd[k]) cur[k--] = 0;
    if (k < 0) break;
  }
  Table classes{"classes", {"class", "dim", "aut", "orbit"}, {}};
  Table numbers{"hall_numbers", {"L", "M", "N", "F"}, {}};
  auto dstr = [](const DimVector& d) {
    std::string s;
    for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
    return s;
  };
  for (const auto& d : dims)
    for (const auto& c : H.classes(d))
      classes.rows.push_back({H.label_str(c.label), dstr(d), std::to_string(c.aut), std::to_string(c.orbit)});
  for (const auto& d : dims)
    for (const auto& L : H.classes(d))
      for (const auto& dn : dims) {
        DimVector dm(m);
        bool fits = true;
        for (int k = 0; k < m; ++k) fits = fits && (dm[k] = d[k] - dn[k]) >= 0;
        if (!fits) continue;
        for (const auto& N : H.classes(dn))
          for (const auto& M : H.classes(dm)) {
            const auto f = H.hall_number(M.label, N.label, L.label);
            if (f)
              numbers.rows.push_back(
                  {H.label_str(L.label), H.label_str(M.label), H.label_str(N.label), std::to_string(f)});
          }
      }
  return {classes, numbers};
}

int run_compute(const Options& o) {
  std::vector<Table> tables;
  if (o.target == "poincare") {
    if (o.n < 1 || o.n > 8) throw UsageError("--n must be in 1..8 for poincare");
    Table t{"poincare", {"length", "count", "product_formula"}, {}};
    const Laurent lhs = poincare_polynomial(o.n), rhs = poincare_product_formula(o.n);
    for (int k = 0; k <= lhs.max_exponent(); ++k)
      t.rows.push_back({std::to_string(k), lhs.coeff(k).str(), rhs.coeff(k).str()});
    tables.push_back(t);
  } else if (o.target == "schubert-basis") {
    if (o.n < 1 || o.n > 6) throw UsageError("--n must be in 1..6 for schubert-basis");
    Table t{"schubert_basis", {"w", "length", "b_w"}, {}};
    for (const auto& [w, b] : schubert_basis(o.n)) t.rows.push_back({w.str(), std::to_string(w.length()), b.str()});
    tables.push_back(t);
  } else if (o.target == "grdim") {
    if (o.v.empty() || o.vprime.empty()) throw UsageError("grdim needs --v and --vprime");
    const QuiverData Q = load_quiver(o.quiver);
    const auto v = parse_ints(o.v, "v"), vp = parse_ints(o.vprime, "vprime");
    for (int x : v)
      if (x < 1 || x > Q.vertices()) throw UsageError("--v entry out of range");
    for (int x : vp)
      if (x < 1 || x > Q.vertices()) throw UsageError("--vprime entry out of range");
    if (v.size() != vp.size()) throw UsageError("--v and --vprime must have the same length");
    Table t{"grdim", {"v", "vprime", "grdim"}, {}};
    t.rows.push_back({sequence_str(v), sequence_str(vp), hom_graded_dimension(Q, v, vp).str("v")});
    tables.push_back(t);
  } else if (o.target == "cyclotomic-basis") {
    if (o.n < 0 || o.n > 6 || o.i < 0) throw UsageError("cyclotomic-basis needs 0 <= --n <= 6 and --i >= 0");
    Table t{"cyclotomic_basis", {"index", "element"}, {}};
    const auto basis = cyclotomic_basis(o.n, o.i);
    for (std::size_t k = 0; k < basis.size(); ++k) t.rows.push_back({std::to_string(k), basis[k].str()});
    tables.push_back(t);
  } else if (o.target == "hall-table") {
    tables = hall_tables(o);
  } else if (o.target == "fock-matrix") {
    if (o.op != "e" && o.op != "f") throw UsageError("--op must be e or f");
    if (o.max_size < 0 || o.max_size > 20) throw UsageError("--max-size must be in 0..20 for fock-matrix");
    Table t{"fock_matrix", {"target", "source", "entry"}, {}};
    const FockMatrix fm = fock_matrix(o.op[0], o.i, o.p, o.max_size);
    for (std::size_t r = 0; r < fm.rows.size(); ++r)
      for (std::size_t c = 0; c < fm.cols.size(); ++c)
        if (fm.entries[r][c] != 0) t.rows.push_back({fm.rows[r].str(), fm.cols[c].str(), fm.entries[r][c].str()});
    tables.push_back(t);
  } else {
    throw UsageError("unknown computation '" + o.target + "'");
  }
  emit(o, "compute", tables, json::object());
  return 0;
}

void add_flags(CLI::App* sub, Options& o) {
  sub->add_option("--quiver", o.quiver, "a1, a2, a3, ... or a file of 'i -> j' lines or Cartan rows");
  sub->add_option("--n", o.n, "rank (strands); level for cyclotomic-basis");
  sub->add_option("--max-exp", o.max_exp, "exponent-sum cap for polynomial parts");
  sub->add_option("--truncation", o.truncation, "truncation degree N for heckebridge");
  sub->add_option("--v", o.v, "colour sequence, e.g. 1,2");
  sub->add_option("--vprime", o.vprime, "colour sequence, e.g. 2,1");
  sub->add_option("--q", o.q, "field size for hall (2, 3, 4, 5)");
  sub->add_option("--p", o.p, "residue modulus for fock");
  sub->add_option("--max-size", o.max_size, "partition size cap for fock; size n for fock-matrix");
  sub->add_option("--max-dim", o.max_dim, "dimension-vector cap for hall, e.g. 2,2");
  sub->add_option("--samples", o.samples, "number of random samples");
  sub->add_option("--seed", o.seed, "seed for randomized checks");
  sub->add_option("--i", o.i, "strands for cyclotomic-basis; residue for fock-matrix");
  sub->add_option("--op", o.op, "e or f for fock-matrix");
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quiver Hecke, nil Hecke, Hall and Fock space identities"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.target, "demazure, nilhecke, klr-relations, pbw, grdim, cyclotomic, heckebridge, hall, fock")
      ->required();
  verify->add_flag("--timings", o.timings, "include wall time per check (output is then not reproducible)");
  add_flags(verify, o);
  auto* compute = app.add_subcommand("compute", "emit a table");
  compute->add_option("what", o.target, "poincare, schubert-basis, grdim, cyclotomic-basis, hall-table, fock-matrix")
      ->required();
  add_flags(compute, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (verify->parsed()) return run_verify(o, *verify);
    return run_compute(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
