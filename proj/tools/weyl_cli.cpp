// Command-line entry point: verify / matrix / spectrum / isospectral /
// dump-model over the exact operator library.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyl/commpoly.hpp"
#include "weyl/fockrep.hpp"
#include "weyl/liealg.hpp"
#include "weyl/models.hpp"
#include "weyl/spectra.hpp"
#include "weyl/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace weyl;

constexpr const char* kSchemaVersion = "1";

// "sym" keeps a parameter symbolic; anything else must be "n" or "n/d".
ParamPoly bind_param(const std::string& text, Param p) {
  if (text == "sym") return ParamPoly::sym(p);
  return ParamPoly(parse_rational(text));
}

struct Spacings {
  std::string delta1 = "1/2", delta2 = "1/3", q1 = "2", q2 = "3/2";
};

AxisRep make_axis(char kind, bool is_x, const Spacings& s) {
  switch (kind) {
    case 'd':
      return AxisRep::differential();
    case 'u':
      return AxisRep::uniform(parse_rational(is_x ? s.delta1 : s.delta2));
    case 'e':
      return AxisRep::exponential(parse_rational(is_x ? s.q1 : s.q2));
    case 'c':
      return AxisRep::complex_fock();
    default:
      throw std::invalid_argument(std::string("unknown axis kind: ") + kind);
  }
}

// "dd", "uu", "ee", "ue", "eu", or "cf" (complex Fock on both axes).
RepConfig make_rep(const std::string& name, const Spacings& s) {
  if (name == "cf") return {AxisRep::complex_fock(), AxisRep::complex_fock()};
  if (name.size() != 2)
    throw std::invalid_argument("unknown representation: " + name);
  return {make_axis(name[0], true, s), make_axis(name[1], false, s)};
}

unsigned thread_cap() {
  if (const char* env = std::getenv("WEYL_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

json report_json(const CheckReport& r) {
  json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["residual"] = r.residual;
  j["millis"] = r.millis;
  return j;
}

void print_report(const CheckReport& r, bool as_json, json& sink) {
  if (as_json) {
    sink.push_back(report_json(r));
  } else {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.pass) std::cout << "  residual: " << r.residual;
    std::cout << "\n";
  }
}

int run_verify(const std::vector<std::string>& which, bool as_json) {
  std::map<std::string, std::function<CheckReport()>> table = {
      {"commute", [] { return check_pq_pair_commutes(); }},
      {"artifacts", [] { return check_artifacts_vanish(); }},
      {"blocks", [] { return check_block_decomposition(); }},
      {"homomorphism", [] { return check_homomorphism(); }},
      {"subst", [] { return check_substitution_consistency(); }},
      {"closure", [] { return check_artifact_closure_example(); }},
      {"poisson", [] { return check_poisson_noncommutativity(); }},
      {"g2",
       [] {
         return check_g2_invariance(
             2, rat(1, 2),
             {AxisRep::differential(), AxisRep::differential()});
       }},
  };
  std::vector<std::string> names;
  for (const auto& w : which) {
    if (w == "all") {
      for (const auto& [k, fn] : table) names.push_back(k);
    } else if (table.count(w)) {
      names.push_back(w);
    } else {
      std::cerr << "unknown check: " << w << "\n";
      return 2;
    }
  }
  // Buffered parallel execution, emitted in request order.
  unsigned cap = thread_cap();
  std::vector<CheckReport> results(names.size());
  std::size_t next = 0;
  while (next < names.size()) {
    std::size_t batch = std::min<std::size_t>(cap, names.size() - next);
    std::vector<std::future<CheckReport>> futs;
    for (std::size_t i = 0; i < batch; ++i)
      futs.push_back(std::async(std::launch::async, table[names[next + i]]));
    for (std::size_t i = 0; i < batch; ++i) results[next + i] = futs[i].get();
    next += batch;
  }
  json sink = json::array();
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    print_report(r, as_json, sink);
  }
  if (as_json) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["checks"] = sink;
    out["all_pass"] = all_pass;
    std::cout << out.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}

struct ModelFlags {
  std::string model;
  int n = 0;
  std::string tau = "sym", mu = "sym", lambda = "0", nu;
  Spacings spacings;
  std::string rep = "dd";
};

ModelParams make_params(const ModelFlags& f) {
  ModelParams p = ModelParams::sector(f.n);
  p.tau = bind_param(f.tau, Param::Tau);
  p.mu = bind_param(f.mu, Param::Mu);
  p.lambda = bind_param(f.lambda, Param::Lambda);
  if (!f.nu.empty() && f.nu != "sym") {
    Rational given = parse_rational(f.nu);
    if (given != rat(-f.n, 3))
      throw std::invalid_argument("nu must equal -n/3 for sector n");
  }
  return p;
}

int run_matrix(const ModelFlags& f) {
  ModelParams p = make_params(f);
  NCPoly op = NCPoly::zero(AlgebraTag::H5);
  BasisSpec basis{1, 1, static_cast<unsigned>(f.n)};
  if (f.model == "hA2") {
    op = h_a2_pq(p);
  } else if (f.model == "kA2") {
    op = k_a2_pq(p);
  } else if (f.model == "hG2") {
    op = h_g2_pq(p);
    basis = BasisSpec{1, 2, static_cast<unsigned>(f.n)};
  } else {
    throw std::invalid_argument("unknown model: " + f.model);
  }
  RepConfig rep = make_rep(f.rep, f.spacings);
  OperatorMatrix m =
      operator_matrix(normal_order(op, h5_spec()), rep, basis);
  json out;
  out["schema_version"] = kSchemaVersion;
  out["model"] = f.model;
  out["rep"] = f.rep;
  out["n"] = f.n;
  out["dim"] = m.dim;
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  out["entries"] = rows;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_spectrum(const ModelFlags& f) {
  if (f.model != "hA2")
    throw std::invalid_argument("spectrum supports --model hA2 only");
  ModelParams p = make_params(f);
  NCPoly h = normal_order(h_a2_pq(p), h5_spec());
  BasisSpec basis{1, 1, static_cast<unsigned>(f.n)};
  RepConfig rep = make_rep(f.rep, f.spacings);
  CharPoly computed = char_poly(operator_matrix(h, rep, basis));
  json out;
  out["schema_version"] = kSchemaVersion;
  out["model"] = f.model;
  out["rep"] = f.rep;
  out["n"] = f.n;
  out["char_poly"] = computed.str();
  bool have_ref = f.n <= 2 && f.tau == "sym" && f.mu == "sym";
  int code = 0;
  if (have_ref) {
    CharPoly ref = reference_char_poly_hA2(f.n);
    out["factored_reference"] = ref.str();
    bool match = (computed == ref);
    out["match"] = match;
    code = match ? 0 : 1;
  } else {
    out["factored_reference"] = nullptr;
    out["match"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return code;
}

int run_isospectral(const ModelFlags& f, const std::string& reps_csv) {
  std::vector<std::pair<std::string, RepConfig>> configs;
  std::string cur;
  std::vector<std::string> names;
  for (char ch : reps_csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  for (const auto& nm : names) configs.push_back({nm, make_rep(nm, f.spacings)});
  if (configs.size() < 2)
    throw std::invalid_argument("isospectral needs at least two reps");
  IsospectralityReport rep = isospectrality_report(f.n, configs);
  json out;
  out["schema_version"] = kSchemaVersion;
  out["n"] = f.n;
  out["reps"] = rep.labels;
  json table = json::array();
  for (std::size_t i = 0; i < rep.polys.size(); ++i)
    for (std::size_t j = i + 1; j < rep.polys.size(); ++j) {
      json cell;
      cell["pair"] = {rep.labels[i], rep.labels[j]};
      cell["equal"] = (rep.polys[i] == rep.polys[j]);
      table.push_back(cell);
    }
  out["pairwise"] = table;
  out["char_poly"] = rep.polys.empty() ? "" : rep.polys[0].str();
  out["all_equal"] = rep.all_equal;
  std::cout << out.dump(2) << "\n";
  return rep.all_equal ? 0 : 1;
}

int run_dump(const std::string& which) {
  ModelParams p = ModelParams::symbolic();
  const AlgebraSpec& h5 = h5_spec();
  const AlgebraSpec& g = gl3_spec();
  json out;
  out["schema_version"] = kSchemaVersion;
  out["model"] = which;
  if (which == "hA2pq") {
    out["text"] = normal_order(h_a2_pq(p), h5).str(h5);
  } else if (which == "kA2pq") {
    out["text"] = normal_order(k_a2_pq(p), h5).str(h5);
  } else if (which == "hA2J") {
    out["text"] = normal_order(h_a2_J(p), g).str(g);
  } else if (which == "kA2J") {
    out["text"] = normal_order(k_a2_J(p), g).str(g);
  } else if (which == "hG2pq") {
    out["text"] = normal_order(h_g2_pq(p), h5).str(h5);
  } else {
    throw std::invalid_argument("unknown model: " + which);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

void add_param_flags(CLI::App* cmd, ModelFlags& f, bool with_lambda) {
  cmd->add_option("--n", f.n, "sector index (nu = -n/3)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--tau", f.tau, "tau binding: rational or 'sym'");
  cmd->add_option("--mu", f.mu, "mu binding: rational or 'sym'");
  if (with_lambda)
    cmd->add_option("--lambda", f.lambda, "lambda binding: rational or 'sym'");
  cmd->add_option("--nu", f.nu, "optional nu binding; must equal -n/3");
  cmd->add_option("--delta1", f.spacings.delta1, "x-axis lattice spacing");
  cmd->add_option("--delta2", f.spacings.delta2, "y-axis lattice spacing");
  cmd->add_option("--q1", f.spacings.q1, "x-axis exponential base");
  cmd->add_option("--q2", f.spacings.q2, "y-axis exponential base");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for a commuting pair of finite-difference"
               " operators with polynomial invariant subspaces"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand(
      "verify",
      "run named structural checks: all, commute, artifacts, blocks, "
      "homomorphism, subst, closure, poisson, g2");
  std::vector<std::string> checks{"all"};
  bool as_json = false;
  verify->add_option("checks", checks, "check names (default: all)");
  verify->add_flag("--json", as_json, "emit JSON report");

  ModelFlags mf;
  auto* matrix = app.add_subcommand("matrix", "operator matrix on the bounded "
                                              "monomial basis, as JSON");
  matrix->add_option("--model", mf.model, "hA2 | kA2 | hG2")->required();
  matrix->add_option("--rep", mf.rep, "dd|uu|ee|ue|eu|cf");
  add_param_flags(matrix, mf, true);

  ModelFlags sf;
  auto* spectrum = app.add_subcommand(
      "spectrum", "characteristic polynomial vs the closed-form reference");
  spectrum->add_option("--model", sf.model, "hA2")->required();
  spectrum->add_option("--rep", sf.rep, "dd|uu|ee|ue|eu|cf");
  add_param_flags(spectrum, sf, false);

  ModelFlags isf;
  std::string reps_csv = "dd,uu,ee,ue,eu";
  auto* iso = app.add_subcommand(
      "isospectral", "pairwise equality of characteristic polynomials across "
                     "representations");
  iso->add_option("--reps", reps_csv, "comma-separated rep list");
  add_param_flags(iso, isf, false);

  std::string dump_which;
  auto* dump = app.add_subcommand("dump-model",
                                  "canonical text of a model operator");
  dump->add_option("--model", dump_which, "hA2pq|kA2pq|hA2J|kA2J|hG2pq")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return run_verify(checks, as_json);
    if (*matrix) return run_matrix(mf);
    if (*spectrum) return run_spectrum(sf);
    if (*iso) return run_isospectral(isf, reps_csv);
    if (*dump) return run_dump(dump_which);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
