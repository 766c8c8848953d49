// Acceptance gate: one line per criterion, exit 0 iff every criterion passes.
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "weyl/liealg.hpp"
#include "weyl/models.hpp"
#include "weyl/spectra.hpp"
#include "weyl/verify.hpp"

using namespace weyl;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string what)
      : number_(number), what_(std::move(what)),
        start_(std::chrono::steady_clock::now()) {}

  void record(bool ok, const std::string& detail = "") {
    ok_ = ok_ && ok;
    if (!ok && !detail.empty()) {
      if (!detail_.empty()) detail_ += "; ";
      detail_ += detail;
    }
  }

  ~Criterion() {
    auto ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    std::cout << "criterion " << number_ << ": "
              << (ok_ ? "PASS" : "FAIL") << " - " << what_ << " ("
              << ms << " ms)";
    if (!ok_) {
      std::cout << " [" << detail_ << "]";
      ++g_failures;
    }
    std::cout << "\n" << std::flush;
  }

 private:
  int number_;
  std::string what_;
  bool ok_ = true;
  std::string detail_;
  std::chrono::steady_clock::time_point start_;
};

NCPoly J(int i) {
  return NCPoly::generator(gl3_spec(), "J" + std::to_string(i));
}

RepConfig dd() { return {AxisRep::differential(), AxisRep::differential()}; }

std::vector<std::pair<std::string, RepConfig>> five_reps(
    const Rational& d1, const Rational& d2, const Rational& q1,
    const Rational& q2) {
  AxisRep u1 = AxisRep::uniform(d1), u2 = AxisRep::uniform(d2);
  AxisRep e1 = AxisRep::exponential(q1), e2 = AxisRep::exponential(q2);
  return {{"dd", dd()},
          {"uu", {u1, u2}},
          {"ee", {e1, e2}},
          {"ue", {u1, e2}},
          {"eu", {e1, u2}}};
}

using UniPoly = std::map<unsigned, Rational>;

UniPoly act(const AxisRep& rep, GenClass which, const UniPoly& f) {
  UniPoly out;
  for (const auto& [a, c] : f) {
    for (const auto& [e, w] : axis_action(rep, which, a)) {
      out[e] += c * w;
      if (out[e] == 0) out.erase(e);
    }
  }
  return out;
}

bool canonical_pair_holds(const AxisRep& rep, unsigned max_deg) {
  for (unsigned a = 0; a <= max_deg; ++a) {
    UniPoly f = {{a, Rational(1)}};
    UniPoly lhs = act(rep, GenClass::P, act(rep, GenClass::Q, f));
    UniPoly rhs = act(rep, GenClass::Q, act(rep, GenClass::P, f));
    for (const auto& [e, c] : rhs) {
      lhs[e] -= c;
      if (lhs[e] == 0) lhs.erase(e);
    }
    if (lhs != f) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::mt19937 rng(std::random_device{}());
  auto rand_rat = [&](bool positive) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 9);
    Rational r;
    do {
      r = rat(num(rng), den(rng));
      if (!positive && std::uniform_int_distribution<int>(0, 1)(rng)) r = -r;
    } while (r == 0 || r == 1);
    return r;
  };
  Rational rd1 = rand_rat(false), rd2 = rand_rat(false);
  Rational rq1 = rand_rat(true), rq2 = rand_rat(true);
  std::cout << "random spacings: delta = (" << to_string(rd1) << ", "
            << to_string(rd2) << "), q = (" << to_string(rq1) << ", "
            << to_string(rq2) << ")\n";

  {
    Criterion c(1, "the pq-form pair commutes symbolically");
    CheckReport r = check_pq_pair_commutes();
    c.record(r.pass, r.residual);
  }
  {
    Criterion c(2, "all nine bilinear artifacts realize to zero");
    CheckReport r = check_artifacts_vanish();
    c.record(r.pass, r.residual);
  }
  {
    Criterion c(3, "commutator equals the twelve-block superposition");
    CheckReport r = check_block_decomposition();
    c.record(r.pass, r.residual);
    // the abstract commutator itself must not vanish
    NCPoly comm = nc_commutator(h_a2_J(ModelParams::symbolic()),
                                k_a2_J(ModelParams::symbolic()), gl3_spec());
    c.record(!comm.is_zero(), "abstract commutator vanished");
  }
  {
    Criterion c(4, "realization is a homomorphism on all 36 brackets");
    CheckReport r = check_homomorphism();
    c.record(r.pass, r.residual);
  }
  {
    Criterion c(5, "J-form operators substitute to the pq-form operators");
    CheckReport r = check_substitution_consistency();
    c.record(r.pass, r.residual);
  }
  {
    Criterion c(6, "ordered-product and commutator golden values");
    const AlgebraSpec& g = gl3_spec();
    NCPoly lhs1 = normal_order(J(4) * J(1) * J(5) * J(1), g);
    NCPoly rhs1 = normal_order(J(5) * J(4) * J(1).pow(2) + J(4) * J(2) * J(1) -
                                   J(3) * J(1).pow(2) + J(6) * J(1).pow(2),
                               g);
    c.record(lhs1 == rhs1, "first ordered product");
    NCPoly lhs2 = normal_order(J(5) * J(1) * J(4) * J(1), g);
    c.record(lhs2 == normal_order(J(5) * J(4) * J(1).pow(2), g),
             "second ordered product");
    const NCPoly& A1 = artifacts().items[0];
    const NCPoly& A2 = artifacts().items[1];
    c.record(nc_commutator(A1, A2, g) ==
                 normal_order(-(J(8) * A1) - J(7) * A2, g),
             "bilinear commutator ansatz");
    c.record(check_artifact_closure_example().pass, "closure example");
  }
  {
    Criterion c(7, "closed-form spectra in the first three sectors");
    for (int n = 0; n <= 2; ++n) {
      SectorReport r = verify_sector(n, dd());
      std::ostringstream os;
      os << "sector " << n << " mismatch: " << r.computed.str() << " vs "
         << r.reference.str();
      c.record(r.match, os.str());
    }
    // vanishing couplings leave a nilpotent sector matrix
    ModelParams p = ModelParams::sector(2);
    p.tau = ParamPoly(0);
    p.mu = ParamPoly(0);
    CharPoly cp = char_poly(operator_matrix(
        normal_order(h_a2_pq(p), h5_spec()), dd(), BasisSpec{1, 1, 2}));
    bool nilpotent = cp.degree() == 6;
    for (int k = 0; k < 6; ++k) nilpotent = nilpotent && cp.coeffs[k].is_zero();
    c.record(nilpotent, "sector 2 at tau = mu = 0 is not nilpotent");
  }
  {
    Criterion c(8, "isospectrality across all five representation types");
    auto fixed = five_reps(rat(1, 2), rat(1, 3), rat(2), rat(3, 2));
    auto random = five_reps(rd1, rd2, rq1, rq2);
    std::vector<std::pair<std::string, RepConfig>> all = fixed;
    for (auto& [name, cfg] : random) all.emplace_back(name + "-rand", cfg);
    for (int n = 1; n <= 3; ++n) {
      IsospectralityReport r = isospectrality_report(n, all);
      std::ostringstream os;
      os << "n = " << n << ": " << r.labels[r.bad_i < 0 ? 0 : r.bad_i]
         << " differs from " << r.labels[r.bad_j < 0 ? 0 : r.bad_j];
      c.record(r.all_equal, os.str());
    }
  }
  {
    Criterion c(9, "the two conserved operators commute blockwise");
    for (const auto& [name, cfg] :
         five_reps(rat(1, 2), rat(1, 3), rat(2), rat(3, 2))) {
      for (int n = 0; n <= 3; ++n) {
        c.record(commuting_block_check(n, cfg),
                 name + " fails at n = " + std::to_string(n));
      }
    }
  }
  {
    Criterion c(10, "canonical pairs hold on every axis through degree 12");
    c.record(canonical_pair_holds(AxisRep::differential(), 12), "derivative");
    c.record(canonical_pair_holds(AxisRep::uniform(rat(1, 2)), 12),
             "lattice 1/2");
    c.record(canonical_pair_holds(AxisRep::uniform(rd1), 12), "lattice rand");
    c.record(canonical_pair_holds(AxisRep::exponential(rat(2)), 12),
             "geometric 2");
    c.record(canonical_pair_holds(AxisRep::exponential(rq1), 12),
             "geometric rand");
    c.record(canonical_pair_holds(AxisRep::complex_fock(), 12), "holomorphic");
    // the geometric pair composes to the degree operator
    AxisRep e = AxisRep::exponential(rat(3, 2));
    bool euler = true;
    for (unsigned a = 0; a <= 12; ++a) {
      UniPoly f = {{a, Rational(1)}};
      UniPoly xe = act(e, GenClass::Q, act(e, GenClass::P, f));
      UniPoly expect;
      if (a > 0) expect[a] = Rational(static_cast<long>(a));
      euler = euler && xe == expect;
    }
    c.record(euler, "geometric pair is not the degree operator");
  }
  {
    Criterion c(11, "weighted-triangle invariance of the second model");
    RepConfig lattice{AxisRep::uniform(rat(1, 2)), AxisRep::uniform(rat(1, 3))};
    for (int n = 0; n <= 4; ++n) {
      for (const Rational& l : {rat(0), rat(1, 2), rat(1)}) {
        c.record(check_g2_invariance(n, l, dd()).pass,
                 "derivative rep fails at n = " + std::to_string(n));
        c.record(check_g2_invariance(n, l, lattice).pass,
                 "lattice rep fails at n = " + std::to_string(n));
      }
    }
    // a symbolic coupling must produce an escape witness
    NCPoly h = normal_order(h_g2_pq(ModelParams::symbolic()), h5_spec());
    auto w = check_invariance(h, dd(), BasisSpec{1, 2, 2});
    c.record(w.has_value() && !w->coefficient.is_zero(),
             "symbolic coupling did not escape");
  }
  {
    Criterion c(12, "classical contrast: nonvanishing Poisson bracket");
    CheckReport r = check_poisson_noncommutativity();
    c.record(r.pass, r.residual);
  }
  {
    Criterion c(13, "negative controls are detected");
    NCPoly px = NCPoly::generator(h5_spec(), "px");
    c.record(!check_pq_pair_commutes(&px).pass, "perturbed pair passed");
    NCPoly j4 = NCPoly::generator(gl3_spec(), "J4");
    c.record(!check_artifacts_vanish(&j4).pass, "perturbed artifact passed");
    c.record(!check_artifact_closure_example(true).pass,
             "sign-flipped closure passed");
  }

  if (g_failures == 0) {
    std::cout << "all 13 criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " criteria failed\n";
  return 1;
}
