#include "weyl/verify.hpp"

#include <chrono>
#include <sstream>

#include "weyl/commpoly.hpp"
#include "weyl/liealg.hpp"

namespace weyl {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckReport report(const std::string& name, bool pass,
                   const std::string& residual, const Timer& t) {
  return {name, pass, pass ? "" : residual, t.millis()};
}

}  // namespace

CheckReport check_pq_pair_commutes(const NCPoly* perturb_h) {
  Timer t;
  const AlgebraSpec& h5 = h5_spec();
  ModelParams p = ModelParams::symbolic();
  NCPoly h = h_a2_pq(p);
  if (perturb_h) h += *perturb_h;
  NCPoly k = k_a2_pq(p);
  NCPoly residual = nc_commutator(h, k, h5);
  return report("pq-commutation", residual.is_zero(), residual.str(h5), t);
}

CheckReport check_artifacts_vanish(const NCPoly* perturb_a4) {
  Timer t;
  const AlgebraSpec& h5 = h5_spec();
  const Realization& real = gl3_realization_in_h5();
  std::ostringstream bad;
  bool pass = true;
  const auto& items = artifacts().items;
  for (std::size_t i = 0; i < items.size(); ++i) {
    NCPoly a = items[i];
    if (perturb_a4 && i == 3) a += *perturb_a4;
    NCPoly image = substitute(a, real);
    if (!image.is_zero()) {
      pass = false;
      bad << "A" << i + 1 << " -> " << image.str(h5) << "; ";
    }
  }
  return report("artifact-vanishing", pass, bad.str(), t);
}

CheckReport check_block_decomposition() {
  Timer t;
  const AlgebraSpec& g = gl3_spec();
  ModelParams p = ModelParams::symbolic();
  NCPoly h = h_a2_J(p);
  NCPoly k = k_a2_J(p);
  NCPoly comm = nc_commutator(h, k, g);
  if (comm.is_zero())
    return report("block-decomposition", false,
                  "abstract commutator vanishes, expected nonzero", t);
  // blockwise: split both sides by (tau, mu) bidegree and compare
  ParamPoly tau = ParamPoly::sym(Param::Tau);
  ParamPoly mu = ParamPoly::sym(Param::Mu);
  std::map<std::pair<unsigned, unsigned>, NCPoly> lhs_blocks;
  for (const auto& [w, c] : comm.terms()) {
    for (const auto& [bideg, part] : split_tau_mu(c)) {
      auto it = lhs_blocks.find(bideg);
      if (it == lhs_blocks.end())
        it = lhs_blocks.emplace(bideg, NCPoly(AlgebraTag::GL3)).first;
      it->second.add_term(w, part);
    }
  }
  std::ostringstream bad;
  bool pass = true;
  std::map<std::pair<unsigned, unsigned>, bool> covered;
  for (const auto& blk : commutator_blocks()) {
    auto bideg = std::make_pair(blk.tau_deg, blk.mu_deg);
    covered[bideg] = true;
    NCPoly rhs = normal_order(
        (tau.pow(blk.tau_deg) * mu.pow(blk.mu_deg)) * blk.rhs, g);
    NCPoly lhs(AlgebraTag::GL3);
    auto it = lhs_blocks.find(bideg);
    if (it != lhs_blocks.end()) lhs = it->second;
    NCPoly diff = normal_order(lhs - rhs, g);
    if (!diff.is_zero()) {
      pass = false;
      bad << blk.name << " residual: " << diff.str(g) << "; ";
    }
  }
  for (const auto& [bideg, blk] : lhs_blocks) {
    if (!covered.count(bideg)) {
      pass = false;
      bad << "unexpected commutator block tau^" << bideg.first << " mu^"
          << bideg.second << ": " << blk.str(g) << "; ";
    }
  }
  return report("block-decomposition", pass, bad.str(), t);
}

CheckReport check_substitution_consistency() {
  Timer t;
  const AlgebraSpec& h5 = h5_spec();
  const Realization& real = gl3_realization_in_h5();
  ModelParams p = ModelParams::symbolic();
  NCPoly dh = substitute(h_a2_J(p), real) - normal_order(h_a2_pq(p), h5);
  NCPoly dk = substitute(k_a2_J(p), real) - normal_order(k_a2_pq(p), h5);
  dh = normal_order(dh, h5);
  dk = normal_order(dk, h5);
  std::ostringstream bad;
  if (!dh.is_zero()) bad << "h: " << dh.str(h5) << "; ";
  if (!dk.is_zero()) bad << "k: " << dk.str(h5) << "; ";
  return report("subst", dh.is_zero() && dk.is_zero(), bad.str(), t);
}

CheckReport check_artifact_closure_example(bool flip_sign) {
  Timer t;
  const AlgebraSpec& g = gl3_spec();
  const auto& art = artifacts().items;
  NCPoly j7 = NCPoly::generator(g, "J7");
  NCPoly j8 = NCPoly::generator(g, "J8");
  NCPoly ansatz = j8 * art[0] + j7 * art[1];
  if (flip_sign) ansatz = -ansatz;
  NCPoly residual =
      normal_order(nc_commutator(art[0], art[1], g) + ansatz, g);
  return report("closure", residual.is_zero(), residual.str(g), t);
}

CheckReport check_poisson_noncommutativity() {
  Timer t;
  const AlgebraSpec& h5 = h5_spec();
  ModelParams p = ModelParams::symbolic();
  CommPoly h = CommPoly::from_normal(normal_order(h_a2_pq(p), h5));
  CommPoly k = CommPoly::from_normal(normal_order(k_a2_pq(p), h5));
  CommPoly hk = poisson_bracket(h, k);
  CommPoly kh = poisson_bracket(k, h);
  CommPoly hh = poisson_bracket(h, h);
  bool pass = !hk.is_zero() && hh.is_zero() && (hk + kh).is_zero();
  std::ostringstream bad;
  if (hk.is_zero()) bad << "{h,k} vanished; ";
  if (!hh.is_zero()) bad << "{h,h} nonzero; ";
  if (!(hk + kh).is_zero()) bad << "antisymmetry broken; ";
  return report("poisson", pass, bad.str(), t);
}

CheckReport check_g2_invariance(int n, const Rational& lambda,
                                const RepConfig& rep) {
  Timer t;
  ModelParams p = ModelParams::sector(n);
  p.lambda = ParamPoly(lambda);
  NCPoly h = normal_order(h_g2_pq(p), h5_spec());
  BasisSpec basis{1, 2, static_cast<unsigned>(n)};
  auto witness = check_invariance(h, rep, basis);
  std::ostringstream bad;
  if (witness) {
    bad << "u^" << witness->basis_monomial.first << " v^"
        << witness->basis_monomial.second << " escapes to u^"
        << witness->escape_monomial.first << " v^"
        << witness->escape_monomial.second << " with coefficient "
        << witness->coefficient.str();
  }
  return report("g2", !witness, bad.str(), t);
}

CheckReport check_homomorphism() {
  Timer t;
  const AlgebraSpec& g = gl3_spec();
  const AlgebraSpec& h5 = h5_spec();
  const Realization& real = gl3_realization_in_h5();
  std::ostringstream bad;
  bool pass = true;
  check_gl3_table_against_structure_constants();
  for (int hi = 0; hi < g.size(); ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      NCPoly lhs = substitute(
          nc_commutator(NCPoly::generator(g, hi), NCPoly::generator(g, lo), g),
          real);
      NCPoly rhs = nc_commutator(real.images.at(hi), real.images.at(lo), h5);
      NCPoly diff = normal_order(lhs - rhs, h5);
      if (!diff.is_zero()) {
        pass = false;
        bad << "[" << g.name(hi) << ", " << g.name(lo)
            << "] image mismatch: " << diff.str(h5) << "; ";
      }
    }
  }
  return report("homomorphism", pass, bad.str(), t);
}

std::vector<CheckReport> run_all_checks() {
  std::vector<CheckReport> out;
  out.push_back(check_pq_pair_commutes());
  out.push_back(check_artifacts_vanish());
  out.push_back(check_block_decomposition());
  out.push_back(check_homomorphism());
  out.push_back(check_substitution_consistency());
  out.push_back(check_artifact_closure_example());
  out.push_back(check_poisson_noncommutativity());
  out.push_back(check_g2_invariance(2, rat(1, 2),
                                    {AxisRep::differential(),
                                     AxisRep::differential()}));
  return out;
}

}  // namespace weyl
