#include "weyl/models.hpp"

#include <stdexcept>

namespace weyl {

ModelParams ModelParams::sector(int n) {
  ModelParams p;
  p.nu = ParamPoly(rat(-n, 3));
  return p;
}

SpectralSector::SpectralSector(int n_) : n(n_) {
  if (n_ < 0) throw std::invalid_argument("sector index must be nonnegative");
  nu_value = rat(-n_, 3);
  kappa = rat(static_cast<long>(n_) * (n_ + 3), 9);
}

namespace {

struct H5Ctx {
  const AlgebraSpec& spec = h5_spec();
  NCPoly qx = NCPoly::generator(spec, "qx");
  NCPoly qy = NCPoly::generator(spec, "qy");
  NCPoly px = NCPoly::generator(spec, "px");
  NCPoly py = NCPoly::generator(spec, "py");
  NCPoly S(const ParamPoly& c) const {
    return NCPoly::scalar(AlgebraTag::H5, c);
  }
};

ParamPoly R(long a, long b = 1) { return ParamPoly(rat(a, b)); }

}  // namespace

NCPoly h_a2_pq(const ModelParams& prm) {
  H5Ctx c;
  const auto &qx = c.qx, &qy = c.qy, &px = c.px, &py = c.py;
  const ParamPoly &t = prm.tau, &m = prm.mu, &v = prm.nu;
  ParamPoly one_3nu = R(1) + 3 * v;  // (1+3nu)

  NCPoly cxx = qx + (3 * t) * qx.pow(2) + (3 * m) * qx.pow(3) +
               (3 * (m - t * t)) * qy.pow(2) - (3 * m * t) * (qx * qy.pow(2)) -
               (3 * m * m) * (qx.pow(2) * qy.pow(2));
  NCPoly cxy = qy * (c.S(R(3)) + (8 * t) * qx + (7 * m) * qx.pow(2) -
                     (3 * m * t) * qy.pow(2) - (6 * m * m) * (qx * qy.pow(2)));
  NCPoly cyy = R(1, 3) * (-qx.pow(2) + (9 * t) * qy.pow(2) +
                          (12 * m) * (qx * qy.pow(2)) -
                          (9 * m * m) * qy.pow(4));
  NCPoly cx = one_3nu * (c.S(R(1)) + (4 * t) * qx + (5 * m) * qx.pow(2) -
                         (3 * m * t) * qy.pow(2) -
                         (6 * m * m) * (qx * qy.pow(2)));
  NCPoly cy = (2 * one_3nu) *
              (qy * (c.S(2 * t) + (3 * m) * qx - (3 * m * m) * qy.pow(2)));
  NCPoly c0 =
      (3 * v * one_3nu * m) * ((2 * R(1)) * qx - (3 * m) * qy.pow(2));

  return cxx * px.pow(2) + cxy * (px * py) + cyy * py.pow(2) + cx * px +
         cy * py + c0;
}

NCPoly k_a2_pq(const ModelParams& prm) {
  H5Ctx c;
  const auto &qx = c.qx, &qy = c.qy, &px = c.px, &py = c.py;
  const ParamPoly &t = prm.tau, &m = prm.mu, &v = prm.nu;
  ParamPoly c1 = R(1) + 3 * v;  // (1+3nu)
  ParamPoly c2 = R(2) + 3 * v;  // (2+3nu)

  NCPoly d0 = (2 * v * c1 * c2 * m) *
              (qy * (c.S(2 * t) + (3 * m) * qx - (3 * m * m) * qy.pow(2)));

  NCPoly dx = (R(1, 3) * c1 * c2) *
              (qy * (c.S(m + 8 * t * t) + (28 * m * t) * qx +
                     (21 * m * m) * qx.pow(2) -
                     (9 * m * m * t) * qy.pow(2) -
                     (18 * m * m * m) * (qx * qy.pow(2))));

  NCPoly dy = (R(-2, 9) * c1 * c2) *
              (c.S(R(1)) + (4 * t) * qx + (6 * m) * qx.pow(2) -
               (24 * m * t) * qy.pow(2) - (36 * m * m) * (qx * qy.pow(2)) +
               (27 * m * m * m) * qy.pow(4));

  NCPoly dxx =
      c2 * (qy * (c.S(3 * t) + (4 * (2 * t * t + m)) * qx +
                  (17 * m * t) * qx.pow(2) + (8 * m * m) * qx.pow(3) +
                  (3 * m * (t * t - 2 * m)) * qy.pow(2) -
                  (6 * m * m * t) * (qx * qy.pow(2)) -
                  (6 * m * m * m) * (qx.pow(2) * qy.pow(2))));

  NCPoly dxy =
      (R(-2, 3) * c2) *
      (qx + (4 * t) * qx.pow(2) + (5 * m) * qx.pow(3) +
       (3 * (m - 4 * t * t)) * qy.pow(2) -
       (27 * m * m) * (qx.pow(2) * qy.pow(2)) -
       (33 * m * t) * (qx * qy.pow(2)) + (9 * m * m * t) * qy.pow(4) +
       (18 * m * m * m) * (qx * qy.pow(4)));

  NCPoly dyy = (-c2) * (qy * (c.S(R(1)) + (R(8, 3) * t) * qx +
                              (3 * m) * qx.pow(2) - (7 * m * t) * qy.pow(2) -
                              (10 * m * m) * (qx * qy.pow(2)) +
                              (6 * m * m * m) * qy.pow(4)));

  NCPoly dxxx =
      qy * (c.S(R(1)) + (5 * t) * qx + (2 * (2 * m + 3 * t * t)) * qx.pow(2) +
            (3 * m * (t * t - 2 * m)) * (qx * qy.pow(2)) +
            (9 * m * t) * qx.pow(3) - (t * (3 * m - 2 * t * t)) * qy.pow(2) +
            (3 * m * m) * qx.pow(4) -
            (3 * m * m * t) * (qx.pow(2) * qy.pow(2)) -
            (2 * m * m * m) * (qx.pow(3) * qy.pow(2)));

  NCPoly dxxy = R(-2, 3) * qx.pow(2) +
                (2 * (5 * t * t + m)) * (qx * qy.pow(2)) -
                (2 * t) * qx.pow(3) + (3 * t) * qy.pow(2) -
                (2 * m) * qx.pow(4) + (3 * m * (t * t - 2 * m)) * qy.pow(4) +
                (19 * m * t) * (qx.pow(2) * qy.pow(2)) -
                (6 * m * m * m) * (qx.pow(2) * qy.pow(4)) +
                (10 * m * m) * (qx.pow(3) * qy.pow(2)) -
                (6 * m * m * t) * (qx * qy.pow(4));

  NCPoly dxyy =
      -(qy * (qx + (R(10, 3) * t) * qx.pow(2) + (R(11, 3) * m) * qx.pow(3) -
              (13 * m * t) * (qx * qy.pow(2)) +
              (3 * (m - 2 * t * t)) * qy.pow(2) -
              (11 * m * m) * (qx.pow(2) * qy.pow(2)) +
              (3 * m * m * t) * qy.pow(4) +
              (6 * m * m * m) * (qx * qy.pow(4))));

  NCPoly dyyy = -(qy.pow(2) + R(2, 27) * qx.pow(3) +
                  (2 * t) * (qx * qy.pow(2)) - (3 * m * t) * qy.pow(4) +
                  (R(5, 3) * m) * (qx.pow(2) * qy.pow(2)) -
                  (4 * m * m) * (qx * qy.pow(4)) +
                  (2 * m * m * m) * qy.pow(6));

  return d0 + dx * px + dy * py + dxx * px.pow(2) + dxy * (px * py) +
         dyy * py.pow(2) + dxxx * px.pow(3) + dxxy * (px.pow(2) * py) +
         dxyy * (px * py.pow(2)) + dyyy * py.pow(3);
}

namespace {

struct GL3Ctx {
  const AlgebraSpec& spec = gl3_spec();
  NCPoly J(int i) const { return NCPoly::generator(spec, 8 - i); }
  NCPoly S(const ParamPoly& c) const {
    return NCPoly::scalar(AlgebraTag::GL3, c);
  }
};

}  // namespace

NCPoly h_a2_J(const ModelParams& prm) {
  GL3Ctx g;
  auto J = [&](int i) { return g.J(i); };
  const ParamPoly &t = prm.tau, &m = prm.mu;

  NCPoly base = 2 * (J(6) * J(1)) - R(1, 3) * J(5).pow(2) - J(1) * J(0);
  NCPoly mu_block = 2 * (J(8) * J(5)) + J(7) * J(3) - 2 * (J(7) * J(0)) +
                    3 * J(4).pow(2) + 2 * J(7);
  NCPoly tau_block = 4 * (J(8) * J(2)) + 4 * (J(7) * J(1)) - J(6).pow(2) -
                     J(3).pow(2) + 5 * J(6) + 5 * J(3);
  return base + m * mu_block + t * tau_block -
         (3 * t * m) * (J(8) * J(4)) - (3 * m * m) * J(8).pow(2) -
         (3 * t * t) * J(4).pow(2);
}

NCPoly k_a2_J(const ModelParams& prm) {
  GL3Ctx g;
  auto J = [&](int i) { return g.J(i); };
  const ParamPoly &t = prm.tau, &m = prm.mu;

  NCPoly base = R(-2, 9) * (J(6).pow(2) * J(2)) +
                R(2, 9) * (J(6) * J(5) * J(1)) +
                R(5, 9) * (J(6) * J(2) * J(0)) - R(2, 27) * J(5).pow(3) +
                R(2, 9) * (J(5) * J(1) * J(0)) + J(4) * J(1).pow(2) -
                R(2, 9) * (J(3).pow(2) * J(2)) -
                R(2, 9) * (J(2) * J(0).pow(2)) + R(2, 9) * (J(6) * J(2)) +
                R(2, 9) * (J(5) * J(1)) + R(2, 9) * (J(2) * J(0)) +
                R(4, 9) * (J(6) * J(5) * J(1)) - R(4, 9) * (J(6) * J(3) * J(2));

  NCPoly tau_block = R(8, 9) * (J(7) * J(6) * J(2)) +
                     R(8, 9) * (J(7) * J(5) * J(1)) -
                     R(8, 9) * (J(7) * J(2) * J(0)) +
                     R(2, 9) * (J(6) * J(6) * J(5)) -
                     R(2, 9) * (J(6) * J(5) * J(3)) +
                     R(2, 9) * (J(5) * J(3) * J(3)) -
                     2 * (J(4) * J(3) * J(1)) - 3 * (J(8) * J(1) * J(1)) +
                     R(2, 3) * (J(6) * J(5)) + R(2, 3) * (J(5) * J(3)) -
                     R(16, 9) * (J(5) * J(0)) - 4 * (J(4) * J(1)) +
                     6 * (J(4) * J(1)) + 3 * (J(4) * J(1) * J(0)) +
                     R(8, 9) * (J(5) * J(0)) + R(8, 9) * (J(5) * J(0).pow(2)) -
                     R(8, 9) * (J(5) * J(3)) - R(8, 9) * (J(5) * J(3) * J(0)) -
                     R(8, 9) * (J(6) * J(5)) - R(8, 9) * (J(6) * J(5) * J(0)) +
                     R(8, 9) * (J(7) * J(2) * J(0)) -
                     R(8, 9) * (J(7) * J(5) * J(1)) -
                     R(8, 9) * (J(7) * J(6) * J(2)) +
                     3 * (J(8) * J(1).pow(2));

  NCPoly tau2_block = R(2, 3) * (J(6).pow(2) * J(4)) -
                      R(2, 3) * (J(6) * J(4) * J(3)) -
                      R(8, 3) * (J(6) * J(4) * J(0)) +
                      R(2, 3) * (J(4) * J(3).pow(2)) -
                      R(8, 3) * (J(4) * J(3) * J(0)) +
                      R(8, 3) * (J(4) * J(0).pow(2)) -
                      R(4, 3) * (J(6) * J(4)) - R(4, 3) * (J(4) * J(3)) +
                      R(8, 3) * (J(4) * J(0)) + 2 * J(4);

  NCPoly mu_block = R(1, 3) * (J(7) * J(6) * J(5)) +
                    R(2, 3) * (J(7) * J(5) * J(3)) -
                    R(4, 3) * (J(7) * J(5) * J(0)) +
                    R(2, 3) * (J(6).pow(2) * J(4)) -
                    R(2, 3) * (J(6) * J(4) * J(3)) -
                    R(8, 3) * (J(6) * J(4) * J(0)) -
                    R(1, 3) * (J(4) * J(3).pow(2)) +
                    R(10, 3) * (J(4) * J(3) * J(0)) -
                    R(1, 3) * (J(4) * J(0).pow(2)) +
                    R(4, 3) * (J(7) * J(5)) - R(4, 3) * (J(6) * J(4)) +
                    R(5, 3) * (J(4) * J(3)) - R(1, 3) * (J(4) * J(0));

  NCPoly mutau_block =
      4 * (J(8) * J(0)) - R(1, 3) * (J(8) * J(6).pow(2)) +
      R(28, 3) * (J(8) * J(6) * J(3)) + R(4, 3) * (J(8) * J(6) * J(0)) -
      R(7, 3) * (J(8) * J(3).pow(2)) + R(16, 3) * (J(8) * J(3) * J(0)) -
      R(4, 3) * (J(8) * J(0).pow(2)) - 10 * (J(7) * J(6) * J(4)) +
      3 * J(4).pow(3) - J(8) * J(6) + 7 * (J(8) * J(3)) - R(8, 3) * J(8);

  NCPoly mu2_block = 2 * (J(8) * J(7) * J(6)) + J(8) * J(7) * J(3) -
                     2 * (J(8) * J(7) * J(0)) - 6 * (J(8) * J(4).pow(2)) +
                     4 * (J(8) * J(7));

  return base - t * tau_block + (t * t) * tau2_block +
         (2 * t * t * t) * J(4).pow(3) - m * mu_block - (m * t) * mutau_block +
         (3 * m * t * t) * (J(8) * J(4).pow(2)) -
         (3 * m * m * t) * (J(8).pow(2) * J(4)) + (m * m) * mu2_block -
         (2 * m * m * m) * J(8).pow(3);
}

NCPoly h_g2_pq(const ModelParams& prm) {
  H5Ctx c;
  // generators read as (qu, qv, pu, pv)
  const auto &qu = c.qx, &qv = c.qy, &pu = c.px, &pv = c.py;
  const ParamPoly &t = prm.tau, &m = prm.mu, &v = prm.nu, &l = prm.lambda;
  ParamPoly one_3nu = R(1) + 3 * v;

  NCPoly cuu = qu + (3 * t) * qu.pow(2) + (3 * m) * qu.pow(3) +
               (3 * (m - t * t)) * qv - (3 * m * t) * (qu * qv) -
               (3 * m * m) * (qu.pow(2) * qv);
  NCPoly cuv = 2 * (qv * (c.S(R(3)) + (8 * t) * qu + (7 * m) * qu.pow(2) -
                          (3 * m * t) * qv - (6 * m * m) * (qu * qv)));
  NCPoly cvv = 4 * (qv * (R(-1, 3) * qu.pow(2) + (3 * t) * qv +
                          (4 * m) * (qu * qv) - (3 * m * m) * qv.pow(2)));
  NCPoly cu = one_3nu * (c.S(R(1)) + (4 * t) * qu + (5 * m) * qu.pow(2) -
                         (3 * m * t) * qv - (6 * m * m) * (qu * qv));
  NCPoly cv = 2 * (R(-1, 3) * qu.pow(2) + (t * (R(7) + 12 * v)) * qv +
                   (2 * m * (R(5) + 9 * v)) * (qu * qv) -
                   (9 * m * m * (R(1) + 2 * v)) * qv.pow(2));
  NCPoly c0 = (3 * v * one_3nu * m) * ((2 * R(1)) * qu - (3 * m) * qv);
  NCPoly lam = l * (6 * ((c.S(R(1)) + (2 * t) * qu + m * qu.pow(2)) * pu) +
                    4 * ((-qu.pow(2) + (3 * t) * qv + (3 * m) * (qu * qv)) *
                         pv) +
                    (18 * v * m) * qu);

  return cuu * pu.pow(2) + cuv * (pu * pv) + cvv * pv.pow(2) + cu * pu +
         cv * pv + c0 + lam;
}

const std::vector<CommutatorBlock>& commutator_blocks() {
  static const std::vector<CommutatorBlock> blocks = [] {
    GL3Ctx g;
    auto J = [&](int i) { return g.J(i); };
    const auto& art = artifacts().items;
    auto A = [&](int i) { return art[i - 1]; };
    auto S = [&](const ParamPoly& c) { return g.S(c); };

    std::vector<CommutatorBlock> out;

    NCPoly d1 = R(-2, 9) * ((8 * (J(4) * J(2)) + 3 * (J(3) * J(1))) * A(9)) +
                R(-2, 9) * ((8 * (J(5) * J(1)) - 8 * (J(3) * J(2)) -
                             11 * (J(2) * J(0))) *
                            A(8)) -
                R(4, 3) * (J(2) * J(1) * A(7)) -
                R(22, 9) * (J(2) * J(1) * A(6)) +
                R(4, 9) * (J(2) * J(1) * A(5)) +
                R(22, 9) * (J(2).pow(2) * A(4)) -
                R(4, 9) * (J(1).pow(2) * A(3));
    out.push_back({"D1", 0, 0, d1});

    NCPoly d2 =
        R(2, 9) * ((-6 * J(6).pow(2) - 6 * (J(5) * J(4)) +
                    3 * (J(3) * J(0)) + 4 * J(0).pow(2) - 8 * J(6) +
                    3 * J(3) + 10 * J(0) + S(R(-14))) *
                   A(9)) +
        R(8, 9) * ((3 * (J(6) * J(5)) + 9 * (J(4) * J(1)) + 4 * J(5)) *
                   A(8)) -
        R(2, 9) * ((12 * (J(5) * J(1)) - 13 * (J(2) * J(0))) * A(7)) -
        R(28, 9) * (J(6) * J(2) * A(5)) + R(28, 9) * (J(6) * J(1) * A(3));
    out.push_back({"D2", 1, 0, d2});

    NCPoly d3 =
        R(2, 9) * ((2 * (J(8) * J(5)) - 4 * (J(7) * J(3)) +
                    3 * (J(7) * J(0)) - 36 * J(4).pow(2) + 4 * J(7)) *
                   A(9)) +
        R(1, 3) * ((2 * (J(8) * J(1)) - 7 * (J(7) * J(5)) +
                    24 * (J(4) * J(3)) + 30 * J(4)) *
                   A(8)) +
        R(1, 9) * ((5 * (J(7) * J(2)) + 12 * (J(6) * J(5)) -
                    12 * (J(5) * J(3)) + 36 * (J(5) * J(0)) - 10 * J(5)) *
                   A(7)) -
        R(4, 9) * ((3 * (J(5) * J(0)) - 4 * J(5)) * A(6)) -
        R(1, 9) * ((36 * (J(6) * J(5)) - 16 * (J(5) * J(3)) +
                    12 * (J(5) * J(0)) + 63 * (J(4) * J(1))) *
                   A(5)) +
        R(1, 3) * ((-8 * (J(6) * J(1)) - 10 * (J(4) * J(2)) +
                    3 * (J(3) * J(1)) + 6 * (J(1) * J(0)) + 17 * J(1)) *
                   A(4)) +
        R(1, 9) * ((4 * J(6).pow(2) - J(6) * J(0) - 4 * (J(5) * J(4)) -
                    19 * J(6) + 8 * J(0) + S(R(-12))) *
                   A(3)) +
        R(4, 3) * (J(5) * J(2) * A(2)) + R(2, 3) * (J(6) * J(2) * A(1));
    out.push_back({"D3", 0, 1, d3});

    NCPoly d4 = R(8, 3) * ((3 * (J(4) * J(3)) - 2 * (J(4) * J(0))) * A(8)) -
                4 * (J(4) * J(1) * A(7)) - 10 * (J(4) * J(1) * A(6)) +
                10 * (J(4) * J(2) * A(4));
    out.push_back({"D4", 2, 0, d4});

    NCPoly d5 =
        R(1, 3) * ((9 * (J(8) * J(6)) + 48 * (J(8) * J(3)) +
                    14 * (J(7) * J(4)) + 71 * J(8)) *
                   A(8)) -
        R(2, 3) * ((2 * (J(7) * J(5)) - 3 * (J(4) * J(3)) +
                    20 * (J(4) * J(0))) *
                   A(7)) -
        R(2, 3) * ((16 * (J(8) * J(1)) - 23 * (J(4) * J(3))) * A(6)) +
        R(1, 6) * ((83 * (J(8) * J(1)) - 78 * (J(4) * J(3)) +
                    219 * (J(4) * J(0)) + 242 * J(4)) *
                   A(5)) +
        R(1, 6) * ((64 * (J(8) * J(2)) - 83 * (J(7) * J(1)) -
                    124 * J(6).pow(2) + 34 * (J(6) * J(0)) -
                    40 * (J(5) * J(4)) + 50 * J(3).pow(2) -
                    229 * (J(3) * J(0)) + 54 * J(6) + 32 * J(0).pow(2) -
                    297 * J(0) + S(R(-66))) *
                   A(4)) -
        R(2, 3) * ((41 * (J(6) * J(1)) - 13 * J(5).pow(2) +
                    7 * (J(4) * J(2))) *
                   A(2)) -
        R(2, 3) * ((9 * (J(6) * J(5)) + 4 * (J(5) * J(0)) - J(5)) * A(1));
    out.push_back({"D5", 1, 1, d5});

    NCPoly d6 =
        R(26, 3) * (J(8).pow(2) * A(9)) +
        R(2, 3) * ((3 * (J(8) * J(6)) + 3 * (J(8) * J(3)) -
                    26 * (J(8) * J(0)) - J(8)) *
                   A(7)) -
        6 * ((J(8) * J(6) - J(8) * J(3) - J(8) * J(0)) * A(6)) -
        R(1, 3) * ((7 * (J(8) * J(3)) + 10 * (J(8) * J(0)) + 20 * J(8) -
                    19 * (J(7) * J(4))) *
                   A(5)) +
        R(1, 3) * ((36 * (J(7) * J(6)) - 19 * (J(7) * J(0)) -
                    90 * J(4).pow(2) + 21 * J(7)) *
                   A(4)) +
        R(1, 3) * ((19 * (J(7) * J(1)) - 8 * J(6).pow(2) -
                    4 * (J(6) * J(3)) + 50 * (J(6) * J(0)) -
                    6 * (J(5) * J(4)) + J(3).pow(2) + 54 * J(6) +
                    20 * J(3) + S(R(50))) *
                   A(2)) -
        2 * ((3 * (J(8) * J(1)) - J(7) * J(5)) * A(1));
    out.push_back({"D6", 0, 2, d6});

    NCPoly d7 =
        2 * ((-9 * (J(8) * J(6)) + 4 * (J(8) * J(3)) - 3 * J(8)) * A(7)) -
        8 * (J(7) * J(4) * A(6)) +
        4 * ((7 * (J(8) * J(6)) - 2 * (J(8) * J(3)) + 4 * (J(8) * J(0)) +
              2 * (J(7) * J(4))) *
             A(5)) +
        4 * ((2 * (J(8) * J(5)) - 9 * (J(7) * J(6)) - 4 * (J(7) * J(0)) +
              6 * J(4).pow(2) + 5 * J(7)) *
             A(4)) +
        8 * (J(8) * J(4) * A(3)) +
        2 * ((4 * (J(7) * J(1)) - 2 * (J(6) * J(3)) - 23 * J(6) +
              4 * J(0) + 6 * J(3) + S(R(23))) *
             A(2)) -
        2 * ((4 * (J(8) * J(1)) - 9 * (J(6) * J(4))) * A(1));
    out.push_back({"D7", 2, 1, d7});

    NCPoly d8 = -6 * (J(8) * J(4) * A(4)) +
                (75 * J(4).pow(2) - 27 * (J(7) * J(6)) - 2 * (J(7) * J(3)) +
                 4 * (J(7) * J(0))) *
                    A(2) +
                (15 * (J(8) * J(6)) - 16 * (J(8) * J(3)) +
                 20 * (J(8) * J(0)) + 25 * J(8)) *
                    A(1);
    out.push_back({"D8", 1, 2, d8});

    NCPoly d9 = -18 * (J(8).pow(2) * A(4)) + 18 * (J(8) * J(4) * A(2)) -
                12 * (J(8) * J(7) * A(1));
    out.push_back({"D9", 0, 3, d9});

    out.push_back({"D10", 3, 1, -66 * (J(4).pow(2) * A(2))});
    out.push_back({"D11", 2, 2, -48 * (J(8) * J(4) * A(2))});
    out.push_back({"D12", 1, 3, -30 * (J(8).pow(2) * A(2))});
    return out;
  }();
  return blocks;
}

NCPoly commutator_block_sum() {
  ParamPoly t = ParamPoly::sym(Param::Tau);
  ParamPoly m = ParamPoly::sym(Param::Mu);
  NCPoly sum(AlgebraTag::GL3);
  for (const auto& b : commutator_blocks())
    sum += (t.pow(b.tau_deg) * m.pow(b.mu_deg)) * b.rhs;
  return sum;
}

}  // namespace weyl
