#include "weyl/liealg.hpp"

#include <stdexcept>

namespace weyl {

namespace {

BracketEntry scalar_bracket(long c) {
  BracketEntry e;
  e.scalar = ParamPoly(Rational(c));
  return e;
}

}  // namespace

const AlgebraSpec& h5_spec() {
  static const AlgebraSpec spec = [] {
    AlgebraSpec s(AlgebraTag::H5, {"qx", "qy", "px", "py"});
    // word px*qx rewrites to qx*px + [px,qx] with [px,qx] = 1
    s.set_bracket(s.rank_of("px"), s.rank_of("qx"), scalar_bracket(1));
    s.set_bracket(s.rank_of("py"), s.rank_of("qy"), scalar_bracket(1));
    return s;
  }();
  return spec;
}

namespace {

// rank of J_i under the jorder [J8, J7, ..., J0]
int jrank(int i) { return 8 - i; }

// [J_i, J_j] = sum of c*J_k terms, for i < j.
struct JBracket {
  int i, j;
  std::vector<std::pair<int, long>> terms;  // (k, c)
};

const std::vector<JBracket>& gl3_table() {
  static const std::vector<JBracket> table = {
      {0, 1, {{1, 1}}},
      {0, 2, {{2, 1}}},
      {0, 3, {}},
      {0, 4, {}},
      {0, 5, {}},
      {0, 6, {}},
      {0, 7, {{7, -1}}},
      {0, 8, {{8, -1}}},
      {1, 2, {}},
      {1, 3, {{1, 1}}},
      {1, 4, {}},
      {1, 5, {{2, 1}}},
      {1, 6, {}},
      {1, 7, {{3, 1}, {0, -1}}},
      {1, 8, {{4, 1}}},
      {2, 3, {}},
      {2, 4, {{1, 1}}},
      {2, 5, {}},
      {2, 6, {{2, 1}}},
      {2, 7, {{5, 1}}},
      {2, 8, {{6, 1}, {0, -1}}},
      {3, 4, {{4, -1}}},
      {3, 5, {{5, 1}}},
      {3, 6, {}},
      {3, 7, {{7, 1}}},
      {3, 8, {}},
      {4, 5, {{3, -1}, {6, 1}}},
      {4, 6, {{4, -1}}},
      {4, 7, {{8, 1}}},
      {4, 8, {}},
      {5, 6, {{5, 1}}},
      {5, 7, {}},
      {5, 8, {{7, 1}}},
      {6, 7, {}},
      {6, 8, {{8, 1}}},
      {7, 8, {}},
  };
  return table;
}

}  // namespace

const AlgebraSpec& gl3_spec() {
  static const AlgebraSpec spec = [] {
    AlgebraSpec s(AlgebraTag::GL3, {"J8", "J7", "J6", "J5", "J4", "J3", "J2",
                                    "J1", "J0"});
    for (const auto& br : gl3_table()) {
      // word J_i * J_j with i < j is out of order: rank(J_i) > rank(J_j)
      BracketEntry e;
      for (const auto& [k, c] : br.terms)
        e.linear.emplace_back(static_cast<std::uint8_t>(jrank(k)),
                              Rational(c));
      s.set_bracket(jrank(br.i), jrank(br.j), std::move(e));
    }
    return s;
  }();
  return spec;
}

const std::vector<StructureConstant>& gl3_structure_constants() {
  static const std::vector<StructureConstant> cs = {
      {0, 1, 1, 1},  {0, 2, 2, 1},  {0, 7, 7, -1}, {0, 8, 8, -1},
      {1, 3, 1, 1},  {1, 5, 2, 1},  {1, 7, 3, 1},  {1, 7, 0, -1},
      {1, 8, 4, 1},  {2, 4, 1, 1},  {2, 6, 2, 1},  {2, 7, 5, 1},
      {2, 8, 6, 1},  {2, 8, 0, -1}, {3, 4, 4, -1}, {3, 5, 5, 1},
      {3, 7, 7, 1},  {4, 5, 3, -1}, {4, 5, 6, 1},  {4, 6, 4, -1},
      {4, 7, 8, 1},  {5, 6, 5, 1},  {5, 8, 7, 1},  {6, 8, 8, 1},
  };
  return cs;
}

void check_gl3_table_against_structure_constants() {
  const AlgebraSpec& spec = gl3_spec();
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      // from the structure-constant list
      NCPoly from_cs(AlgebraTag::GL3);
      for (const auto& sc : gl3_structure_constants())
        if (sc.i == i && sc.j == j)
          from_cs += ParamPoly(Rational(sc.c)) *
                     NCPoly::generator(spec, jrank(sc.k));
      // from the bracket table
      NCPoly from_table(AlgebraTag::GL3);
      const BracketEntry& e = spec.bracket(jrank(i), jrank(j));
      for (const auto& [rank, c] : e.linear)
        from_table += ParamPoly(c) * NCPoly::generator(spec, rank);
      from_table += NCPoly::scalar(AlgebraTag::GL3, e.scalar);
      if (normal_order(from_cs, spec) != normal_order(from_table, spec))
        throw std::logic_error("gl(3) table and structure constants disagree "
                               "at [J" + std::to_string(i) + ", J" +
                               std::to_string(j) + "]");
    }
  }
}

const Realization& gl3_realization_in_h5() {
  static const Realization real = [] {
    const AlgebraSpec& g = gl3_spec();
    const AlgebraSpec& h = h5_spec();
    NCPoly qx = NCPoly::generator(h, "qx");
    NCPoly qy = NCPoly::generator(h, "qy");
    NCPoly px = NCPoly::generator(h, "px");
    NCPoly py = NCPoly::generator(h, "py");
    ParamPoly nu = ParamPoly::sym(Param::Nu);
    NCPoly euler = qx * px + qy * py +
                   NCPoly::scalar(AlgebraTag::H5, 3 * nu * ParamPoly(1));
    Realization r;
    r.source = &g;
    r.target = &h;
    auto set = [&](const char* name, const NCPoly& image) {
      r.images.insert_or_assign(static_cast<std::uint8_t>(g.rank_of(name)),
                                normal_order(image, h));
    };
    set("J1", px);
    set("J2", py);
    set("J3", qx * px);
    set("J4", qy * px);
    set("J5", qx * py);
    set("J6", qy * py);
    set("J7", qx * euler);
    set("J8", qy * euler);
    set("J0", -euler);
    return r;
  }();
  return real;
}

const ArtifactSet& artifacts() {
  static const ArtifactSet set = [] {
    const AlgebraSpec& g = gl3_spec();
    auto J = [&](int i) { return NCPoly::generator(g, jrank(i)); };
    ArtifactSet s;
    s.items.push_back(J(8) * J(5) - J(7) * J(6));
    s.items.push_back(J(8) * J(3) - J(7) * J(4));
    s.items.push_back(J(7) * J(2) + J(5) * J(0) + J(5));
    s.items.push_back(J(8) * J(1) + J(4) * J(0) + J(4));
    s.items.push_back(J(7) * J(1) + J(3) * J(0) + J(3));
    s.items.push_back(J(8) * J(2) + J(6) * J(0) + J(6));
    s.items.push_back(J(6) * J(3) - J(5) * J(4) + J(3));
    s.items.push_back(J(6) * J(1) - J(4) * J(2));
    s.items.push_back(J(5) * J(1) - J(3) * J(2));
    return s;
  }();
  return set;
}

}  // namespace weyl
