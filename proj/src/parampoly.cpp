#include "weyl/parampoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace weyl {

namespace {

// Print order within a term: tau, mu, nu, lambda (couplings last).
constexpr Param kPrintOrder[kNumParams] = {Param::Tau, Param::Mu, Param::Nu,
                                           Param::Lambda};

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::uint32_t>::max() - b)
    throw std::overflow_error("parameter exponent overflow");
  return a + b;
}

unsigned degree_of(const ParamPoly::Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

// Graded order: total degree first, then lex on the exponent vector.
bool grlex_before(const ParamPoly::Exponents& a,
                  const ParamPoly::Exponents& b) {
  unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a < b;
}

}  // namespace

const char* param_name(Param p) {
  switch (p) {
    case Param::Nu: return "nu";
    case Param::Tau: return "tau";
    case Param::Mu: return "mu";
    case Param::Lambda: return "lambda";
  }
  return "?";
}

std::optional<Param> param_from_name(const std::string& name) {
  for (int i = 0; i < kNumParams; ++i) {
    Param p = static_cast<Param>(i);
    if (name == param_name(p)) return p;
  }
  return std::nullopt;
}

ParamPoly::ParamPoly(const Rational& c) {
  if (c != 0) terms_[{0, 0, 0, 0}] = c;
}

ParamPoly ParamPoly::sym(Param p) {
  Exponents e{0, 0, 0, 0};
  e[static_cast<int>(p)] = 1;
  return monomial(e, 1);
}

ParamPoly ParamPoly::monomial(const Exponents& e, const Rational& c) {
  ParamPoly out;
  if (c != 0) out.terms_[e] = c;
  return out;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0};
}

std::optional<Rational> ParamPoly::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

unsigned ParamPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

void ParamPoly::add_term(const Exponents& e, const Rational& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ParamPoly::Exponents e;
      for (int i = 0; i < kNumParams; ++i) e[i] = checked_add(ea[i], eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly out(1);
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

ParamPoly ParamPoly::eval(const std::map<Param, Rational>& bindings) const {
  ParamPoly out;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponents rest = e;
    for (const auto& [p, v] : bindings) {
      int i = static_cast<int>(p);
      if (rest[i] > 0) {
        coeff *= weyl::pow(v, rest[i]);
        rest[i] = 0;
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) {
              return grlex_before(a->first, b->first);
            });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    if (!first) os << " + ";
    first = false;
    bool unit = (c == 1) && degree_of(e) > 0;
    bool neg_unit = (c == -1) && degree_of(e) > 0;
    if (neg_unit)
      os << "-";
    else if (!unit)
      os << to_string(c);
    bool need_star = !unit && !neg_unit;
    for (Param p : kPrintOrder) {
      auto x = e[static_cast<int>(p)];
      if (x == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << param_name(p);
      if (x > 1) os << "^" << x;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  std::string s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip();
    return s[i++];
  }
};

}  // namespace

ParamPoly ParamPoly::parse(const std::string& text) {
  Lexer lx{text};
  ParamPoly out;
  bool expect_term = true;
  while (!lx.eof()) {
    Rational coeff(1);
    // consume any run of sign characters so "+ -14" and "-lambda" both work
    while (lx.peek() == '+' || lx.peek() == '-') {
      if (lx.get() == '-') coeff = -coeff;
    }
    if (lx.eof()) throw std::invalid_argument("dangling sign in polynomial");
    Exponents e{0, 0, 0, 0};
    bool saw_factor = false;
    for (;;) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (!lx.eof() &&
               (std::isdigit(static_cast<unsigned char>(lx.peek())) ||
                lx.peek() == '/'))
          num += lx.get();
        coeff *= parse_rational(num);
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name;
        while (!lx.eof() &&
               std::isalpha(static_cast<unsigned char>(lx.peek())))
          name += lx.get();
        auto p = param_from_name(name);
        if (!p) throw std::invalid_argument("unknown parameter: " + name);
        unsigned long x = 1;
        if (!lx.eof() && lx.peek() == '^') {
          lx.get();
          std::string num;
          while (!lx.eof() &&
                 std::isdigit(static_cast<unsigned char>(lx.peek())))
            num += lx.get();
          if (num.empty()) throw std::invalid_argument("missing exponent");
          x = std::stoul(num);
        }
        int idx = static_cast<int>(*p);
        for (unsigned long k = 0; k < x; ++k)
          e[idx] = checked_add(e[idx], 1);
        saw_factor = true;
      } else {
        throw std::invalid_argument(std::string("unexpected character: ") + c);
      }
      if (!lx.eof() && lx.peek() == '*') {
        lx.get();
        continue;
      }
      break;
    }
    if (!saw_factor) throw std::invalid_argument("empty term");
    out.add_term(e, coeff);
    expect_term = false;
    if (!lx.eof()) {
      char c = lx.peek();
      if (c != '+' && c != '-')
        throw std::invalid_argument("expected + or - between terms");
      expect_term = true;
    }
  }
  if (expect_term && out.is_zero() && !text.empty()) {
    // "0" parses via the digit branch; nothing else to do.
  }
  return out;
}

std::map<std::pair<unsigned, unsigned>, ParamPoly> split_tau_mu(
    const ParamPoly& p) {
  std::map<std::pair<unsigned, unsigned>, ParamPoly> out;
  for (const auto& [e, c] : p.terms_) {
    auto key = std::make_pair(e[static_cast<int>(Param::Tau)],
                              e[static_cast<int>(Param::Mu)]);
    out[key].add_term(e, c);
  }
  return out;
}

}  // namespace weyl
