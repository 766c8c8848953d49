#include "weyl/ncalg.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace weyl {

bool word_is_normal(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) return false;
  return true;
}

AlgebraSpec::AlgebraSpec(AlgebraTag tag, std::vector<std::string> names_by_rank)
    : tag_(tag), names_(std::move(names_by_rank)) {}

int AlgebraSpec::rank_of(const std::string& name) const {
  for (std::size_t r = 0; r < names_.size(); ++r)
    if (names_[r] == name) return static_cast<int>(r);
  return -1;
}

void AlgebraSpec::set_bracket(int hi, int lo, BracketEntry entry) {
  if (hi <= lo) throw std::logic_error("bracket requires rank(g) > rank(h)");
  brackets_[{hi, lo}] = std::move(entry);
}

const BracketEntry& AlgebraSpec::bracket(int hi, int lo) const {
  auto it = brackets_.find({hi, lo});
  return it == brackets_.end() ? zero_ : it->second;
}

std::vector<GeneratorId> AlgebraSpec::generators() const {
  std::vector<GeneratorId> out;
  for (int r = 0; r < size(); ++r) {
    int index = r;
    if (tag_ == AlgebraTag::GL3) index = 8 - r;  // rank 0 is J8, rank 8 is J0
    out.push_back({tag_, index, r});
  }
  return out;
}

NCPoly NCPoly::one(AlgebraTag tag) {
  NCPoly p(tag);
  p.add_term({}, ParamPoly(1));
  return p;
}

NCPoly NCPoly::scalar(AlgebraTag tag, ParamPoly c) {
  NCPoly p(tag);
  p.add_term({}, c);
  return p;
}

NCPoly NCPoly::generator(const AlgebraSpec& spec, int rank) {
  if (rank < 0 || rank >= spec.size())
    throw std::invalid_argument("generator rank out of range");
  NCPoly p(spec.tag());
  p.add_term({static_cast<std::uint8_t>(rank)}, ParamPoly(1));
  return p;
}

NCPoly NCPoly::generator(const AlgebraSpec& spec, const std::string& name) {
  int r = spec.rank_of(name);
  if (r < 0) throw std::invalid_argument("unknown generator: " + name);
  return generator(spec, r);
}

void NCPoly::add_term(const Word& w, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    if (!word_is_normal(w)) normal_ = false;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void require_same_algebra(const NCPoly& a, const NCPoly& b) {
  if (a.tag() != b.tag())
    throw std::invalid_argument("mixed-algebra operation");
}

}  // namespace

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  require_same_algebra(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  require_same_algebra(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly out(tag_);
  for (const auto& [w, c] : terms_) out.add_term(w, -c);
  return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  require_same_algebra(a, b);
  NCPoly out(a.tag());
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NCPoly operator*(const ParamPoly& c, const NCPoly& a) {
  NCPoly out(a.tag());
  for (const auto& [w, cw] : a.terms_) out.add_term(w, c * cw);
  return out;
}

NCPoly NCPoly::pow(unsigned e) const {
  NCPoly out = NCPoly::one(tag_);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

NCPoly normal_order(const NCPoly& x, const AlgebraSpec& spec) {
  if (x.tag() != spec.tag())
    throw std::invalid_argument("mixed-algebra operation");
  NCPoly done(spec.tag());
  std::map<Word, ParamPoly> pending;
  for (const auto& [w, c] : x.terms()) {
    if (word_is_normal(w))
      done.add_term(w, c);
    else
      pending.emplace(w, c);
  }
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const ParamPoly& c = node.mapped();
    if (c.is_zero()) continue;
    // leftmost out-of-order adjacent pair
    std::size_t i = 0;
    while (w[i] <= w[i + 1]) ++i;
    auto push = [&](Word&& nw, ParamPoly nc) {
      if (nc.is_zero()) return;
      if (word_is_normal(nw)) {
        done.add_term(nw, nc);
      } else {
        auto it = pending.find(nw);
        if (it == pending.end()) {
          pending.emplace(std::move(nw), std::move(nc));
        } else {
          it->second += nc;
          if (it->second.is_zero()) pending.erase(it);
        }
      }
    };
    // g h -> h g + [g, h]
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    const BracketEntry& br = spec.bracket(w[i], w[i + 1]);
    push(std::move(swapped), c);
    for (const auto& [rank, coeff] : br.linear) {
      Word shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + i);
      shorter.push_back(rank);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      push(std::move(shorter), coeff * c);
    }
    if (!br.scalar.is_zero()) {
      Word shorter;
      shorter.reserve(w.size() - 2);
      shorter.insert(shorter.end(), w.begin(), w.begin() + i);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      push(std::move(shorter), br.scalar * c);
    }
  }
  return done;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b, const AlgebraSpec& spec) {
  return normal_order(a * b, spec);
}

NCPoly nc_commutator(const NCPoly& a, const NCPoly& b,
                     const AlgebraSpec& spec) {
  return normal_order(a * b - b * a, spec);
}

NCPoly substitute(const NCPoly& x, const Realization& r) {
  if (!r.source || !r.target) throw std::invalid_argument("empty realization");
  if (x.tag() != r.source->tag())
    throw std::invalid_argument("realization source algebra mismatch");
  NCPoly out(r.target->tag());
  for (const auto& [w, c] : x.terms()) {
    NCPoly prod = NCPoly::scalar(r.target->tag(), c);
    for (auto rank : w) {
      auto it = r.images.find(rank);
      if (it == r.images.end())
        throw std::invalid_argument("generator has no image: " +
                                    r.source->name(rank));
      prod = prod * it->second;
    }
    out += prod;
  }
  return normal_order(out, *r.target);
}

void check_bracket_consistency(const AlgebraSpec& spec) {
  for (int hi = 0; hi < spec.size(); ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      NCPoly g = NCPoly::generator(spec, hi);
      NCPoly h = NCPoly::generator(spec, lo);
      NCPoly lhs = nc_commutator(g, h, spec);
      NCPoly rhs(spec.tag());
      const BracketEntry& br = spec.bracket(hi, lo);
      for (const auto& [rank, coeff] : br.linear)
        rhs += ParamPoly(coeff) * NCPoly::generator(spec, rank);
      rhs += NCPoly::scalar(spec.tag(), br.scalar);
      if (lhs != normal_order(rhs, spec))
        throw std::logic_error("bracket table inconsistent at (" +
                               spec.name(hi) + ", " + spec.name(lo) + ")");
    }
  }
}

void check_jacobi(const AlgebraSpec& spec) {
  int n = spec.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        NCPoly ga = NCPoly::generator(spec, a);
        NCPoly gb = NCPoly::generator(spec, b);
        NCPoly gc = NCPoly::generator(spec, c);
        NCPoly sum = nc_commutator(nc_commutator(ga, gb, spec), gc, spec);
        sum += nc_commutator(nc_commutator(gb, gc, spec), ga, spec);
        sum += nc_commutator(nc_commutator(gc, ga, spec), gb, spec);
        sum = normal_order(sum, spec);
        if (!sum.is_zero())
          throw std::logic_error("Jacobi identity fails at (" + spec.name(a) +
                                 ", " + spec.name(b) + ", " + spec.name(c) +
                                 ")");
      }
    }
  }
}

std::string NCPoly::str(const AlgebraSpec& spec) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.terms().size() > 1)
      os << "(" << c.str() << ")";
    else
      os << c.str();
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      os << (i == 0 ? " * " : "*") << spec.name(w[i]);
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
  }
  return os.str();
}

NCPoly NCPoly::parse(const std::string& text, const AlgebraSpec& spec) {
  NCPoly out(spec.tag());
  // Terms separated by " + "; each term "<coeff> * g1*g2^2*..." or a bare
  // ParamPoly / bare word.
  std::size_t pos = 0;
  if (text == "0") return out;
  // " + " separates terms only at parenthesis depth zero
  auto find_term_sep = [&text](std::size_t from) {
    int depth = 0;
    for (std::size_t i = from; i + 2 < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      else if (text[i] == ')') --depth;
      else if (depth == 0 && text.compare(i, 3, " + ") == 0) return i;
    }
    return std::string::npos;
  };
  while (pos < text.size()) {
    std::size_t next = find_term_sep(pos);
    std::string term = text.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? text.size() : next + 3;
    // split the term into factors at '*', classifying each factor
    ParamPoly coeff(1);
    Word w;
    // leading parenthesized coefficient groups, as emitted by str()
    while (!term.empty() && term.front() == '(') {
      std::size_t close = term.find(')');
      if (close == std::string::npos)
        throw std::invalid_argument("unbalanced parenthesis: " + term);
      coeff *= ParamPoly::parse(term.substr(1, close - 1));
      std::size_t after = close + 1;
      while (after < term.size() &&
             (term[after] == ' ' || term[after] == '*'))
        ++after;
      term = term.substr(after);
    }
    std::size_t fpos = 0;
    std::string pending_scalar;
    auto flush_scalar = [&]() {
      if (!pending_scalar.empty()) {
        coeff *= ParamPoly::parse(pending_scalar);
        pending_scalar.clear();
      }
    };
    while (fpos <= term.size()) {
      std::size_t fnext = term.find('*', fpos);
      std::string factor = term.substr(
          fpos, fnext == std::string::npos ? std::string::npos : fnext - fpos);
      fpos = fnext == std::string::npos ? term.size() + 1 : fnext + 1;
      // trim
      while (!factor.empty() && std::isspace((unsigned char)factor.front()))
        factor.erase(factor.begin());
      while (!factor.empty() && std::isspace((unsigned char)factor.back()))
        factor.pop_back();
      if (factor.empty()) continue;
      std::string base = factor;
      unsigned power = 1;
      auto caret = factor.find('^');
      if (caret != std::string::npos) {
        base = factor.substr(0, caret);
        power = std::stoul(factor.substr(caret + 1));
      }
      int rank = spec.rank_of(base);
      if (rank >= 0) {
        flush_scalar();
        for (unsigned k = 0; k < power; ++k)
          w.push_back(static_cast<std::uint8_t>(rank));
      } else {
        // accumulate scalar factors (signs live inside ParamPoly::parse)
        if (!pending_scalar.empty()) pending_scalar += "*";
        pending_scalar += factor;
      }
    }
    flush_scalar();
    out.add_term(w, coeff);
  }
  return out;
}

}  // namespace weyl
