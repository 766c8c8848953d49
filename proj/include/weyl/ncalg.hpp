#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weyl/parampoly.hpp"

namespace weyl {

enum class AlgebraTag { H5, GL3 };

struct GeneratorId {
  AlgebraTag algebra;
  int index;  // conventional numbering (J0..J8 for gl(3); qx,qy,px,py order for h5)
  int rank;   // position in the normal-ordering total order
};

// A word is a sequence of generator ranks; normal iff ranks are
// nondecreasing left to right. The empty word is the algebra identity.
using Word = std::vector<std::uint8_t>;

bool word_is_normal(const Word& w);

// [g, h] for rank(g) > rank(h): linear part plus central scalar.
struct BracketEntry {
  std::vector<std::pair<std::uint8_t, Rational>> linear;  // (rank, coeff)
  ParamPoly scalar;
};

class AlgebraSpec {
 public:
  AlgebraSpec(AlgebraTag tag, std::vector<std::string> names_by_rank);

  AlgebraTag tag() const { return tag_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int rank) const { return names_.at(rank); }
  int rank_of(const std::string& name) const;  // -1 if unknown

  // Defines [g, h] with rank(g) = hi > lo = rank(h).
  void set_bracket(int hi, int lo, BracketEntry entry);
  const BracketEntry& bracket(int hi, int lo) const;

  std::vector<GeneratorId> generators() const;

 private:
  AlgebraTag tag_;
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, BracketEntry> brackets_;
  BracketEntry zero_;
};

// Element of the free (or enveloping) algebra over ParamPoly.
class NCPoly {
 public:
  explicit NCPoly(AlgebraTag tag) : tag_(tag) {}

  static NCPoly zero(AlgebraTag tag) { return NCPoly(tag); }
  static NCPoly one(AlgebraTag tag);
  static NCPoly scalar(AlgebraTag tag, ParamPoly c);
  static NCPoly generator(const AlgebraSpec& spec, int rank);
  static NCPoly generator(const AlgebraSpec& spec, const std::string& name);

  AlgebraTag tag() const { return tag_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_normal() const { return normal_; }
  const std::map<Word, ParamPoly>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Word& w, const ParamPoly& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

  // Free product: concatenates words, no reordering.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const ParamPoly& c, const NCPoly& a);
  friend NCPoly operator*(const Rational& c, const NCPoly& a) {
    return ParamPoly(c) * a;
  }
  friend NCPoly operator*(long c, const NCPoly& a) {
    return ParamPoly(Rational(c)) * a;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.tag_ == b.tag_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) {
    return !(a == b);
  }

  NCPoly pow(unsigned e) const;

  std::string str(const AlgebraSpec& spec) const;
  static NCPoly parse(const std::string& text, const AlgebraSpec& spec);

 private:
  AlgebraTag tag_;
  std::map<Word, ParamPoly> terms_;
  bool normal_ = true;
};

struct Realization {
  const AlgebraSpec* source = nullptr;
  const AlgebraSpec* target = nullptr;
  std::map<std::uint8_t, NCPoly> images;  // source rank -> target element
};

// PBW rewriting into the nondecreasing-rank basis, collecting terms.
NCPoly normal_order(const NCPoly& x, const AlgebraSpec& spec);

NCPoly nc_mul(const NCPoly& a, const NCPoly& b, const AlgebraSpec& spec);
NCPoly nc_commutator(const NCPoly& a, const NCPoly& b,
                     const AlgebraSpec& spec);

// Maps each word to the ordered product of generator images and
// normal-orders the result in the target algebra.
NCPoly substitute(const NCPoly& x, const Realization& r);

// Self-tests over the bracket table; throw std::logic_error on failure.
void check_bracket_consistency(const AlgebraSpec& spec);
void check_jacobi(const AlgebraSpec& spec);

}  // namespace weyl
