#pragma once

#include <optional>
#include <string>
#include <vector>

#include "richseed/cartan.hpp"

namespace richseed {

// A word in the generators, stored as indices into the datum's label list.
struct Expression {
  std::vector<std::size_t> letters;

  std::size_t size() const { return letters.size(); }
  bool operator==(const Expression& o) const { return letters == o.letters; }
};

struct SignedLetter {
  std::size_t index = 0;
  bool bar = false;
  bool operator==(const SignedLetter& o) const {
    return index == o.index && bar == o.bar;
  }
};

struct SignedExpression {
  std::vector<SignedLetter> letters;

  std::size_t size() const { return letters.size(); }
  bool operator==(const SignedExpression& o) const { return letters == o.letters; }
};

SignedExpression unsign(const Expression& e);
Expression strip_signs(const SignedExpression& e);

// keep/skip mask over a parent expression
struct Subexpression {
  Expression parent;
  std::vector<char> keep;

  Expression kept_letters() const;
  std::vector<std::size_t> kept_positions() const;  // 0-based
};

// Weyl group element. Identity of elements is decided by the image of
// rho = sum of fundamental weights: the chamber action is simply
// transitive, so equal images mean equal elements, uniformly in finite and
// infinite type. The stored word is the canonical reduced word obtained by
// peeling the smallest left descent, so it is deterministic as well.
class WeylElement {
 public:
  static WeylElement identity(const RootDatum& datum);
  static WeylElement simple(const RootDatum& datum, std::size_t i);
  // product of the letters; non-reduced input is fine
  static WeylElement from_expression(const RootDatum& datum, const Expression& expr);

  const RootDatum& datum() const { return *datum_; }
  const std::vector<std::size_t>& word() const { return word_; }
  Expression expression() const { return Expression{word_}; }
  std::size_t length() const { return word_.size(); }
  const std::vector<Int>& rho_image() const { return rho_; }
  bool is_identity() const { return word_.empty(); }

  WeightVector act(const WeightVector& wt) const;
  CoweightVector act(const CoweightVector& cowt) const;

  bool is_left_descent(std::size_t i) const;   // l(s_i w) < l(w)
  bool is_right_descent(std::size_t i) const;  // l(w s_i) < l(w)

  bool operator==(const WeylElement& o) const { return rho_ == o.rho_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

 private:
  WeylElement(const RootDatum* datum) : datum_(datum) {}
  static WeylElement from_rho(const RootDatum& datum, std::vector<Int> rho);

  const RootDatum* datum_;
  std::vector<std::size_t> word_;
  std::vector<Int> rho_;

  friend WeylElement multiply(const WeylElement&, const WeylElement&);
  friend WeylElement inverse(const WeylElement&);
};

WeylElement multiply(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& w);

// canonical element of an arbitrary expression
WeylElement reduce(const RootDatum& datum, const Expression& expr);

// Demazure product m_*: letters absorb instead of cancel.
WeylElement demazure(const RootDatum& datum, const Expression& expr);

// v <= w in Bruhat order, via the left-most greedy scan.
bool bruhat_leq(const WeylElement& v, const WeylElement& w);

// Left-most / right-most subexpressions for v inside an arbitrary
// expression; nullopt when v is not below the Demazure product.
std::optional<Subexpression> leftmost_subexpression(const WeylElement& v,
                                                    const Expression& expr);
std::optional<Subexpression> rightmost_subexpression(const WeylElement& v,
                                                     const Expression& expr);

// v_(k) <= v_(k-1) s_{i_k} at every position
bool is_distinguished(const RootDatum& datum, const Subexpression& sub);

// Text form: whitespace-separated labels, a trailing apostrophe marks a
// barred letter ("1' 2 1" etc.). Round trips bit-exactly.
std::string format_expression(const RootDatum& datum, const Expression& expr);
std::string format_expression(const RootDatum& datum, const SignedExpression& expr);
Expression parse_expression(const RootDatum& datum, const std::string& text);
SignedExpression parse_signed_expression(const RootDatum& datum, const std::string& text);

}  // namespace richseed
