#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "richseed/richardson.hpp"

namespace richseed {

// Exact rational SL_n matrices. Everything downstream (minors,
// factorizations, cluster-variable values) stays in Q; there is no
// floating point anywhere in the oracle.
using QMat = std::vector<std::vector<Rat>>;

QMat qmat_identity(std::size_t n);
QMat qmat_mul(const QMat& a, const QMat& b);
Rat qmat_det(QMat m);
// leading principal k x k minor
Rat leading_minor(const QMat& m, std::size_t k);

// Type A_{n-1} datum with labels "1".."n-1".
RootDatum sl_datum(std::size_t n);

enum class GenKind { X, Y, Coweight, SDot };

// x_i(t), y_i(t), alpha_i^vee(t), s-dot_i = x_i(1) y_i(-1) x_i(1),
// acting in rows/columns i, i+1 (1-based i <= n-1).
QMat generator(std::size_t n, GenKind kind, std::size_t i, const Rat& t = Rat(1));

// products of s-dot letters along the canonical reduced word
QMat dot_lift(std::size_t n, const WeylElement& w);
QMat dot_lift_inverse(std::size_t n, const WeylElement& w);

// Delta^{w omega_i}_{w' omega_i}(g) = Delta_{omega_i}(wdot^{-1} g w'dot);
// signs come from the s-dot lift and are never normalized away.
Rat minor(const QMat& g, const WeylElement& w, const WeylElement& wprime, std::size_t i);

// z in U^+ with g*c = z*wdot for upper-triangular c, by pivoted column
// elimination; deterministic via the documented pivot rule (eliminate
// against every earlier pivot row, bottom up). Throws WrongCell when the
// pivot pattern of g is not w.
QMat factor_bruhat(const QMat& g, const WeylElement& w);

struct FlagPoint {
  QMat g;
  Expression w_word;
  QMat z;  // cached factor
};

FlagPoint make_flag_point(const RootDatum& datum, const QMat& g, const Expression& w_word);

// y_{i_1}(t_1)...y_{i_k}(t_k) along the word; positive parameters give
// totally positive points of the cell.
QMat y_point(std::size_t n, const Expression& w_word, const std::vector<Rat>& params);

// Cluster variable values of s(w) at the point: A_(i,0) = 1 and
// A_(i,l) = Delta^{omega_{i_k}}_{w_(k) omega_{i_k}}(z) for the letter
// position k matching (i,l).
std::map<std::string, Rat> cluster_values(const FlagPoint& point, const LieSeed& lie);

// One exchange step on concrete values:
// A_k' = (prod A^{[eps_ki]+} + prod A^{[-eps_ki]+}) / A_k.
void mutate_values(const Seed& s, std::map<std::string, Rat>& values, const std::string& k);

// T_{r, r s_i} = Delta^{r s_i omega_i}_{omega_i} / Delta^{r omega_i}_{omega_i}
// evaluated at a lift g; requires r < r s_i, throws DenominatorZero.
Rat t_function(const QMat& g, const WeylElement& r, std::size_t i);

struct MonomialFit {
  std::vector<std::string> variables;
  std::vector<Int> exponents;
  int sign = 1;  // constant sign absorbed by the s-dot conventions
};

struct FitMismatch {
  std::string detail;
};

// Checks T_{r_(l), v_(l)} = X_{(i, n_i - a_l + 1)} * (frozen monomial) on
// the tilde chain, numerically: samples points, recovers the integer
// exponents by exact linear algebra on prime valuations, and verifies on
// fresh points. Throws SingularSamples when the fit system is
// rank-deficient.
std::variant<MonomialFit, FitMismatch> frozen_monomial_fit(const RichardsonContext& ctx,
                                                           std::size_t l,
                                                           std::size_t n_samples,
                                                           std::uint64_t rng_seed);

// prime factorization of a nonzero integer (trial division + Pollard rho)
std::map<Int, long> factorize(Int n);

}  // namespace richseed
