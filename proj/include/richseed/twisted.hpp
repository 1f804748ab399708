#pragma once

#include <optional>
#include <string>
#include <vector>

#include "richseed/richardson.hpp"

namespace richseed {

// Thickened setting for an expression w of length n: the datum gains
// inf_1..inf_{n-1}, th(w) interleaves them between the letters, and v is
// carried over letter by letter (W sits inside the thickened Weyl group as
// the parabolic on the original index set).
struct ThickenedContext {
  RootDatum base;
  RootDatum thick;
  Expression w_base;
  Expression th_word;  // over thick
};

ThickenedContext make_thickened_context(const RootDatum& datum, const Expression& w_expr);

Expression th_expression(const ThickenedContext& ctx);

struct ThickCoefficients {
  Int p, q, r;
};

// p_kl = -<alpha_{i_l}^vee, s_{inf_l} s_{i_{l+1}} s_{inf_{l+1}} ... s_{i_k} s_{inf_k} omega_{inf_k}>
// q_kl = -<alpha_{inf_l}^vee, s_{i_{l+1}} s_{inf_{l+1}} ... s_{i_k} s_{inf_k} omega_{inf_k}>
// r_kl = -<s_{i_k} ... s_{i_{l+1}} alpha_{i_l}^vee, alpha_{inf_k}>
// for 1 <= l <= k <= n-1, all computed by exact lattice actions.
ThickCoefficients coefficients(const ThickenedContext& ctx, std::size_t k, std::size_t l);

// Seed for the twisted-product Richardson variety: run the Richardson
// construction over the thickened datum with th(w) and delete the frozen
// vertices (inf_k, 1); asserted equal to the direct run on the raw
// (possibly non-reduced) expression. nullopt when v is not below m_*(w).
std::optional<Seed> twisted_seed(const RootDatum& datum, const WeylElement& v,
                                 const Expression& w_expr);

}  // namespace richseed
