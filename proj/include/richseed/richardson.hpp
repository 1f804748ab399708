#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "richseed/lie.hpp"

namespace richseed {

// Combinatorial data of the seed construction for the pair (v, w): the
// left-most subexpression of v in the expression w, the kept positions
// k_1 < ... < k_m, and for each step l the occurrence counters
//   a_l = how many kept letters at this level so far (this one included),
//   b_l = how many earlier skipped letters at this level.
// w need not be reduced; the Demazure product gates v <= m_*(w).
struct RichardsonContext {
  RootDatum datum;
  Expression w_expr;
  WeylElement v;
  std::vector<char> mask;
  std::vector<std::size_t> kept;  // 0-based positions into w_expr
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> n;  // occurrences per datum index in w_expr

  std::size_t steps() const { return kept.size(); }  // m = l(v)

  // prefix elements of the kept letters: v_(l), r_(l) = v_(l-1)
  WeylElement v_prefix(std::size_t l) const;
  // tail word w^(l) = letters after position k_l
  Expression tail_word(std::size_t l) const;
};

std::optional<RichardsonContext> make_context(const RootDatum& datum,
                                              const WeylElement& v,
                                              const Expression& w_expr);

// Mutation sequence mu~_l, leftmost mutation first:
// ((i, b_l+1), ..., (i, n_i - a_l)); empty when a_l + b_l = n_i.
std::vector<std::string> mu_tilde(const RichardsonContext& ctx, std::size_t l);

struct ChainStep {
  std::vector<std::string> mutations;
  std::vector<std::string> newly_frozen;
  std::optional<std::string> deleted;
  Seed seed_after;
};

struct SeedChain {
  std::vector<ChainStep> steps;  // steps[0] holds the initial seed only

  const Seed& final_seed() const { return steps.back().seed_after; }
};

// s~_0 = s(w), then per step: mutate by mu~_l and freeze every vertex
// adjacent to (i, n_i - a_l + 1). No deletions.
SeedChain tilde_chain(const RichardsonContext& ctx);

// s_0 = s(e,w) (the build with all (i,0) removed), then per step: mutate,
// freeze the neighbors of (i, n_i - a_l + 1), delete that vertex.
SeedChain richardson_chain(const RichardsonContext& ctx);

// Final seed s(v, w). check_dual additionally replays the tilde chain and
// asserts the paper's equivalent construction (delete the boundary set
// from s~_m) gives the same seed.
Seed richardson_seed(const RichardsonContext& ctx, bool check_dual = true);

struct BraidWitness {
  std::vector<std::string> mutations;  // applied to s(v, w)
  std::vector<std::pair<std::string, std::string>> relabel;
};

struct BraidFail {
  std::size_t searched_depth = 0;
};

// Certifies that s(v,w) and s(v,w') agree up to mutation + relabeling when
// the two expressions differ by one commutation or one (i,j,i)~(j,i,j)
// braid move. Tries the constructive candidates (identity, then the single
// mutation from the proof's case analysis) before a bounded search.
std::variant<BraidWitness, BraidFail> braid_invariance(const RootDatum& datum,
                                                       const WeylElement& v,
                                                       const Expression& w1,
                                                       const Expression& w2,
                                                       std::size_t max_depth = 4);

std::string chain_to_json(const RichardsonContext& ctx, const SeedChain& chain);

}  // namespace richseed
