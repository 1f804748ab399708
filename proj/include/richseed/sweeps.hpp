#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "richseed/twisted.hpp"

namespace richseed {

// Batch verification kernels. Cases are enumerated up front and checked
// independently; the parallel flag fans the loop out over OpenMP threads
// while results stay ordered by case index, so serial and parallel runs
// produce identical reports. The serial path is the reference the tests
// compare against.

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<CheckResult>& rs);

// elements of length <= maxlen (whole group when it is finite and smaller)
std::vector<WeylElement> weyl_elements_upto(const RootDatum& datum, std::size_t maxlen);
std::vector<Expression> all_reduced_words(const WeylElement& w);
// expressions over the index set, exhaustively, of exactly the given length
std::vector<Expression> all_expressions(const RootDatum& datum, std::size_t len);

// mu_vec identity: applying the level-i left-to-right mutation sequence to
// s(i-bar, w) gives s(w, i-bar) exactly, for every reduced word and level.
std::vector<CheckResult> sweep_mu_identity(const RootDatum& datum, std::size_t maxlen,
                                           bool parallel);

// full_rank(s(v,w)) over all v <= w and all reduced words of w
std::vector<CheckResult> sweep_full_rank(const RootDatum& datum, std::size_t maxlen,
                                         bool parallel);

// braid invariance witnesses over all single-move pairs and all v <= w
std::vector<CheckResult> sweep_braid(const RootDatum& datum, std::size_t maxlen,
                                     bool parallel);

// p = sum q r identity plus base values, over random expressions
std::vector<CheckResult> sweep_pqr(const RootDatum& datum, std::size_t n_expressions,
                                   std::size_t maxlen, std::uint64_t rng_seed,
                                   bool parallel);

// twisted two-path equality over all expressions of length <= maxlen
std::vector<CheckResult> sweep_twisted(const RootDatum& datum, std::size_t maxlen,
                                       bool parallel);

// green sequence search on s(e,w) and s(v,w)
std::vector<CheckResult> sweep_green(const RootDatum& datum, std::size_t maxlen,
                                     std::size_t depth, bool parallel);

// SL_n exchange relations along all mutation sequences of bounded length
std::vector<CheckResult> sweep_exchange_oracle(std::size_t n, const Expression& w_word,
                                               std::size_t n_points,
                                               std::size_t max_mutations,
                                               std::uint64_t rng_seed, bool parallel);

// constant signs of cluster variables and positive T values at totally
// positive sample points
std::vector<CheckResult> sweep_positivity(std::size_t n, const Expression& w_word,
                                          std::size_t n_points, std::uint64_t rng_seed,
                                          bool parallel);

// frozen-monomial fit over every chain step of every case
std::vector<CheckResult> sweep_frozen_fit(const RootDatum& datum, std::size_t sln_n,
                                          std::size_t max_v_len, std::size_t n_samples,
                                          std::uint64_t rng_seed, bool parallel);

}  // namespace richseed
