#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "richseed/error.hpp"
#include "richseed/numeric.hpp"

namespace richseed {

// Labeled seed: ordered vertex list with a frozen/unfrozen split, an exact
// rational exchange matrix and positive integer multipliers. The exchange
// matrix must be integral on any row/column touching an unfrozen vertex
// and skew-symmetrizable against the multipliers; check_invariants
// enforces both. Arrows between frozen vertices are genuine data and are
// kept by every operation, including freezing.
struct Seed {
  std::vector<std::string> labels;
  std::vector<char> frozen;  // parallel to labels
  std::vector<Int> mult;
  std::vector<std::vector<Rat>> eps;

  std::size_t size() const { return labels.size(); }
  std::size_t index_of(const std::string& label) const;
  bool has_label(const std::string& label) const;
  bool is_frozen(const std::string& label) const { return frozen[index_of(label)] != 0; }
  std::size_t unfrozen_count() const;
  std::vector<std::string> unfrozen_labels() const;
  std::vector<std::string> frozen_labels() const;

  void check_invariants() const;  // throws Error on violation

  bool operator==(const Seed& o) const {
    return labels == o.labels && frozen == o.frozen && mult == o.mult && eps == o.eps;
  }
};

Seed mutate(const Seed& s, const std::string& k);
Seed mutate_seq(Seed s, const std::vector<std::string>& ks);
Seed freeze(const Seed& s, const std::string& k);
Seed defrost(const Seed& s, const std::string& k);
Seed erase_vertex(const Seed& s, const std::string& k);

// labels adjacent to k: eps nonzero in either direction
std::vector<std::string> neighbors(const Seed& s, const std::string& k);

// Glue s and t along glue[] = (frozen label of s, frozen label of t); the
// glued vertex keeps the s label, exchange entries add.
Seed amalgamate(const Seed& s, const Seed& t,
                const std::vector<std::pair<std::string, std::string>>& glue);

Seed rename_vertex(const Seed& s, const std::string& from, const std::string& to);

// Rational matrix extending exchange ratios to frozen vertices: zero on
// pairs touching an unfrozen vertex, and eps+p integral wherever a ratio
// is actually taken.
struct AuxiliaryMatrix {
  std::vector<std::vector<Rat>> p;
};

AuxiliaryMatrix zero_auxiliary(const Seed& s);
void check_auxiliary_shape(const Seed& s, const AuxiliaryMatrix& p);

// Integer exponent vector over J of X_i = prod_j A_j^{eps_ij + p_ij};
// throws NotInteger if the row is not integral after adding p.
std::vector<Int> exchange_ratio(const Seed& s, const AuxiliaryMatrix& p,
                                const std::string& i);

// exact rank of the J x J_uf submatrix equals |J_uf| (fraction-free
// Bareiss elimination after clearing denominators)
bool full_rank(const Seed& s);

// equality after transporting s through the label bijection
bool seeds_equal(const Seed& s, const Seed& t,
                 const std::vector<std::pair<std::string, std::string>>& relabel);

// Searches for a bijection making the seeds equal, frozen flags and
// multipliers included. Backtracking with row-invariant pruning; fine at
// the sizes this library produces.
std::optional<std::vector<std::pair<std::string, std::string>>> find_seed_isomorphism(
    const Seed& s, const Seed& t);

struct GreenSearchOptions {
  std::size_t max_depth = 12;
  bool parallel = false;
};

// Maximal green sequence search on the framed seed: mutate only at green
// vertices until every c-vector is negative. Iterative deepening with a
// transposition table; ties break to the lowest label, so serial and
// parallel runs return the same answer.
std::optional<std::vector<std::string>> green_sequence_search(
    const Seed& s, const GreenSearchOptions& opts = {});

std::string to_json(const Seed& s);
Seed seed_from_json(const std::string& text);
std::string to_dot(const Seed& s);

std::uint64_t seed_hash(const Seed& s);

}  // namespace richseed
