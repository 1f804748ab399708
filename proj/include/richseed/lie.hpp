#pragma once

#include <string>
#include <vector>

#include "richseed/cartan.hpp"
#include "richseed/seed.hpp"
#include "richseed/weyl.hpp"

namespace richseed {

// Vertex (i, l): level i is a datum label, l counts occurrences of the
// letter (0 = left boundary). Serialized as "<level>:<l>".
struct LieVertex {
  std::string level;
  int occ = 0;
};

std::string lie_label(const std::string& level, int occ);
LieVertex parse_lie_label(const std::string& label);

// Seed attached to a signed expression. Vertices are (i, l) for
// 0 <= l <= n_i; the unfrozen ones are exactly the interior 0 < l < n_i.
// Built by amalgamating elementary seeds letter by letter; the empty
// expression gives the all-(i,0) frozen seed with zero exchange matrix.
struct LieSeed {
  RootDatum datum;
  SignedExpression expr;
  Seed seed;
  std::vector<int> n;  // occurrences per datum index

  // position of (i,l) in the word (1-based letter index; (i,0) -> 0)
  int position(const std::string& level, int occ) const;
};

// s(i) / s(i-bar): all vertices frozen; level i contributes (i,0), (i,1),
// the other levels their (j,0).
LieSeed elementary_seed(const RootDatum& datum, std::size_t i, bool bar);

LieSeed build(const RootDatum& datum, const SignedExpression& expr);
LieSeed build(const RootDatum& datum, const Expression& expr);

LieSeed extend_right(const LieSeed& s, SignedLetter letter);
LieSeed extend_left(const LieSeed& s, SignedLetter letter);

// ((i,1), ..., (i,n_i-1)): mutate the whole level from the left.
std::vector<std::string> mu_vec(const LieSeed& s, const std::string& level);

// Canonical auxiliary matrix: a_ij/2 between the two left boundaries and
// between the two right boundaries of distinct levels. A level that never
// occurs has (i,0) as both boundaries and picks up both contributions,
// which keeps eps+p integral there as well.
AuxiliaryMatrix auxiliary(const LieSeed& s);

}  // namespace richseed
