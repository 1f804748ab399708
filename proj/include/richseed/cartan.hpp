#pragma once

#include <string>
#include <vector>

#include "richseed/error.hpp"
#include "richseed/numeric.hpp"

namespace richseed {

// Weights live in the fundamental-weight basis (omega-coordinates),
// coweights in the simple-coroot basis. Both are plain integer vectors;
// the owning RootDatum fixes their length and the pairing.
struct WeightVector {
  std::vector<Int> c;
};

struct CoweightVector {
  std::vector<Int> c;
};

// Symmetrizable generalized Cartan matrix with its minimal positive
// symmetrizers. Always simply connected: the weight lattice is Z[omega_i]
// and the coweight lattice Z[alpha_i^vee], so the datum is determined by
// the matrix. Index labels are opaque strings kept in order; thickening
// appends "inf_k" labels that stay distinguishable downstream.
class RootDatum {
 public:
  static RootDatum validate(std::vector<std::string> labels,
                            std::vector<std::vector<int>> cartan);
  // labels default to "1", "2", ...
  static RootDatum validate(std::vector<std::vector<int>> cartan);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;
  bool has_label(const std::string& label) const;

  int a(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const Int& d(std::size_t i) const { return sym_[i]; }
  const std::vector<Int>& symmetrizers() const { return sym_; }

  bool is_symmetric() const;

  // <cowt, wt>; dual bases make this a plain dot product.
  Int pairing(const CoweightVector& cowt, const WeightVector& wt) const;

  WeightVector fundamental_weight(std::size_t i) const;
  // alpha_i in omega-coordinates is row i of the Cartan matrix
  // (<alpha_j^vee, alpha_i> = a_ij).
  WeightVector simple_root(std::size_t i) const;
  CoweightVector simple_coroot(std::size_t i) const;
  WeightVector rho() const;

  // s_i(wt) = wt - <alpha_i^vee, wt> alpha_i
  WeightVector reflect(std::size_t i, const WeightVector& wt) const;
  // s_i(cowt) = cowt - <cowt, alpha_i> alpha_i^vee
  CoweightVector reflect(std::size_t i, const CoweightVector& cowt) const;

  bool operator==(const RootDatum& o) const {
    return labels_ == o.labels_ && cartan_ == o.cartan_;
  }

 private:
  RootDatum() = default;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Int> sym_;
};

// Index set I + {inf_1, ..., inf_{n-1}}; the new rows/columns carry -2
// everywhere off-diagonal. The result is a GCM for any input but is
// symmetrizable only when the input matrix is symmetric; validate then
// rejects it, which thicken propagates.
RootDatum thicken(const RootDatum& datum, std::size_t n);

// Datum file grammar (see README): '#' comments; first the rank n, then n
// whitespace-separated labels, then the n*n matrix entries row-major.
RootDatum parse_cartan_text(const std::string& text);
RootDatum load_cartan_file(const std::string& path);
std::string format_cartan(const RootDatum& datum);

}  // namespace richseed
