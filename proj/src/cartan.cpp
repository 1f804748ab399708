#include "richseed/cartan.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace richseed {

RootDatum RootDatum::validate(std::vector<std::vector<int>> cartan) {
  std::vector<std::string> labels;
  labels.reserve(cartan.size());
  for (std::size_t i = 0; i < cartan.size(); ++i) labels.push_back(std::to_string(i + 1));
  return validate(std::move(labels), std::move(cartan));
}

RootDatum RootDatum::validate(std::vector<std::string> labels,
                              std::vector<std::vector<int>> cartan) {
  const std::size_t n = cartan.size();
  if (labels.size() != n)
    throw Error(Errc::BadInput, "label count does not match matrix size");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i].size() != n) throw Error(Errc::NotGCM, "matrix is not square");
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) throw Error(Errc::BadInput, "duplicate label " + labels[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i][i] != 2)
      throw Error(Errc::NotGCM, "diagonal entry a_" + labels[i] + labels[i] + " != 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0)
        throw Error(Errc::NotGCM, "positive off-diagonal entry at (" + labels[i] + "," + labels[j] + ")");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw Error(Errc::NotGCM, "zero-pattern asymmetry at (" + labels[i] + "," + labels[j] + ")");
    }
  }

  // Minimal positive symmetrizers: on each connected component the ratios
  // d_j/d_i = a_ij/a_ji are forced, so propagate exact rationals from a
  // root vertex, check consistency on the remaining edges, then scale the
  // component to the least positive integers.
  std::vector<Rat> ratio(n, Rat(0));
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = ncomp;
    ratio[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0) continue;
        // d_i a_ij = d_j a_ji
        Rat forced = ratio[i] * Rat(cartan[i][j], cartan[j][i]);
        if (comp[j] == -1) {
          comp[j] = ncomp;
          ratio[j] = forced;
          stack.push_back(j);
        } else if (ratio[j] != forced) {
          throw Error(Errc::NotSymmetrizable, "inconsistent symmetrizer ratio at (" +
                                                  labels[i] + "," + labels[j] + ")");
        }
      }
    }
    ++ncomp;
  }

  std::vector<Int> d(n, Int(1));
  for (int c = 0; c < ncomp; ++c) {
    Int lcm_den(1);
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) lcm_den = lcm(lcm_den, ratio[i].get_den());
    Int g(0);
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) {
        Int v = Int(ratio[i] * Rat(lcm_den));
        d[i] = v;
        g = gcd(g, v);
      }
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) d[i] /= g;
  }
  // components are individually reduced, so the global gcd is already 1
  RootDatum out;
  out.labels_ = std::move(labels);
  out.cartan_ = std::move(cartan);
  out.sym_ = std::move(d);
  return out;
}

std::size_t RootDatum::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(Errc::MissingVertex, "no index labeled " + label);
}

bool RootDatum::has_label(const std::string& label) const {
  for (const auto& l : labels_)
    if (l == label) return true;
  return false;
}

bool RootDatum::is_symmetric() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (cartan_[i][j] != cartan_[j][i]) return false;
  return true;
}

Int RootDatum::pairing(const CoweightVector& cowt, const WeightVector& wt) const {
  if (cowt.c.size() != rank() || wt.c.size() != rank())
    throw Error(Errc::DimensionMismatch, "pairing of vectors of wrong length");
  Int s(0);
  for (std::size_t i = 0; i < rank(); ++i) s += cowt.c[i] * wt.c[i];
  return s;
}

WeightVector RootDatum::fundamental_weight(std::size_t i) const {
  WeightVector w{std::vector<Int>(rank(), Int(0))};
  w.c[i] = 1;
  return w;
}

WeightVector RootDatum::simple_root(std::size_t i) const {
  WeightVector w{std::vector<Int>(rank(), Int(0))};
  for (std::size_t j = 0; j < rank(); ++j) w.c[j] = cartan_[i][j];
  return w;
}

CoweightVector RootDatum::simple_coroot(std::size_t i) const {
  CoweightVector w{std::vector<Int>(rank(), Int(0))};
  w.c[i] = 1;
  return w;
}

WeightVector RootDatum::rho() const {
  return WeightVector{std::vector<Int>(rank(), Int(1))};
}

WeightVector RootDatum::reflect(std::size_t i, const WeightVector& wt) const {
  if (wt.c.size() != rank()) throw Error(Errc::DimensionMismatch, "weight of wrong length");
  WeightVector out = wt;
  const Int coeff = wt.c[i];  // <alpha_i^vee, wt>
  for (std::size_t j = 0; j < rank(); ++j) out.c[j] -= coeff * cartan_[i][j];
  return out;
}

CoweightVector RootDatum::reflect(std::size_t i, const CoweightVector& cowt) const {
  if (cowt.c.size() != rank())
    throw Error(Errc::DimensionMismatch, "coweight of wrong length");
  // <cowt, alpha_i> = sum_j a_ij c_j
  Int coeff(0);
  for (std::size_t j = 0; j < rank(); ++j) coeff += Int(cartan_[i][j]) * cowt.c[j];
  CoweightVector out = cowt;
  out.c[i] -= coeff;
  return out;
}

RootDatum thicken(const RootDatum& datum, std::size_t n) {
  if (n < 1) throw Error(Errc::BadInput, "thicken needs n >= 1");
  const std::size_t r = datum.rank();
  const std::size_t extra = n - 1;
  std::vector<std::string> labels = datum.labels();
  for (std::size_t l = 1; l <= extra; ++l) labels.push_back("inf_" + std::to_string(l));
  std::vector<std::vector<int>> a(r + extra, std::vector<int>(r + extra, -2));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a[i][j] = datum.a(i, j);
  for (std::size_t i = 0; i < r + extra; ++i) a[i][i] = 2;
  return RootDatum::validate(std::move(labels), std::move(a));
}

RootDatum parse_cartan_text(const std::string& text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    cleaned.push_back(comment ? ' ' : ch);
  }
  std::istringstream in(cleaned);
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw Error(Errc::BadInput, "expected positive rank");
  std::vector<std::string> labels(n);
  for (auto& l : labels)
    if (!(in >> l)) throw Error(Errc::BadInput, "expected " + std::to_string(n) + " labels");
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(in >> a[i][j])) throw Error(Errc::BadInput, "expected n*n matrix entries");
  return RootDatum::validate(std::move(labels), std::move(a));
}

RootDatum load_cartan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cartan_text(buf.str());
}

std::string format_cartan(const RootDatum& datum) {
  std::ostringstream out;
  out << datum.rank() << "\n";
  for (std::size_t i = 0; i < datum.rank(); ++i)
    out << datum.label(i) << (i + 1 == datum.rank() ? "\n" : " ");
  for (std::size_t i = 0; i < datum.rank(); ++i)
    for (std::size_t j = 0; j < datum.rank(); ++j)
      out << datum.a(i, j) << (j + 1 == datum.rank() ? "\n" : " ");
  return out.str();
}

}  // namespace richseed
