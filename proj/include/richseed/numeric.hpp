#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace richseed {

// All arithmetic in this library is exact. Integers and rationals are
// GMP-backed; mpq_class keeps values canonical (reduced, positive
// denominator) automatically.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline Rat pos_part(const Rat& q) { return q > 0 ? q : Rat(0); }

inline int sgn_of(const Rat& q) { return sgn(q); }

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// q^e for integer e (e may be negative; q must be nonzero then).
Rat rat_pow(const Rat& q, const Int& e);

// Deterministic pseudorandom stream (splitmix64). Used wherever sampling
// is needed so runs are reproducible from a single u64 seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi]
  long next_long(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // positive rational with small numerator/denominator
  Rat next_positive_rat(long num_max = 12, long den_max = 5) {
    return Rat(next_long(1, num_max), next_long(1, den_max));
  }

  // nonzero rational, either sign
  Rat next_nonzero_rat(long num_max = 12, long den_max = 5) {
    Rat q = next_positive_rat(num_max, den_max);
    return (next_u64() & 1) ? q : Rat(-q);
  }

 private:
  std::uint64_t state_;
};

}  // namespace richseed
