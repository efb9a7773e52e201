#pragma once

// Word-size prime fields and Chinese remaindering, used by the exact
// resultant and gcd routines.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "umbilic/rational.hpp"

namespace umbilic::modular {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // low to high, trimmed

struct PrimeField {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b >= p) ? a + b - p : a + b; }
  u64 sub(u64 a, u64 b) const { return (a >= b) ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
  }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 reduce(const Integer& z) const;
};

/// Distinct primes below 2^61, largest first.
const std::vector<u64>& large_primes(std::size_t count);

void trim(ModPoly& a);
u64 eval(const PrimeField& f, const ModPoly& a, u64 x);
/// Monic gcd over F_p.
ModPoly gcd(const PrimeField& f, ModPoly a, ModPoly b);

/// Incremental CRT over a vector of residues, lifted to the symmetric range.
class CrtAccumulator {
 public:
  explicit CrtAccumulator(std::size_t length) : values_(length), modulus_(1) {}

  void add(u64 p, const std::vector<u64>& residues);
  std::vector<Integer> symmetric() const;
  const Integer& modulus() const { return modulus_; }
  void reset(std::size_t length) {
    values_.assign(length, Integer(0));
    modulus_ = 1;
  }

 private:
  std::vector<Integer> values_;
  Integer modulus_;
};

}  // namespace umbilic::modular
