#pragma once

#include <vector>

#include "qbw/integer.hpp"

namespace qbw {

// Small finite field GF(p^e) with full discrete-log tables. Elements are
// encoded as integers in [0, p^e): the base-p digits are the coefficients of
// the residue polynomial, low degree first. Immutable once built.
class FiniteField {
public:
  // Builds GF(p^e) with the lexicographically least monic irreducible
  // modulus and the least primitive generator, both verified. Requires p
  // prime, 1 <= e <= 6, p^e <= 10^6.
  static FiniteField gf(long p, int e);

  long p() const { return p_; }
  int degree() const { return e_; }
  long size() const { return q_; }

  // Modulus coefficients, low degree first, length e+1, monic.
  const std::vector<int>& modulus() const { return modulus_; }
  long generator() const { return generator_; }

  long add(long a, long b) const;
  long neg(long a) const;
  long sub(long a, long b) const { return add(a, neg(b)); }
  long mul(long a, long b) const;
  long inv(long a) const;
  long pow_generator(long exp) const; // generator^exp, exp taken mod q-1
  // Discrete log base the generator; throws std::domain_error on 0.
  long dlog(long x) const;

private:
  FiniteField() = default;
  long p_ = 0, q_ = 0;
  int e_ = 0;
  long generator_ = 0;
  std::vector<int> modulus_;
  std::vector<long> exp_table_; // exp_table_[i] = generator^i, i in [0, q-1)
  std::vector<long> log_table_; // inverse of exp_table_, log_table_[1] = 0
};

bool is_prime(long n);

// Factors q = p^e with p prime, or returns false.
bool prime_power(long q, long& p, int& e);

} // namespace qbw
