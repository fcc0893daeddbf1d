#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyadic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an operand exceeds the 64-bit factorization limit.
class OperandTooLarge : public std::domain_error {
 public:
  explicit OperandTooLarge(const Int& value);
};

// Mathematical mod: result in [0, m) for m > 0.
Int mod_floor(const Int& a, const Int& m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Trial division up to sqrt(n). n must fit in 64 bits (OperandTooLarge
// otherwise); crypto-size inputs are out of contract.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(const Int& n);

// p-adic valuation v_p(n) for n != 0.
unsigned valuation(Int n, std::uint64_t p);

struct ExtGcd {
  Int g;  // gcd(a, b) >= 0
  Int x;  // x*a + y*b == g
  Int y;
};
ExtGcd ext_gcd(const Int& a, const Int& b);

// Integer power p^k.
Int int_pow(std::uint64_t p, unsigned k);

// The k-th prime (1-based: nth_prime(1) == 2).
std::uint64_t nth_prime(unsigned k);

}  // namespace polyadic
