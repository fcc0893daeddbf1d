#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyadic/number.hpp"

namespace polyadic {

/// Per-level Bezout witnesses for the greatest common divisor of two chains:
/// v_n*r_n + u_n*s_n == d_n (mod M_n), d_n = gcd(r_n, s_n, M_n).
/// The d-chain obeys gcd(d_{n+1}, M_n) = d_n but is generally not a
/// compatible residue chain.
struct GcdCertificate {
  TowerPtr tower;
  std::vector<Int> d;
  std::vector<Int> u;
  std::vector<Int> v;

  const Int& top() const { return d.back(); }
  /// Re-checks all three invariants against the original operands.
  bool verify(const PolyadicNumber& a, const PolyadicNumber& b) const;
};

GcdCertificate gcd_certificate(const PolyadicNumber& a, const PolyadicNumber& b);

/// a | b in the truncated ring: a*x == b solvable at every level, i.e.
/// gcd(r_n, M_n) divides s_n for all n.
bool divides(const PolyadicNumber& a, const PolyadicNumber& b);

/// Divisibility by a divisor chain (each d_n dividing M_n): d_n | r_n at
/// every level.
bool chain_divides(const std::vector<Int>& d_chain, const PolyadicNumber& b);

struct InverseResult {
  std::optional<PolyadicNumber> value;  // unit up to depth N when present
  unsigned level = 0;                   // first level with gcd(r_n, M_n) > 1
  std::uint64_t prime_witness = 0;      // a prime dividing that gcd

  bool is_unit() const { return value.has_value(); }
};

InverseResult inverse(const PolyadicNumber& a);

/// Corollary-1 dichotomy for a prime p in A: either p divides alpha at every
/// level, or a truncated Bezout pair (lambda, sigma) with
/// lambda*alpha + sigma*p == 1 exists.
struct Dichotomy {
  bool p_divides;
  std::optional<PolyadicNumber> lambda;
  std::optional<PolyadicNumber> sigma;
};

Dichotomy prime_dichotomy(std::uint64_t p, const PolyadicNumber& alpha);

/// Finite-level principal generator of the ideal spanned by the inputs:
/// d_n = gcd of all operand residues and M_n. The chain is exposed as-is;
/// element() reinterprets it as a residue chain when that happens to be
/// compatible.
struct IdealGenerator {
  TowerPtr tower;
  std::vector<Int> d;

  std::optional<PolyadicNumber> element() const;
  bool generates(const PolyadicNumber& x) const { return chain_divides(d, x); }
};

IdealGenerator ideal_generator(std::span<const PolyadicNumber> gens);

}  // namespace polyadic
