#pragma once

#include <vector>

#include "polyadic/number.hpp"

namespace polyadic {

class NotRefinable : public std::domain_error {
 public:
  explicit NotRefinable(unsigned coarse_level)
      : std::domain_error("coarse modulus at level " +
                          std::to_string(coarse_level) +
                          " divides no fine modulus"),
        level_(coarse_level) {}
  unsigned level() const { return level_; }

 private:
  unsigned level_;
};

class InexactCaps : public std::domain_error {
 public:
  InexactCaps()
      : std::domain_error(
            "coarse tower has unknown valuation caps; kernel generator would "
            "be a guess") {}
};

/// Finite-depth witness that the coarse completion is a quotient of the fine
/// one: each coarse level k is controlled by the least fine level n(k) with
/// M'_k | M_{n(k)}.
struct RefinementMap {
  TowerPtr fine;
  TowerPtr coarse;
  std::vector<unsigned> level;  // level[k-1] = n(k), nondecreasing

  unsigned fine_level(unsigned k) const { return level.at(k - 1); }
};

RefinementMap check_refinement(TowerPtr fine, TowerPtr coarse);

/// The projection F restricted to truncated chains: coarse residue at level k
/// is the fine residue at level n(k) reduced mod M'_k. Agrees with embedding
/// on integers and is a ring morphism.
PolyadicNumber project(const RefinementMap& map, const PolyadicNumber& beta);

/// Canonical generator of the kernel of project: at fine level n the CRT
/// solution of x == p^{c_p} (mod p^{v_p(M_n)}) over primes p | M_n, where c_p
/// is the coarse cap at p and p^infinity := 0. Requires certain coarse caps.
PolyadicNumber kernel_generator(const RefinementMap& map);

}  // namespace polyadic
