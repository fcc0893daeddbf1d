#include "polyadic/quotient.hpp"

#include <boost/integer/common_factor.hpp>

namespace polyadic {

RefinementMap check_refinement(TowerPtr fine, TowerPtr coarse) {
  RefinementMap map;
  map.level.reserve(coarse->depth());
  unsigned n = 1;
  for (unsigned k = 1; k <= coarse->depth(); ++k) {
    const Int& target = coarse->modulus(k);
    // n(k) is nondecreasing, so resume the scan where the last level ended.
    while (n <= fine->depth() && fine->modulus(n) % target != 0) ++n;
    if (n > fine->depth()) throw NotRefinable(k);
    map.level.push_back(n);
  }
  map.fine = std::move(fine);
  map.coarse = std::move(coarse);
  return map;
}

PolyadicNumber project(const RefinementMap& map, const PolyadicNumber& beta) {
  if (beta.tower() != map.fine &&
      beta.tower()->spec_string() != map.fine->spec_string()) {
    throw TowerMismatch();
  }
  std::vector<Int> rs;
  rs.reserve(map.coarse->depth());
  for (unsigned k = 1; k <= map.coarse->depth(); ++k) {
    rs.push_back(
        mod_floor(beta.residue(map.fine_level(k)), map.coarse->modulus(k)));
  }
  return PolyadicNumber::from_residues(map.coarse, std::move(rs));
}

namespace {

// CRT for pairwise coprime moduli.
Int crt(const std::vector<std::pair<Int, Int>>& congruences) {
  Int x = 0;
  Int m = 1;
  for (const auto& [r, q] : congruences) {
    ExtGcd e = ext_gcd(m, q);
    // m and q coprime: x + m * (m^{-1} mod q) * (r - x) solves both.
    Int step = mod_floor(e.x * (r - x), q);
    x += m * step;
    m *= q;
  }
  return mod_floor(x, m);
}

}  // namespace

PolyadicNumber kernel_generator(const RefinementMap& map) {
  std::vector<Int> rs;
  rs.reserve(map.fine->depth());
  for (unsigned n = 1; n <= map.fine->depth(); ++n) {
    const Int& m = map.fine->modulus(n);
    std::vector<std::pair<Int, Int>> congruences;
    for (auto [p, e] : factorize(m)) {
      CapReport cap = map.coarse->cap_valuation(p);
      if (!cap.certain()) throw InexactCaps();
      Int pk = int_pow(p, e);
      Int target = cap.kind == CapReport::Kind::Infinite
                       ? Int(0)
                       : mod_floor(int_pow(p, std::min(cap.value, e)), pk);
      congruences.emplace_back(target, pk);
    }
    rs.push_back(m == 1 ? Int(0) : crt(congruences));
  }
  return PolyadicNumber::from_residues(map.fine, std::move(rs));
}

}  // namespace polyadic
