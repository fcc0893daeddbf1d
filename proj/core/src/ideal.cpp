#include "polyadic/ideal.hpp"

#include <boost/integer/common_factor.hpp>

namespace polyadic {

namespace {

using boost::integer::gcd;

void require_same_tower(const PolyadicNumber& a, const PolyadicNumber& b) {
  if (a.tower() != b.tower() &&
      a.tower()->spec_string() != b.tower()->spec_string()) {
    throw TowerMismatch();
  }
}

}  // namespace

GcdCertificate gcd_certificate(const PolyadicNumber& a, const PolyadicNumber& b) {
  require_same_tower(a, b);
  GcdCertificate cert;
  cert.tower = a.tower();
  const unsigned depth = a.depth();
  cert.d.reserve(depth);
  cert.u.reserve(depth);
  cert.v.reserve(depth);
  for (unsigned n = 1; n <= depth; ++n) {
    const Int& m = cert.tower->modulus(n);
    const Int& r = a.residue(n);
    const Int& s = b.residue(n);
    // x*r + y*s == g1, then a1*g1 + b1*m == d with d = gcd(g1, m).
    ExtGcd first = ext_gcd(r, s);
    ExtGcd second = ext_gcd(first.g, m);
    Int d = second.g;  // gcd(r, s, m); equals m when r == s == 0
    cert.d.push_back(d == 0 ? Int(m) : d);
    cert.v.push_back(mod_floor(second.x * first.x, m));
    cert.u.push_back(mod_floor(second.x * first.y, m));
  }
  return cert;
}

bool GcdCertificate::verify(const PolyadicNumber& a, const PolyadicNumber& b) const {
  const unsigned depth = a.depth();
  if (d.size() != depth || u.size() != depth || v.size() != depth) return false;
  for (unsigned n = 1; n <= depth; ++n) {
    const Int& m = tower->modulus(n);
    const Int& dn = d[n - 1];
    if (dn < 1 || m % dn != 0) return false;
    if (mod_floor(v[n - 1] * a.residue(n) + u[n - 1] * b.residue(n) - dn, m) != 0) {
      return false;
    }
    if (gcd(a.residue(n), m) % dn != 0) return false;
    if (gcd(b.residue(n), m) % dn != 0) return false;
    if (n < depth && gcd(d[n], m) != dn) return false;
  }
  return true;
}

bool divides(const PolyadicNumber& a, const PolyadicNumber& b) {
  require_same_tower(a, b);
  for (unsigned n = 1; n <= a.depth(); ++n) {
    const Int& m = a.tower()->modulus(n);
    Int g = gcd(a.residue(n), m);
    if (g == 0) g = m;  // gcd(0, m) with m == 1
    if (b.residue(n) % g != 0) return false;
  }
  return true;
}

bool chain_divides(const std::vector<Int>& d_chain, const PolyadicNumber& b) {
  if (d_chain.size() != b.depth()) {
    throw std::invalid_argument("divisor chain length does not match depth");
  }
  for (unsigned n = 1; n <= b.depth(); ++n) {
    if (b.residue(n) % d_chain[n - 1] != 0) return false;
  }
  return true;
}

InverseResult inverse(const PolyadicNumber& a) {
  std::vector<Int> rs;
  rs.reserve(a.depth());
  for (unsigned n = 1; n <= a.depth(); ++n) {
    const Int& m = a.tower()->modulus(n);
    ExtGcd e = ext_gcd(a.residue(n), m);
    Int g = e.g == 0 ? m : e.g;
    if (m > 1 && g != 1) {
      InverseResult res;
      res.level = n;
      res.prime_witness = factorize(g).front().first;
      return res;
    }
    rs.push_back(m == 1 ? Int(0) : mod_floor(e.x, m));
  }
  return {PolyadicNumber::from_residues(a.tower(), std::move(rs)), 0, 0};
}

Dichotomy prime_dichotomy(std::uint64_t p, const PolyadicNumber& alpha) {
  const TowerPtr& tower = alpha.tower();
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("prime_dichotomy: " + std::to_string(p) +
                                " is not prime");
  }
  Membership mem = tower->in_A(Int(p));
  if (!mem.member) {
    throw std::invalid_argument("prime_dichotomy: " + std::to_string(p) +
                                " is not in the modulus set A of this tower");
  }
  bool div = true;
  for (unsigned n = 1; n <= alpha.depth() && div; ++n) {
    Int g = gcd(Int(p), tower->modulus(n));
    if (alpha.residue(n) % g != 0) div = false;
  }
  if (div) return {true, std::nullopt, std::nullopt};

  // Not divisible: compatibility forces gcd(r_N, p, M_N) == 1, so a Bezout
  // pair exists at the top level. Reducing it downward keeps the identity at
  // every coarser level and yields compatible chains.
  const Int& top_m = tower->top_modulus();
  ExtGcd first = ext_gcd(alpha.top(), Int(p));
  ExtGcd second = ext_gcd(first.g, top_m);
  if (second.g != 1 && top_m > 1) {
    throw std::logic_error("prime_dichotomy: inconsistent residue chain");
  }
  Int top_lambda = mod_floor(second.x * first.x, top_m);
  Int top_sigma = mod_floor(second.x * first.y, top_m);
  Dichotomy out;
  out.p_divides = false;
  out.lambda = PolyadicNumber::embed(tower, top_lambda);
  out.sigma = PolyadicNumber::embed(tower, top_sigma);
  return out;
}

std::optional<PolyadicNumber> IdealGenerator::element() const {
  std::vector<Int> rs;
  rs.reserve(d.size());
  for (unsigned n = 1; n <= d.size(); ++n) {
    rs.push_back(mod_floor(d[n - 1], tower->modulus(n)));
  }
  try {
    return PolyadicNumber::from_residues(tower, std::move(rs));
  } catch (const CompatibilityViolation&) {
    return std::nullopt;
  }
}

IdealGenerator ideal_generator(std::span<const PolyadicNumber> gens) {
  if (gens.empty()) {
    throw std::invalid_argument("ideal_generator: need at least one generator");
  }
  for (std::size_t i = 1; i < gens.size(); ++i) {
    require_same_tower(gens[0], gens[i]);
  }
  const TowerPtr& tower = gens[0].tower();
  IdealGenerator out;
  out.tower = tower;
  for (unsigned n = 1; n <= gens[0].depth(); ++n) {
    const Int& m = tower->modulus(n);
    Int g = m;
    for (const PolyadicNumber& x : gens) g = gcd(g, x.residue(n));
    out.d.push_back(g == 0 ? Int(m) : g);
  }
  return out;
}

}  // namespace polyadic
