#include "polyadic/number.hpp"

#include <sstream>

namespace polyadic {

PolyadicNumber PolyadicNumber::embed(TowerPtr tower, const Int& a) {
  std::vector<Int> rs;
  rs.reserve(tower->depth());
  for (unsigned n = 1; n <= tower->depth(); ++n) {
    rs.push_back(mod_floor(a, tower->modulus(n)));
  }
  return PolyadicNumber(std::move(tower), std::move(rs));
}

PolyadicNumber PolyadicNumber::from_residues(TowerPtr tower,
                                             std::vector<Int> residues) {
  if (residues.size() != tower->depth()) {
    throw std::invalid_argument("residue chain length does not match depth");
  }
  for (unsigned n = 1; n <= tower->depth(); ++n) {
    residues[n - 1] = mod_floor(residues[n - 1], tower->modulus(n));
  }
  for (unsigned n = 1; n < tower->depth(); ++n) {
    if (mod_floor(residues[n] - residues[n - 1], tower->modulus(n)) != 0) {
      throw CompatibilityViolation(n);
    }
  }
  return PolyadicNumber(std::move(tower), std::move(residues));
}

bool PolyadicNumber::is_zero() const {
  for (const Int& r : residues_) {
    if (r != 0) return false;
  }
  return true;
}

std::string PolyadicNumber::str() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<Int>& xs) {
    os << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) os << ", ";
      os << xs[i];
    }
    os << "]";
  };
  list(residues_);
  os << " mod ";
  list(tower_->moduli());
  return os.str();
}

namespace {

void require_same_tower(const PolyadicNumber& a, const PolyadicNumber& b) {
  if (a.tower() != b.tower() &&
      a.tower()->spec_string() != b.tower()->spec_string()) {
    throw TowerMismatch();
  }
}

template <typename F>
PolyadicNumber zip(const PolyadicNumber& a, const PolyadicNumber& b, F&& f) {
  require_same_tower(a, b);
  std::vector<Int> rs;
  rs.reserve(a.depth());
  for (unsigned n = 1; n <= a.depth(); ++n) {
    rs.push_back(mod_floor(f(a.residue(n), b.residue(n)), a.tower()->modulus(n)));
  }
  return PolyadicNumber::from_residues(a.tower(), std::move(rs));
}

}  // namespace

PolyadicNumber operator+(const PolyadicNumber& a, const PolyadicNumber& b) {
  return zip(a, b, [](const Int& x, const Int& y) { return x + y; });
}

PolyadicNumber operator-(const PolyadicNumber& a, const PolyadicNumber& b) {
  return zip(a, b, [](const Int& x, const Int& y) { return x - y; });
}

PolyadicNumber operator*(const PolyadicNumber& a, const PolyadicNumber& b) {
  return zip(a, b, [](const Int& x, const Int& y) { return x * y; });
}

PolyadicNumber operator-(const PolyadicNumber& a) {
  return PolyadicNumber::embed(a.tower(), 0) - a;
}

bool operator==(const PolyadicNumber& a, const PolyadicNumber& b) {
  require_same_tower(a, b);
  return a.residues() == b.residues();
}

DyadicInterval norm(const ModulusTower& tower, const Int& a) {
  if (a == 0) return {Dyadic::zero(), Dyadic::zero()};
  Int abs_a = a < 0 ? Int(-a) : a;
  Dyadic lower = Dyadic::zero();
  // The early break below needs nondecreasing generators, which only the
  // rule-based kinds guarantee; explicit towers are scanned to their depth.
  bool closed_form = tower.kind() != TowerKind::Explicit;
  unsigned n = 1;
  for (;; ++n) {
    std::optional<Int> b = tower.generator_at(n);
    if (!b) {
      // Explicit tower: generators past depth N are unknown.
      return {lower, Dyadic::pow2_neg(tower.depth())};
    }
    if (closed_form && *b > abs_a) break;
    if (a % *b != 0) lower = lower + Dyadic::pow2_neg(n);
  }
  // B_k > |a| for all k >= n (generator rules are nondecreasing), so every
  // remaining level contributes: sum_{k>=n} 2^(-k) = 2^(-(n-1)).
  return {lower + Dyadic::pow2_neg(n - 1), Dyadic::zero()};
}

DyadicInterval norm(const PolyadicNumber& x) {
  Dyadic lower = Dyadic::zero();
  for (unsigned n = 1; n <= x.depth(); ++n) {
    if (x.residue(n) % x.tower()->generator(n) != 0) {
      lower = lower + Dyadic::pow2_neg(n);
    }
  }
  return {lower, Dyadic::pow2_neg(x.depth())};
}

DyadicInterval distance(const PolyadicNumber& a, const PolyadicNumber& b) {
  return norm(a - b);
}

LimitResult limit_of_sequence(const TowerPtr& tower, const std::vector<Int>& seq,
                              unsigned stability_window) {
  if (seq.empty()) throw std::invalid_argument("limit_of_sequence: empty sequence");
  if (stability_window < 1) {
    throw std::invalid_argument("limit_of_sequence: window must be >= 1");
  }
  std::size_t window = std::min<std::size_t>(stability_window, seq.size());
  std::vector<Int> rs;
  rs.reserve(tower->depth());
  for (unsigned n = 1; n <= tower->depth(); ++n) {
    const Int& m = tower->modulus(n);
    Int r = mod_floor(seq.back(), m);
    for (std::size_t i = seq.size() - window; i < seq.size(); ++i) {
      if (mod_floor(seq[i], m) != r) return {n};
    }
    rs.push_back(std::move(r));
  }
  return {PolyadicNumber::from_residues(tower, std::move(rs))};
}

}  // namespace polyadic
