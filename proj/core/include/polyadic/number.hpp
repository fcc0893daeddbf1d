#pragma once

#include <string>
#include <variant>
#include <vector>

#include "polyadic/dyadic.hpp"
#include "polyadic/tower.hpp"

namespace polyadic {

class TowerMismatch : public std::invalid_argument {
 public:
  TowerMismatch() : std::invalid_argument("operands live on different towers") {}
};

class CompatibilityViolation : public std::invalid_argument {
 public:
  explicit CompatibilityViolation(unsigned level)
      : std::invalid_argument("residue chain breaks compatibility at level " +
                              std::to_string(level)),
        level_(level) {}
  /// First n (1-based) with r_{n+1} != r_n (mod M_n).
  unsigned level() const { return level_; }

 private:
  unsigned level_;
};

/// A truncated element of the completion: a compatible residue chain
/// (r_1, ..., r_N) with r_n in [0, M_n) and r_{n+1} == r_n (mod M_n).
class PolyadicNumber {
 public:
  static PolyadicNumber embed(TowerPtr tower, const Int& a);
  static PolyadicNumber from_residues(TowerPtr tower, std::vector<Int> residues);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Int>& residues() const { return residues_; }
  const Int& residue(unsigned n) const { return residues_.at(n - 1); }
  unsigned depth() const { return static_cast<unsigned>(residues_.size()); }
  const Int& top() const { return residues_.back(); }

  bool is_zero() const;
  /// "[r1, ..., rN] mod [M1, ..., MN]"
  std::string str() const;

  friend PolyadicNumber operator+(const PolyadicNumber& a, const PolyadicNumber& b);
  friend PolyadicNumber operator-(const PolyadicNumber& a, const PolyadicNumber& b);
  friend PolyadicNumber operator*(const PolyadicNumber& a, const PolyadicNumber& b);
  friend PolyadicNumber operator-(const PolyadicNumber& a);
  friend bool operator==(const PolyadicNumber& a, const PolyadicNumber& b);
  friend bool operator!=(const PolyadicNumber& a, const PolyadicNumber& b) {
    return !(a == b);
  }

 private:
  PolyadicNumber(TowerPtr tower, std::vector<Int> residues)
      : tower_(std::move(tower)), residues_(std::move(residues)) {}

  TowerPtr tower_;
  std::vector<Int> residues_;
};

/// Exact norm of an integer: sum of 2^(-n) over levels whose generator does
/// not divide a, summed in closed form once B_n > |a|. Exact (tail 0) for
/// kinds with a generator rule at every level; Explicit towers stop at depth
/// N and report tail 2^(-N).
DyadicInterval norm(const ModulusTower& tower, const Int& a);

/// Truncated norm of a residue chain: lower = sum over n <= N with
/// B_n not dividing r_n, tail = 2^(-N).
DyadicInterval norm(const PolyadicNumber& x);

DyadicInterval distance(const PolyadicNumber& a, const PolyadicNumber& b);

struct LimitResult {
  std::variant<PolyadicNumber, unsigned> value;  // unsigned = first bad level

  bool converged() const { return value.index() == 0; }
  const PolyadicNumber& limit() const { return std::get<0>(value); }
  unsigned failed_level() const { return std::get<1>(value); }
};

/// Per level n, the residues seq[i] mod M_n must be constant over the last
/// stability_window entries; the stabilized residues form the limit.
LimitResult limit_of_sequence(const TowerPtr& tower, const std::vector<Int>& seq,
                              unsigned stability_window = 2);

}  // namespace polyadic
