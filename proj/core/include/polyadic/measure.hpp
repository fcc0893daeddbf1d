#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "polyadic/number.hpp"

namespace polyadic {

class SetParseError : public std::invalid_argument {
 public:
  SetParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A subset of N (0 included) that is a union of residue classes mod Q up to
/// finitely many inserted and deleted points. Canonical form: Q minimal,
/// added points outside the periodic part, removed points inside it.
class EventuallyPeriodicSet {
 public:
  EventuallyPeriodicSet(std::uint64_t period, std::set<std::uint64_t> residues,
                        std::set<std::uint64_t> added = {},
                        std::set<std::uint64_t> removed = {});

  static EventuallyPeriodicSet empty();
  static EventuallyPeriodicSet naturals();
  /// {a, a+q, a+2q, ...}
  static EventuallyPeriodicSet progression(std::uint64_t a, std::uint64_t q);
  static EventuallyPeriodicSet finite(const std::set<std::uint64_t>& points);

  std::uint64_t period() const { return period_; }
  const std::set<std::uint64_t>& residues() const { return residues_; }
  const std::set<std::uint64_t>& added() const { return added_; }
  const std::set<std::uint64_t>& removed() const { return removed_; }

  bool contains(std::uint64_t x) const;
  bool is_empty() const;
  bool is_finite() const { return residues_.empty(); }

  EventuallyPeriodicSet complement() const;
  friend EventuallyPeriodicSet set_union(const EventuallyPeriodicSet& a,
                                         const EventuallyPeriodicSet& b);
  friend EventuallyPeriodicSet set_intersection(const EventuallyPeriodicSet& a,
                                                const EventuallyPeriodicSet& b);
  friend EventuallyPeriodicSet set_difference(const EventuallyPeriodicSet& a,
                                              const EventuallyPeriodicSet& b);
  friend bool operator==(const EventuallyPeriodicSet& a,
                         const EventuallyPeriodicSet& b);

  std::string str() const;

 private:
  void canonicalize();

  std::uint64_t period_;
  std::set<std::uint64_t> residues_;
  std::set<std::uint64_t> added_;
  std::set<std::uint64_t> removed_;
};

/// Grammar: term := AP(a,q) | {n1,n2,...} | ~term | (expr);
/// expr := term ((|, &, -) term)*, equal precedence, left-associative.
EventuallyPeriodicSet parse_set_expression(const std::string& text);

/// R(S:M): number of residue classes mod M that meet S.
Int count_incongruent(const EventuallyPeriodicSet& s, const Int& modulus);

struct DensityResult {
  Rat value;
  bool exact;  // mirrors the cap oracle's exactness for the period
};

/// nu*(S) = lim R(S:M_n)/M_n = |T mod G| / G with G the tower's minimal
/// generator of the period. Finite insertions and deletions contribute 0.
DensityResult nu_star(const EventuallyPeriodicSet& s, const ModulusTower& tower);

/// Haar measure of the clopen coset r + m*Omega: 1/g(m).
Rat haar_coset(const ModulusTower& tower, const Int& r, const Int& m);

/// alpha in cl(S) up to depth N: at every level some s in S is congruent to
/// r_n mod M_n.
bool closure_member(const PolyadicNumber& alpha, const EventuallyPeriodicSet& s);

}  // namespace polyadic
