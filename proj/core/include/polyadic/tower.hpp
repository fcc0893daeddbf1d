#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyadic/intmath.hpp"

namespace polyadic {

enum class TowerKind { Factorial, PrimePower, Primorial, Explicit };

/// sup_n v_p(M_n) for a prime p, as far as the tower kind can certify it.
/// Explicit towers only see their finite prefix, so the cap degrades to
/// UnknownAtDepth(v_p(M_N)).
struct CapReport {
  enum class Kind { Finite, Infinite, UnknownAtDepth };
  std::uint64_t prime = 0;
  Kind kind = Kind::Finite;
  unsigned value = 0;  // meaningful for Finite and UnknownAtDepth

  bool certain() const { return kind != Kind::UnknownAtDepth; }
  std::string str() const;
};

struct MinimalGenerator {
  Int g;
  bool exact;  // false when an UnknownAtDepth cap was used
};

struct Membership {
  bool member;
  bool exact;  // advisory flag mirrored from MinimalGenerator
};

/// A depth-N divisibility chain M_1 | M_2 | ... | M_N with M_n the prefix
/// lcm of the raw generators B_1..B_N. Immutable after construction.
class ModulusTower {
 public:
  static std::shared_ptr<const ModulusTower> factorial(unsigned depth);
  static std::shared_ptr<const ModulusTower> prime_power(std::uint64_t p,
                                                         unsigned depth);
  static std::shared_ptr<const ModulusTower> primorial(unsigned depth);
  static std::shared_ptr<const ModulusTower> explicit_tower(
      std::vector<Int> generators, std::optional<unsigned> depth = {});

  TowerKind kind() const { return kind_; }
  unsigned depth() const { return depth_; }
  std::uint64_t prime() const { return prime_; }  // PrimePower only

  /// 1-based accessors, n in [1, depth].
  const Int& generator(unsigned n) const { return generators_.at(n - 1); }
  const Int& modulus(unsigned n) const { return moduli_.at(n - 1); }
  const std::vector<Int>& generators() const { return generators_; }
  const std::vector<Int>& moduli() const { return moduli_; }
  const Int& top_modulus() const { return moduli_.back(); }

  /// B_n for arbitrary n >= 1, when the kind has a rule for levels past the
  /// configured depth (all kinds except Explicit).
  std::optional<Int> generator_at(unsigned n) const;

  CapReport cap_valuation(std::uint64_t p) const;

  /// g(m) = prod_{p|m} p^min(v_p(m), cap_p), the least positive generator of
  /// the ideal m*Omega in the completion.
  MinimalGenerator minimal_generator(const Int& m) const;

  /// m is in the moduli set A, i.e. g(m) == m.
  Membership in_A(const Int& m) const;

  std::string spec_string() const;

 private:
  ModulusTower(TowerKind kind, std::uint64_t prime, std::vector<Int> generators);

  TowerKind kind_;
  std::uint64_t prime_;
  unsigned depth_;
  std::vector<Int> generators_;
  std::vector<Int> moduli_;
};

using TowerPtr = std::shared_ptr<const ModulusTower>;

/// Grammar: factorial:<depth> | prime:<p>:<depth> | primorial:<depth>
///        | explicit:<B1>,<B2>,...
/// No whitespace. depth_override replaces the depth encoded in the string
/// (for explicit it truncates/errors against the listed generators).
TowerPtr parse_tower_spec(const std::string& spec,
                          std::optional<unsigned> depth_override = {});

/// CD-set check on a finite set: contains 1, divisor-closed, closed under
/// pairwise lcm.
bool is_cd_set(const std::set<Int>& s);

class TowerSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace polyadic
