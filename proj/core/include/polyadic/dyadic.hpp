#pragma once

#include <string>

#include "polyadic/intmath.hpp"

namespace polyadic {

/// Nonnegative dyadic rational num/2^exp, kept with num odd or zero.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Int num, unsigned exp);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }
  /// 2^(-e)
  static Dyadic pow2_neg(unsigned e) { return Dyadic(1, e); }

  const Int& num() const { return num_; }
  unsigned exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  Rat to_rational() const;
  double to_double() const;
  /// Renders as "k/2^e".
  std::string str() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);  // requires a >= b
  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend bool operator<(const Dyadic& a, const Dyadic& b);
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

 private:
  Int num_ = 0;
  unsigned exp_ = 0;
};

/// A norm or distance value under truncation: the true value lies in
/// [lower, lower + tail]. tail == 0 means the value is exact.
struct DyadicInterval {
  Dyadic lower;
  Dyadic tail;

  bool exact() const { return tail.is_zero(); }
  Dyadic upper() const { return lower + tail; }
  std::string str() const;
};

}  // namespace polyadic
