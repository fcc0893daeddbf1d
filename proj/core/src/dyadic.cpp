#include "polyadic/dyadic.hpp"

#include <cmath>
#include <sstream>

namespace polyadic {

Dyadic::Dyadic(Int num, unsigned exp) : num_(std::move(num)), exp_(exp) {
  if (num_ < 0) throw std::invalid_argument("Dyadic: negative numerator");
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

Rat Dyadic::to_rational() const { return Rat(num_, Int(1) << exp_); }

double Dyadic::to_double() const {
  return num_.convert_to<double>() / std::ldexp(1.0, static_cast<int>(exp_));
}

std::string Dyadic::str() const {
  std::ostringstream os;
  os << num_ << "/2^" << exp_;
  return os.str();
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  Int d = (a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_));
  if (d < 0) throw std::invalid_argument("Dyadic subtraction underflow");
  return Dyadic(d, e);
}

bool operator==(const Dyadic& a, const Dyadic& b) {
  return a.exp_ == b.exp_ && a.num_ == b.num_;
}

bool operator<(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
}

std::string DyadicInterval::str() const {
  if (exact()) return lower.str() + " (exact)";
  return lower.str() + " + [0, " + tail.str() + "]";
}

}  // namespace polyadic
