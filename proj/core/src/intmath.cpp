#include "polyadic/intmath.hpp"

namespace polyadic {

OperandTooLarge::OperandTooLarge(const Int& value)
    : std::domain_error("operand " + value.str() +
                        " exceeds the 64-bit factorization limit") {}

Int mod_floor(const Int& a, const Int& m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sprp bases covering the full 64-bit range.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(const Int& n) {
  if (n <= 0) throw std::invalid_argument("factorize: input must be positive");
  if (n > Int(~0ull)) throw OperandTooLarge(n);
  std::uint64_t m = static_cast<std::uint64_t>(n);
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t p = 5; p <= m / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

unsigned valuation(Int n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("valuation: v_p(0) is undefined");
  if (n < 0) n = -n;
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division is fine: invariants are linear
    old_r -= q * r;
    std::swap(old_r, r);
    old_x -= q * x;
    std::swap(old_x, x);
    old_y -= q * y;
    std::swap(old_y, y);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

Int int_pow(std::uint64_t p, unsigned k) {
  Int r = 1;
  Int base = p;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

std::uint64_t nth_prime(unsigned k) {
  if (k == 0) throw std::invalid_argument("nth_prime: index is 1-based");
  std::uint64_t candidate = 1;
  for (unsigned found = 0; found < k;) {
    ++candidate;
    if (is_prime_u64(candidate)) ++found;
  }
  return candidate;
}

}  // namespace polyadic
