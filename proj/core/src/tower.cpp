#include "polyadic/tower.hpp"

#include <algorithm>
#include <sstream>

#include <boost/integer/common_factor.hpp>

namespace polyadic {

namespace {

Int lcm_int(const Int& a, const Int& b) { return boost::integer::lcm(a, b); }

}  // namespace

std::string CapReport::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Finite:
      os << "finite(" << value << ")";
      break;
    case Kind::Infinite:
      os << "infinite";
      break;
    case Kind::UnknownAtDepth:
      os << "unknown-at-depth(" << value << ")";
      break;
  }
  return os.str();
}

ModulusTower::ModulusTower(TowerKind kind, std::uint64_t prime,
                           std::vector<Int> generators)
    : kind_(kind),
      prime_(prime),
      depth_(static_cast<unsigned>(generators.size())),
      generators_(std::move(generators)) {
  if (depth_ == 0) throw TowerSpecError("tower depth must be at least 1");
  moduli_.reserve(depth_);
  Int m = 1;
  for (const Int& b : generators_) {
    if (b < 1) throw TowerSpecError("tower generators must be positive");
    m = lcm_int(m, b);
    moduli_.push_back(m);
  }
}

TowerPtr ModulusTower::factorial(unsigned depth) {
  std::vector<Int> gens;
  Int f = 1;
  for (unsigned n = 1; n <= depth; ++n) {
    f *= n;
    gens.push_back(f);
  }
  return TowerPtr(new ModulusTower(TowerKind::Factorial, 0, std::move(gens)));
}

TowerPtr ModulusTower::prime_power(std::uint64_t p, unsigned depth) {
  if (!is_prime_u64(p)) {
    throw TowerSpecError("prime-power tower needs a prime base, got " +
                         std::to_string(p));
  }
  std::vector<Int> gens;
  Int q = 1;
  for (unsigned n = 1; n <= depth; ++n) {
    q *= p;
    gens.push_back(q);
  }
  return TowerPtr(new ModulusTower(TowerKind::PrimePower, p, std::move(gens)));
}

TowerPtr ModulusTower::primorial(unsigned depth) {
  std::vector<Int> gens;
  Int q = 1;
  std::uint64_t p = 1;
  for (unsigned n = 1; n <= depth; ++n) {
    do {
      ++p;
    } while (!is_prime_u64(p));
    q *= p;
    gens.push_back(q);
  }
  return TowerPtr(new ModulusTower(TowerKind::Primorial, 0, std::move(gens)));
}

TowerPtr ModulusTower::explicit_tower(std::vector<Int> generators,
                                      std::optional<unsigned> depth) {
  if (generators.empty()) throw TowerSpecError("explicit tower needs generators");
  if (depth) {
    if (*depth < 1 || *depth > generators.size()) {
      throw TowerSpecError("explicit tower depth exceeds the generator list");
    }
    generators.resize(*depth);
  }
  return TowerPtr(new ModulusTower(TowerKind::Explicit, 0, std::move(generators)));
}

std::optional<Int> ModulusTower::generator_at(unsigned n) const {
  if (n == 0) throw std::invalid_argument("generator_at: levels are 1-based");
  if (n <= depth_) return generators_[n - 1];
  switch (kind_) {
    case TowerKind::Factorial: {
      Int f = generators_.back();
      for (unsigned k = depth_ + 1; k <= n; ++k) f *= k;
      return f;
    }
    case TowerKind::PrimePower:
      return generators_.back() * int_pow(prime_, n - depth_);
    case TowerKind::Primorial: {
      Int q = generators_.back();
      std::uint64_t p = static_cast<std::uint64_t>(nth_prime(depth_));
      for (unsigned k = depth_ + 1; k <= n; ++k) {
        do {
          ++p;
        } while (!is_prime_u64(p));
        q *= p;
      }
      return q;
    }
    case TowerKind::Explicit:
      return std::nullopt;
  }
  return std::nullopt;
}

CapReport ModulusTower::cap_valuation(std::uint64_t p) const {
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("cap_valuation: " + std::to_string(p) +
                                " is not prime");
  }
  CapReport r;
  r.prime = p;
  switch (kind_) {
    case TowerKind::Factorial:
      r.kind = CapReport::Kind::Infinite;
      break;
    case TowerKind::PrimePower:
      if (p == prime_) {
        r.kind = CapReport::Kind::Infinite;
      } else {
        r.kind = CapReport::Kind::Finite;
        r.value = 0;
      }
      break;
    case TowerKind::Primorial:
      r.kind = CapReport::Kind::Finite;
      r.value = 1;
      break;
    case TowerKind::Explicit:
      r.kind = CapReport::Kind::UnknownAtDepth;
      r.value = top_modulus() % p == 0 ? valuation(top_modulus(), p) : 0;
      break;
  }
  return r;
}

MinimalGenerator ModulusTower::minimal_generator(const Int& m) const {
  if (m < 1) throw std::invalid_argument("minimal_generator: m must be >= 1");
  Int g = 1;
  bool exact = true;
  for (auto [p, e] : factorize(m)) {
    CapReport cap = cap_valuation(p);
    unsigned c;
    switch (cap.kind) {
      case CapReport::Kind::Infinite:
        c = e;
        break;
      case CapReport::Kind::Finite:
        c = std::min(e, cap.value);
        break;
      case CapReport::Kind::UnknownAtDepth:
        c = std::min(e, cap.value);
        exact = false;
        break;
    }
    g *= int_pow(p, c);
  }
  return {g, exact};
}

Membership ModulusTower::in_A(const Int& m) const {
  MinimalGenerator mg = minimal_generator(m);
  return {mg.g == m, mg.exact};
}

std::string ModulusTower::spec_string() const {
  std::ostringstream os;
  switch (kind_) {
    case TowerKind::Factorial:
      os << "factorial:" << depth_;
      break;
    case TowerKind::PrimePower:
      os << "prime:" << prime_ << ":" << depth_;
      break;
    case TowerKind::Primorial:
      os << "primorial:" << depth_;
      break;
    case TowerKind::Explicit:
      os << "explicit:";
      for (unsigned i = 0; i < depth_; ++i) {
        if (i) os << ",";
        os << generators_[i];
      }
      break;
  }
  return os.str();
}

namespace {

unsigned parse_depth(const std::string& text, const std::string& spec) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw TowerSpecError("bad tower spec '" + spec + "': invalid depth '" +
                         text + "'");
  }
  unsigned long v = std::stoul(text);
  if (v < 1 || v > 100000) {
    throw TowerSpecError("bad tower spec '" + spec + "': depth out of range");
  }
  return static_cast<unsigned>(v);
}

Int parse_positive_int(const std::string& text, const std::string& spec) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw TowerSpecError("bad tower spec '" + spec + "': invalid integer '" +
                         text + "'");
  }
  Int v(text);
  if (v < 1) throw TowerSpecError("bad tower spec '" + spec + "': zero entry");
  return v;
}

}  // namespace

TowerPtr parse_tower_spec(const std::string& spec,
                          std::optional<unsigned> depth_override) {
  auto field = [&](std::size_t from, std::size_t to) {
    return spec.substr(from, to == std::string::npos ? to : to - from);
  };
  std::size_t c1 = spec.find(':');
  std::string head = spec.substr(0, c1);
  if (head == "factorial") {
    if (c1 == std::string::npos)
      throw TowerSpecError("bad tower spec '" + spec + "': missing depth");
    unsigned d = depth_override ? *depth_override
                                : parse_depth(field(c1 + 1, std::string::npos), spec);
    return ModulusTower::factorial(d);
  }
  if (head == "primorial") {
    if (c1 == std::string::npos)
      throw TowerSpecError("bad tower spec '" + spec + "': missing depth");
    unsigned d = depth_override ? *depth_override
                                : parse_depth(field(c1 + 1, std::string::npos), spec);
    return ModulusTower::primorial(d);
  }
  if (head == "prime") {
    std::size_t c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw TowerSpecError("bad tower spec '" + spec + "': want prime:<p>:<depth>");
    Int p = parse_positive_int(field(c1 + 1, c2), spec);
    if (p > Int(~0ull)) throw TowerSpecError("prime too large in '" + spec + "'");
    unsigned d = depth_override ? *depth_override
                                : parse_depth(field(c2 + 1, std::string::npos), spec);
    return ModulusTower::prime_power(static_cast<std::uint64_t>(p), d);
  }
  if (head == "explicit") {
    if (c1 == std::string::npos)
      throw TowerSpecError("bad tower spec '" + spec + "': missing generators");
    std::vector<Int> gens;
    std::string rest = spec.substr(c1 + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string item = rest.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      gens.push_back(parse_positive_int(item, spec));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return ModulusTower::explicit_tower(std::move(gens), depth_override);
  }
  throw TowerSpecError("bad tower spec '" + spec + "': unknown kind '" + head +
                       "'");
}

bool is_cd_set(const std::set<Int>& s) {
  if (!s.count(1)) return false;
  for (const Int& m : s) {
    for (Int d = 1; d * d <= m; ++d) {
      if (m % d == 0) {
        if (!s.count(d) || !s.count(m / d)) return false;
      }
    }
  }
  for (const Int& a : s) {
    for (const Int& b : s) {
      if (!s.count(lcm_int(a, b))) return false;
    }
  }
  return true;
}

}  // namespace polyadic
