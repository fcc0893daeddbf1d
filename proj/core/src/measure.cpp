#include "polyadic/measure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/integer/common_factor.hpp>

namespace polyadic {

namespace {

using boost::integer::gcd;

constexpr std::uint64_t kMaxPeriod = 1ull << 20;

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 l =
      static_cast<unsigned __int128>(a / std::gcd(a, b)) * b;
  if (l > kMaxPeriod) {
    throw std::domain_error("eventually-periodic set period overflow");
  }
  return static_cast<std::uint64_t>(l);
}

std::set<std::uint64_t> residues_mod(const std::set<std::uint64_t>& t,
                                     std::uint64_t g) {
  std::set<std::uint64_t> out;
  for (std::uint64_t x : t) out.insert(x % g);
  return out;
}

}  // namespace

EventuallyPeriodicSet::EventuallyPeriodicSet(std::uint64_t period,
                                             std::set<std::uint64_t> residues,
                                             std::set<std::uint64_t> added,
                                             std::set<std::uint64_t> removed)
    : period_(period),
      residues_(std::move(residues)),
      added_(std::move(added)),
      removed_(std::move(removed)) {
  if (period_ == 0) throw std::invalid_argument("period must be positive");
  if (period_ > kMaxPeriod) {
    throw std::domain_error("eventually-periodic set period overflow");
  }
  for (std::uint64_t t : residues_) {
    if (t >= period_) throw std::invalid_argument("residue out of range");
  }
  canonicalize();
}

bool EventuallyPeriodicSet::contains(std::uint64_t x) const {
  if (added_.count(x)) return true;
  if (removed_.count(x)) return false;
  return residues_.count(x % period_) != 0;
}

bool EventuallyPeriodicSet::is_empty() const {
  return residues_.empty() && added_.empty();
}

void EventuallyPeriodicSet::canonicalize() {
  // Resolve exceptional points against the periodic part. A point listed in
  // added wins over removed.
  std::set<std::uint64_t> exceptions = added_;
  exceptions.insert(removed_.begin(), removed_.end());
  std::set<std::uint64_t> added, removed;
  for (std::uint64_t x : exceptions) {
    bool member = added_.count(x) ? true : !removed_.count(x);
    bool periodic = residues_.count(x % period_) != 0;
    if (member && !periodic) added.insert(x);
    if (!member && periodic) removed.insert(x);
  }
  added_ = std::move(added);
  removed_ = std::move(removed);

  // Shrink the period to the least divisor reproducing T as full classes.
  for (std::uint64_t q = 1; q < period_; ++q) {
    if (period_ % q != 0) continue;
    bool ok = true;
    for (std::uint64_t t = 0; t < period_ && ok; ++t) {
      if ((residues_.count(t) != 0) != (residues_.count(t % q) != 0)) ok = false;
    }
    if (ok) {
      std::set<std::uint64_t> shrunk;
      for (std::uint64_t t : residues_) {
        if (t < q) shrunk.insert(t);
      }
      residues_ = std::move(shrunk);
      period_ = q;
      break;
    }
  }
}

EventuallyPeriodicSet EventuallyPeriodicSet::empty() {
  return EventuallyPeriodicSet(1, {});
}

EventuallyPeriodicSet EventuallyPeriodicSet::naturals() {
  return EventuallyPeriodicSet(1, {0});
}

EventuallyPeriodicSet EventuallyPeriodicSet::progression(std::uint64_t a,
                                                         std::uint64_t q) {
  if (q == 0) throw std::invalid_argument("AP difference must be positive");
  std::set<std::uint64_t> removed;
  for (std::uint64_t x = a % q; x < a; x += q) removed.insert(x);
  return EventuallyPeriodicSet(q, {a % q}, {}, std::move(removed));
}

EventuallyPeriodicSet EventuallyPeriodicSet::finite(
    const std::set<std::uint64_t>& points) {
  return EventuallyPeriodicSet(1, {}, points, {});
}

EventuallyPeriodicSet EventuallyPeriodicSet::complement() const {
  std::set<std::uint64_t> t;
  for (std::uint64_t r = 0; r < period_; ++r) {
    if (!residues_.count(r)) t.insert(r);
  }
  return EventuallyPeriodicSet(period_, std::move(t), removed_, added_);
}

namespace {

template <typename Op>
EventuallyPeriodicSet combine(const EventuallyPeriodicSet& a,
                              const EventuallyPeriodicSet& b, Op&& op) {
  std::uint64_t l = lcm_checked(a.period(), b.period());
  std::set<std::uint64_t> t;
  for (std::uint64_t r = 0; r < l; ++r) {
    if (op(a.residues().count(r % a.period()) != 0,
           b.residues().count(r % b.period()) != 0)) {
      t.insert(r);
    }
  }
  // Exceptions of the result can only sit at the inputs' exceptional points.
  std::set<std::uint64_t> exceptions;
  for (const auto* s : {&a, &b}) {
    exceptions.insert(s->added().begin(), s->added().end());
    exceptions.insert(s->removed().begin(), s->removed().end());
  }
  std::set<std::uint64_t> added, removed;
  for (std::uint64_t x : exceptions) {
    bool actual = op(a.contains(x), b.contains(x));
    bool periodic = t.count(x % l) != 0;
    if (actual && !periodic) added.insert(x);
    if (!actual && periodic) removed.insert(x);
  }
  return EventuallyPeriodicSet(l, std::move(t), std::move(added),
                               std::move(removed));
}

}  // namespace

EventuallyPeriodicSet set_union(const EventuallyPeriodicSet& a,
                                const EventuallyPeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

EventuallyPeriodicSet set_intersection(const EventuallyPeriodicSet& a,
                                       const EventuallyPeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

EventuallyPeriodicSet set_difference(const EventuallyPeriodicSet& a,
                                     const EventuallyPeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

bool operator==(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
  return a.period_ == b.period_ && a.residues_ == b.residues_ &&
         a.added_ == b.added_ && a.removed_ == b.removed_;
}

std::string EventuallyPeriodicSet::str() const {
  std::ostringstream os;
  auto list = [&os](const std::set<std::uint64_t>& xs) {
    os << "{";
    bool first = true;
    for (std::uint64_t x : xs) {
      if (!first) os << ",";
      os << x;
      first = false;
    }
    os << "}";
  };
  os << "period=" << period_ << " residues=";
  list(residues_);
  if (!added_.empty()) {
    os << " added=";
    list(added_);
  }
  if (!removed_.empty()) {
    os << " removed=";
    list(removed_);
  }
  return os.str();
}

namespace {

class SetParser {
 public:
  explicit SetParser(const std::string& text) : text_(text) {}

  EventuallyPeriodicSet parse() {
    EventuallyPeriodicSet s = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SetParseError("trailing input", pos_);
    return s;
  }

 private:
  EventuallyPeriodicSet expr() {
    EventuallyPeriodicSet s = term();
    for (;;) {
      skip_ws();
      if (eat('|')) {
        s = set_union(s, term());
      } else if (eat('&')) {
        s = set_intersection(s, term());
      } else if (eat('-')) {
        s = set_difference(s, term());
      } else {
        return s;
      }
    }
  }

  EventuallyPeriodicSet term() {
    skip_ws();
    if (eat('~')) return term().complement();
    if (eat('(')) {
      EventuallyPeriodicSet s = expr();
      skip_ws();
      if (!eat(')')) throw SetParseError("expected ')'", pos_);
      return s;
    }
    if (eat('{')) return finite_literal();
    if (text_.compare(pos_, 3, "AP(") == 0) {
      pos_ += 3;
      std::uint64_t a = integer();
      skip_ws();
      if (!eat(',')) throw SetParseError("expected ',' in AP", pos_);
      std::uint64_t q = integer();
      skip_ws();
      if (!eat(')')) throw SetParseError("expected ')' in AP", pos_);
      if (q == 0) throw SetParseError("AP difference must be positive", pos_);
      return EventuallyPeriodicSet::progression(a, q);
    }
    throw SetParseError("expected AP(a,q), {..}, '~' or '('", pos_);
  }

  EventuallyPeriodicSet finite_literal() {
    std::set<std::uint64_t> points;
    skip_ws();
    if (eat('}')) return EventuallyPeriodicSet::finite(points);
    for (;;) {
      points.insert(integer());
      skip_ws();
      if (eat('}')) return EventuallyPeriodicSet::finite(points);
      if (!eat(',')) throw SetParseError("expected ',' or '}'", pos_);
    }
  }

  std::uint64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      ++pos_;
    }
    if (pos_ == start) throw SetParseError("expected integer", pos_);
    if (pos_ - start > 18) throw SetParseError("integer too large", start);
    return std::stoull(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

EventuallyPeriodicSet parse_set_expression(const std::string& text) {
  return SetParser(text).parse();
}

Int count_incongruent(const EventuallyPeriodicSet& s, const Int& modulus) {
  if (modulus < 1) throw std::invalid_argument("count_incongruent: M >= 1");
  std::uint64_t g = static_cast<std::uint64_t>(gcd(Int(s.period()), modulus));
  std::set<std::uint64_t> t_mod_g = residues_mod(s.residues(), g);
  // Every occupied periodic class mod M is hit by infinitely many elements,
  // so removed points never vacate a class.
  Int count = (modulus / g) * Int(t_mod_g.size());
  std::set<Int> extra;
  for (std::uint64_t a : s.added()) {
    if (!t_mod_g.count(a % g)) extra.insert(mod_floor(Int(a), modulus));
  }
  return count + Int(extra.size());
}

DensityResult nu_star(const EventuallyPeriodicSet& s, const ModulusTower& tower) {
  if (s.is_finite()) return {Rat(0), true};
  MinimalGenerator mg = tower.minimal_generator(Int(s.period()));
  std::uint64_t g = static_cast<std::uint64_t>(mg.g);
  std::set<std::uint64_t> t_mod_g = residues_mod(s.residues(), g);
  return {Rat(Int(t_mod_g.size()), Int(g)), mg.exact};
}

Rat haar_coset(const ModulusTower& tower, const Int& r, const Int& m) {
  if (m < 1) throw std::invalid_argument("haar_coset: m must be positive");
  if (r < 0 || r >= m) throw std::invalid_argument("haar_coset: need 0 <= r < m");
  return Rat(Int(1), tower.minimal_generator(m).g);
}

bool closure_member(const PolyadicNumber& alpha, const EventuallyPeriodicSet& s) {
  for (unsigned n = 1; n <= alpha.depth(); ++n) {
    const Int& m = alpha.tower()->modulus(n);
    const Int& r = alpha.residue(n);
    std::uint64_t g = static_cast<std::uint64_t>(gcd(Int(s.period()), m));
    std::set<std::uint64_t> t_mod_g = residues_mod(s.residues(), g);
    // A periodic witness class is infinite, so finitely many removals cannot
    // falsify it.
    bool hit = t_mod_g.count(static_cast<std::uint64_t>(r % g)) != 0;
    for (auto it = s.added().begin(); !hit && it != s.added().end(); ++it) {
      hit = mod_floor(Int(*it) - r, m) == 0;
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace polyadic
