#include "cli.hpp"

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "polyadic/ideal.hpp"
#include "polyadic/measure.hpp"
#include "polyadic/number.hpp"
#include "polyadic/quotient.hpp"
#include "polyadic/tower.hpp"

namespace polyadic::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string command;
  std::vector<std::string> operands;
  std::string tower_spec = "factorial:8";
  std::string fine_spec;
  std::string coarse_spec;
  bool structured = false;
  std::optional<unsigned> depth;
  unsigned window = 2;
};

Invocation parse_invocation(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("no command given; try 'help'");
  Invocation inv;
  inv.command = args[0];
  auto need_value = [&](std::size_t i, const std::string& flag) -> std::string {
    if (i + 1 >= args.size()) throw UsageError(flag + " needs a value");
    return args[i + 1];
  };
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--tower") {
      inv.tower_spec = need_value(i++, a);
    } else if (a == "--fine") {
      inv.fine_spec = need_value(i++, a);
    } else if (a == "--coarse") {
      inv.coarse_spec = need_value(i++, a);
    } else if (a == "--format") {
      std::string v = need_value(i++, a);
      if (v == "structured") {
        inv.structured = true;
      } else if (v != "text") {
        throw UsageError("unknown format '" + v + "' (want text|structured)");
      }
    } else if (a == "--depth") {
      std::string v = need_value(i++, a);
      try {
        inv.depth = static_cast<unsigned>(std::stoul(v));
      } catch (const std::exception&) {
        throw UsageError("bad --depth value '" + v + "'");
      }
    } else if (a == "--window") {
      std::string v = need_value(i++, a);
      try {
        inv.window = static_cast<unsigned>(std::stoul(v));
      } catch (const std::exception&) {
        throw UsageError("bad --window value '" + v + "'");
      }
      if (inv.window < 1) throw UsageError("--window must be >= 1");
    } else if (a.rfind("--", 0) == 0) {
      throw UsageError("unknown flag '" + a + "'");
    } else {
      inv.operands.push_back(a);
    }
  }
  return inv;
}

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + text + "'");
  }
}

// Operand syntax: a decimal integer, or a residue chain "[r1,r2,...]".
PolyadicNumber parse_element(const TowerPtr& tower, const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw UsageError("unterminated residue chain");
    std::vector<Int> rs;
    std::string body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
      std::size_t comma = body.find(',', pos);
      std::string item = body.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      while (!item.empty() && item.front() == ' ') item.erase(item.begin());
      while (!item.empty() && item.back() == ' ') item.pop_back();
      rs.push_back(parse_int(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return PolyadicNumber::from_residues(tower, std::move(rs));
  }
  return PolyadicNumber::embed(tower, parse_int(text));
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

std::string dyadic_approx(const Dyadic& d) {
  std::ostringstream os;
  os << std::setprecision(10) << d.to_double();
  return os.str();
}

json element_json(const PolyadicNumber& x) {
  json j;
  j["residues"] = json::array();
  j["moduli"] = json::array();
  for (unsigned n = 1; n <= x.depth(); ++n) {
    j["residues"].push_back(x.residue(n).str());
    j["moduli"].push_back(x.tower()->modulus(n).str());
  }
  return j;
}

json interval_json(const DyadicInterval& v) {
  json j;
  j["lower"] = v.lower.str();
  j["tail"] = v.tail.str();
  j["exact"] = v.exact();
  return j;
}

std::string interval_text(const DyadicInterval& v) {
  std::ostringstream os;
  os << v.lower.str();
  if (v.exact()) {
    os << " (exact)";
  } else {
    os << " + [0, " << v.tail.str() << "]";
  }
  os << " ~ " << dyadic_approx(v.lower);
  return os.str();
}

void emit(const Invocation& inv, std::ostream& out, const json& structured,
          const std::string& text) {
  if (inv.structured) {
    out << structured.dump() << "\n";
  } else {
    out << text << "\n";
  }
}

// Tiny expression evaluator for `eval`: +, -, * over integer atoms, neg(e),
// parentheses.
class ExprParser {
 public:
  ExprParser(TowerPtr tower, const std::string& text)
      : tower_(std::move(tower)), text_(text) {}

  PolyadicNumber parse() {
    PolyadicNumber x = sum();
    skip_ws();
    if (pos_ != text_.size()) {
      throw UsageError("trailing input in expression at position " +
                       std::to_string(pos_));
    }
    return x;
  }

 private:
  PolyadicNumber sum() {
    PolyadicNumber x = product();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        x = x + product();
      } else if (eat('-')) {
        x = x - product();
      } else {
        return x;
      }
    }
  }

  PolyadicNumber product() {
    PolyadicNumber x = atom();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        x = x * atom();
      } else {
        return x;
      }
    }
  }

  PolyadicNumber atom() {
    skip_ws();
    if (text_.compare(pos_, 4, "neg(") == 0) {
      pos_ += 4;
      PolyadicNumber x = sum();
      expect(')');
      return -x;
    }
    if (eat('(')) {
      PolyadicNumber x = sum();
      expect(')');
      return x;
    }
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) {
      throw UsageError("expected integer in expression at position " +
                       std::to_string(pos_));
    }
    return PolyadicNumber::embed(tower_, Int(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (!eat(c)) {
      throw UsageError(std::string("expected '") + c + "' at position " +
                       std::to_string(pos_));
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

  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  TowerPtr tower_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

void require_operands(const Invocation& inv, std::size_t count) {
  if (inv.operands.size() != count) {
    throw UsageError(inv.command + " expects " + std::to_string(count) +
                     " operand(s), got " + std::to_string(inv.operands.size()));
  }
}

TowerPtr tower_of(const Invocation& inv) {
  return parse_tower_spec(inv.tower_spec, inv.depth);
}

std::pair<TowerPtr, TowerPtr> fine_coarse_of(const Invocation& inv) {
  if (inv.fine_spec.empty() || inv.coarse_spec.empty()) {
    throw UsageError(inv.command + " needs --fine and --coarse tower specs");
  }
  return {parse_tower_spec(inv.fine_spec), parse_tower_spec(inv.coarse_spec)};
}

int cmd_tower_show(const Invocation& inv, std::ostream& out) {
  TowerPtr t = tower_of(inv);
  json j;
  j["command"] = "tower-show";
  j["spec"] = t->spec_string();
  j["depth"] = t->depth();
  j["generators"] = json::array();
  j["moduli"] = json::array();
  for (unsigned n = 1; n <= t->depth(); ++n) {
    j["generators"].push_back(t->generator(n).str());
    j["moduli"].push_back(t->modulus(n).str());
  }
  std::ostringstream os;
  os << t->spec_string() << "\n";
  os << "n | B_n | M_n";
  for (unsigned n = 1; n <= t->depth(); ++n) {
    os << "\n" << n << " | " << t->generator(n) << " | " << t->modulus(n);
  }
  emit(inv, out, j, os.str());
  return 0;
}

int cmd_norm(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 1);
  TowerPtr t = tower_of(inv);
  DyadicInterval v;
  if (!inv.operands[0].empty() && inv.operands[0].front() == '[') {
    v = norm(parse_element(t, inv.operands[0]));
  } else {
    v = norm(*t, parse_int(inv.operands[0]));
  }
  json j;
  j["command"] = "norm";
  j["tower"] = t->spec_string();
  j["value"] = interval_json(v);
  emit(inv, out, j, interval_text(v));
  return 0;
}

int cmd_dist(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 2);
  TowerPtr t = tower_of(inv);
  DyadicInterval v = distance(parse_element(t, inv.operands[0]),
                              parse_element(t, inv.operands[1]));
  json j;
  j["command"] = "dist";
  j["tower"] = t->spec_string();
  j["value"] = interval_json(v);
  emit(inv, out, j, interval_text(v));
  return 0;
}

int cmd_eval(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 1);
  TowerPtr t = tower_of(inv);
  PolyadicNumber x = ExprParser(t, inv.operands[0]).parse();
  json j;
  j["command"] = "eval";
  j["tower"] = t->spec_string();
  j["value"] = element_json(x);
  emit(inv, out, j, x.str());
  return 0;
}

int cmd_seq_limit(const Invocation& inv, std::ostream& out) {
  if (inv.operands.empty()) throw UsageError("seq-limit needs a sequence");
  TowerPtr t = tower_of(inv);
  std::vector<Int> seq;
  for (const std::string& s : inv.operands) seq.push_back(parse_int(s));
  LimitResult r = limit_of_sequence(t, seq, inv.window);
  if (!r.converged()) {
    throw DomainError("sequence not converged: residues unstable at level " +
                      std::to_string(r.failed_level()));
  }
  json j;
  j["command"] = "seq-limit";
  j["tower"] = t->spec_string();
  j["value"] = element_json(r.limit());
  emit(inv, out, j, r.limit().str());
  return 0;
}

int cmd_gcd(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 2);
  TowerPtr t = tower_of(inv);
  PolyadicNumber a = parse_element(t, inv.operands[0]);
  PolyadicNumber b = parse_element(t, inv.operands[1]);
  GcdCertificate cert = gcd_certificate(a, b);
  json j;
  j["command"] = "gcd";
  j["tower"] = t->spec_string();
  j["levels"] = json::array();
  for (unsigned n = 1; n <= t->depth(); ++n) {
    json row;
    row["n"] = n;
    row["M"] = t->modulus(n).str();
    row["d"] = cert.d[n - 1].str();
    row["u"] = cert.u[n - 1].str();
    row["v"] = cert.v[n - 1].str();
    j["levels"].push_back(row);
  }
  j["delta"] = cert.top().str();
  std::ostringstream os;
  os << "n | M_n | d_n | u_n | v_n";
  for (unsigned n = 1; n <= t->depth(); ++n) {
    os << "\n" << n << " | " << t->modulus(n) << " | " << cert.d[n - 1] << " | "
       << cert.u[n - 1] << " | " << cert.v[n - 1];
  }
  os << "\ndelta (level " << t->depth() << "): " << cert.top();
  emit(inv, out, j, os.str());
  return 0;
}

int cmd_inverse(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 1);
  TowerPtr t = tower_of(inv);
  InverseResult r = inverse(parse_element(t, inv.operands[0]));
  if (!r.is_unit()) {
    throw DomainError("not a unit: gcd with modulus exceeds 1 at level " +
                      std::to_string(r.level) + " (prime witness " +
                      std::to_string(r.prime_witness) + ")");
  }
  json j;
  j["command"] = "inverse";
  j["tower"] = t->spec_string();
  j["value"] = element_json(*r.value);
  emit(inv, out, j, r.value->str());
  return 0;
}

int cmd_divides(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 2);
  TowerPtr t = tower_of(inv);
  bool d = divides(parse_element(t, inv.operands[0]),
                   parse_element(t, inv.operands[1]));
  json j;
  j["command"] = "divides";
  j["tower"] = t->spec_string();
  j["value"] = d;
  emit(inv, out, j, d ? "true" : "false");
  return 0;
}

int cmd_dichotomy(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 2);
  TowerPtr t = tower_of(inv);
  Int p = parse_int(inv.operands[0]);
  if (p < 2 || p > Int(~0ull)) throw UsageError("bad prime operand");
  PolyadicNumber a = parse_element(t, inv.operands[1]);
  Dichotomy d = prime_dichotomy(static_cast<std::uint64_t>(p), a);
  json j;
  j["command"] = "dichotomy";
  j["tower"] = t->spec_string();
  j["branch"] = d.p_divides ? "divides" : "coprime";
  if (d.p_divides) {
    emit(inv, out, j, "divides");
  } else {
    j["lambda"] = element_json(*d.lambda);
    j["sigma"] = element_json(*d.sigma);
    std::ostringstream os;
    os << "coprime\nlambda = " << d.lambda->str() << "\nsigma  = "
       << d.sigma->str();
    emit(inv, out, j, os.str());
  }
  return 0;
}

int cmd_min_gen(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 1);
  TowerPtr t = tower_of(inv);
  MinimalGenerator g = t->minimal_generator(parse_int(inv.operands[0]));
  json j;
  j["command"] = "min-gen";
  j["tower"] = t->spec_string();
  j["value"] = g.g.str();
  j["exact"] = g.exact;
  std::ostringstream os;
  os << g.g << (g.exact ? " (exact)" : " (at available depth)");
  emit(inv, out, j, os.str());
  return 0;
}

int cmd_in_a(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 1);
  TowerPtr t = tower_of(inv);
  Membership m = t->in_A(parse_int(inv.operands[0]));
  json j;
  j["command"] = "in-A";
  j["tower"] = t->spec_string();
  j["value"] = m.member;
  j["exact"] = m.exact;
  std::ostringstream os;
  os << (m.member ? "true" : "false")
     << (m.exact ? "" : " (advisory: caps unknown at this depth)");
  emit(inv, out, j, os.str());
  return 0;
}

int cmd_is_cd(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 1);
  const std::string& text = inv.operands[0];
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw UsageError("is-cd expects a finite set literal {a,b,...}");
  }
  std::set<Int> s;
  std::string body = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos <= body.size() && !body.empty()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    Int v = parse_int(item);
    if (v < 1) throw UsageError("is-cd: entries must be positive");
    s.insert(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  bool cd = is_cd_set(s);
  json j;
  j["command"] = "is-cd";
  j["value"] = cd;
  emit(inv, out, j, cd ? "true" : "false");
  return 0;
}

int cmd_density(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 1);
  TowerPtr t = tower_of(inv);
  EventuallyPeriodicSet s = parse_set_expression(inv.operands[0]);
  DensityResult d = nu_star(s, *t);
  json j;
  j["command"] = "density";
  j["tower"] = t->spec_string();
  j["value"] = rat_str(d.value);
  j["exact"] = d.exact;
  std::ostringstream os;
  os << rat_str(d.value) << (d.exact ? "" : " (at available depth)");
  emit(inv, out, j, os.str());
  return 0;
}

int cmd_count_residues(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 2);
  EventuallyPeriodicSet s = parse_set_expression(inv.operands[0]);
  Int m = parse_int(inv.operands[1]);
  if (m < 1) throw UsageError("count-residues: modulus must be positive");
  Int c = count_incongruent(s, m);
  json j;
  j["command"] = "count-residues";
  j["modulus"] = m.str();
  j["value"] = c.str();
  emit(inv, out, j, c.str());
  return 0;
}

int cmd_haar(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 2);
  TowerPtr t = tower_of(inv);
  Int r = parse_int(inv.operands[0]);
  Int m = parse_int(inv.operands[1]);
  Rat v = haar_coset(*t, r, m);
  json j;
  j["command"] = "haar";
  j["tower"] = t->spec_string();
  j["value"] = rat_str(v);
  emit(inv, out, j, rat_str(v));
  return 0;
}

int cmd_closure_member(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 2);
  TowerPtr t = tower_of(inv);
  PolyadicNumber a = parse_element(t, inv.operands[0]);
  EventuallyPeriodicSet s = parse_set_expression(inv.operands[1]);
  bool member = closure_member(a, s);
  json j;
  j["command"] = "closure-member";
  j["tower"] = t->spec_string();
  j["value"] = member;
  emit(inv, out, j, member ? "true" : "false");
  return 0;
}

int cmd_refine_check(const Invocation& inv, std::ostream& out) {
  auto [fine, coarse] = fine_coarse_of(inv);
  RefinementMap map = check_refinement(fine, coarse);
  json j;
  j["command"] = "refine-check";
  j["fine"] = fine->spec_string();
  j["coarse"] = coarse->spec_string();
  j["levels"] = json::array();
  std::ostringstream os;
  for (unsigned k = 1; k <= coarse->depth(); ++k) {
    j["levels"].push_back(map.fine_level(k));
    if (k > 1) os << "\n";
    os << k << " -> " << map.fine_level(k);
  }
  emit(inv, out, j, os.str());
  return 0;
}

int cmd_project(const Invocation& inv, std::ostream& out) {
  require_operands(inv, 1);
  auto [fine, coarse] = fine_coarse_of(inv);
  RefinementMap map = check_refinement(fine, coarse);
  PolyadicNumber b = parse_element(fine, inv.operands[0]);
  PolyadicNumber p = project(map, b);
  json j;
  j["command"] = "project";
  j["fine"] = fine->spec_string();
  j["coarse"] = coarse->spec_string();
  j["value"] = element_json(p);
  emit(inv, out, j, p.str());
  return 0;
}

int cmd_kernel_gen(const Invocation& inv, std::ostream& out) {
  auto [fine, coarse] = fine_coarse_of(inv);
  RefinementMap map = check_refinement(fine, coarse);
  PolyadicNumber k = kernel_generator(map);
  json j;
  j["command"] = "kernel-gen";
  j["fine"] = fine->spec_string();
  j["coarse"] = coarse->spec_string();
  j["value"] = element_json(k);
  emit(inv, out, j, k.str());
  return 0;
}

const char* kUsage = R"(polyadic -- exact arithmetic on truncated residue towers

usage: polyadic <command> [operands] [flags]

commands:
  tower-show                     show generators and moduli
  norm INT|[CHAIN]               generalized polyadic norm
  dist A B                       metric distance between elements
  eval EXPR                      evaluate +,-,* expression with neg()
  seq-limit INT...               limit of an integer sequence
  gcd A B                        per-level gcd with Bezout certificate
  inverse A                      modular inverse chain, if a unit
  divides A B                    level-wise divisibility
  dichotomy P A                  prime dichotomy: divides or Bezout pair
  min-gen M                      minimal ideal generator g(M)
  in-A M                         membership of M in the modulus set
  is-cd {a,b,...}                CD-set check on a finite set
  density EXPR                   density nu* of an eventually periodic set
  count-residues EXPR M          occupied residue classes mod M
  haar R M                       Haar measure of the coset R + M*Omega
  closure-member A EXPR          membership of A in the closure of the set
  refine-check                   coarse-into-fine level map (--fine/--coarse)
  project A                      project a fine element to the coarse tower
  kernel-gen                     canonical kernel generator of the projection

flags:
  --tower SPEC      tower spec (default factorial:8)
  --fine SPEC       fine tower for quotient commands
  --coarse SPEC     coarse tower for quotient commands
  --depth N         override the depth in --tower
  --window N        stability window for seq-limit (default 2)
  --format MODE     text (default) or structured

tower specs: factorial:<depth> | prime:<p>:<depth> | primorial:<depth>
           | explicit:<B1>,<B2>,...
set expressions: AP(a,q), {n1,n2,...}, |, &, -, ~, parentheses
)";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    if (!args.empty() && (args[0] == "help" || args[0] == "--help")) {
      out << kUsage;
      return 0;
    }
    Invocation inv = parse_invocation(args);
    using Handler = int (*)(const Invocation&, std::ostream&);
    static const std::map<std::string, Handler> handlers = {
        {"tower-show", cmd_tower_show},
        {"norm", cmd_norm},
        {"dist", cmd_dist},
        {"eval", cmd_eval},
        {"seq-limit", cmd_seq_limit},
        {"gcd", cmd_gcd},
        {"inverse", cmd_inverse},
        {"divides", cmd_divides},
        {"dichotomy", cmd_dichotomy},
        {"min-gen", cmd_min_gen},
        {"in-A", cmd_in_a},
        {"is-cd", cmd_is_cd},
        {"density", cmd_density},
        {"count-residues", cmd_count_residues},
        {"haar", cmd_haar},
        {"closure-member", cmd_closure_member},
        {"refine-check", cmd_refine_check},
        {"project", cmd_project},
        {"kernel-gen", cmd_kernel_gen},
    };
    auto it = handlers.find(inv.command);
    if (it == handlers.end()) {
      throw UsageError("unknown command '" + inv.command + "'; try 'help'");
    }
    return it->second(inv, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const TowerSpecError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SetParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotRefinable& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InexactCaps& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CompatibilityViolation& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const OperandTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace polyadic::cli
