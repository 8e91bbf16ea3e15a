#include "bigcell/spectral.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bigcell {

PatchExpr PatchExpr::fg_open(std::vector<Int> gens) {
  for (const Int& g : gens)
    if (g < 1) throw DomainError("fgopen generator must be >= 1");
  return PatchExpr(Node(FgOpen{std::move(gens)}));
}

PatchExpr PatchExpr::divisor_closure(SupernaturalNumber s) {
  return PatchExpr(Node(DivisorClosure{std::move(s)}));
}

PatchExpr PatchExpr::multiples_of(SupernaturalNumber s) {
  return PatchExpr(Node(MultiplesOf{std::move(s)}));
}

PatchExpr PatchExpr::not_above(Int n) {
  if (n < 1) throw DomainError("notabove argument must be >= 1");
  return PatchExpr(Node(NotAbove{std::move(n)}));
}

PatchExpr PatchExpr::union_of(std::vector<PatchExpr> children) {
  return PatchExpr(Node(Union{std::move(children)}));
}

PatchExpr PatchExpr::intersection_of(std::vector<PatchExpr> children) {
  return PatchExpr(Node(Intersection{std::move(children)}));
}

namespace {

bool is_spec_z_point(const SupernaturalNumber& s) {
  // spec(Z): the maximal supernatural (generic point) or s_p for one prime.
  if (!s.default_exponent().is_inf()) return false;
  if (s.exceptions().empty()) return true;
  return s.exceptions().size() == 1 &&
         s.exceptions().begin()->second.is_zero();
}

}  // namespace

bool member(const SupernaturalNumber& s, const PatchExpr& S) {
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PatchExpr::FgOpen>) {
          return std::any_of(node.generators.begin(), node.generators.end(),
                             [&](const Int& g) { return divides(g, s); });
        } else if constexpr (std::is_same_v<T, PatchExpr::DivisorClosure>) {
          return divides(s, node.bound);
        } else if constexpr (std::is_same_v<T, PatchExpr::MultiplesOf>) {
          return divides(node.base, s);
        } else if constexpr (std::is_same_v<T, PatchExpr::NotAbove>) {
          return !divides(node.n, s);
        } else if constexpr (std::is_same_v<T, PatchExpr::PowerSetPrimes>) {
          return s.is_completely_infinite();
        } else if constexpr (std::is_same_v<T, PatchExpr::SpecZ>) {
          return is_spec_z_point(s);
        } else if constexpr (std::is_same_v<T, PatchExpr::Full>) {
          return true;
        } else if constexpr (std::is_same_v<T, PatchExpr::Empty>) {
          return false;
        } else if constexpr (std::is_same_v<T, PatchExpr::Union>) {
          return std::any_of(
              node.children.begin(), node.children.end(),
              [&](const PatchExpr& c) { return member(s, c); });
        } else {
          static_assert(std::is_same_v<T, PatchExpr::Intersection>);
          return std::all_of(
              node.children.begin(), node.children.end(),
              [&](const PatchExpr& c) { return member(s, c); });
        }
      },
      S.node());
}

// ---------------------------------------------------------------------------
// Textual form: tagged nodes, e.g. union(fgopen(2,3), divclosure(2^inf*3)).
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("patch expression: at position " + std::to_string(pos) +
                     ": expected " + expected);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string tag() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("a node tag");
    return text.substr(start, pos - start);
  }

  // Raw argument token: everything up to the next ',' or ')' at this level.
  std::string scalar() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ')') ++pos;
    std::size_t end = pos;
    while (end > start &&
           std::isspace(static_cast<unsigned char>(text[end - 1])))
      --end;
    if (end == start) fail("an argument");
    return text.substr(start, end - start);
  }

  std::vector<std::string> scalar_args() {
    std::vector<std::string> out;
    if (!eat('(')) fail("'('");
    skip_ws();
    if (eat(')')) return out;
    out.push_back(scalar());
    while (eat(',')) out.push_back(scalar());
    if (!eat(')')) fail("')'");
    return out;
  }

  PatchExpr expr() {
    std::string t = tag();
    if (t == "full") return PatchExpr::full();
    if (t == "empty") return PatchExpr::empty();
    if (t == "powersetprimes") return PatchExpr::power_set_primes();
    if (t == "specz") return PatchExpr::spec_z();
    if (t == "fgopen") {
      std::vector<Int> gens;
      for (const auto& a : scalar_args()) gens.push_back(parse_natural(a));
      return PatchExpr::fg_open(std::move(gens));
    }
    if (t == "divclosure" || t == "multiples" || t == "notabove") {
      auto args = scalar_args();
      if (args.size() != 1) fail("exactly one argument for " + t);
      if (t == "divclosure")
        return PatchExpr::divisor_closure(SupernaturalNumber::parse(args[0]));
      if (t == "multiples")
        return PatchExpr::multiples_of(SupernaturalNumber::parse(args[0]));
      return PatchExpr::not_above(parse_natural(args[0]));
    }
    if (t == "union" || t == "intersection") {
      std::vector<PatchExpr> children;
      if (!eat('(')) fail("'('");
      skip_ws();
      if (!eat(')')) {
        children.push_back(expr());
        while (eat(',')) children.push_back(expr());
        if (!eat(')')) fail("')'");
      }
      return t == "union" ? PatchExpr::union_of(std::move(children))
                          : PatchExpr::intersection_of(std::move(children));
    }
    fail("a known node tag, got '" + t + "'");
  }
};

}  // namespace

PatchExpr PatchExpr::parse(const std::string& text) {
  // CLI sugar: "tag:rest" abbreviates "tag(rest)" for one-argument leaves.
  if (auto colon = text.find(':');
      colon != std::string::npos && text.find('(') == std::string::npos) {
    std::string rewritten =
        text.substr(0, colon) + "(" + text.substr(colon + 1) + ")";
    Parser p{rewritten};
    PatchExpr e = p.expr();
    p.skip_ws();
    if (p.pos != rewritten.size()) p.fail("end of input");
    return e;
  }
  Parser p{text};
  PatchExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("end of input");
  return e;
}

std::string PatchExpr::str() const {
  std::ostringstream out;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FgOpen>) {
          out << "fgopen(";
          for (std::size_t i = 0; i < node.generators.size(); ++i)
            out << (i ? "," : "") << node.generators[i];
          out << ")";
        } else if constexpr (std::is_same_v<T, DivisorClosure>) {
          out << "divclosure(" << node.bound.str() << ")";
        } else if constexpr (std::is_same_v<T, MultiplesOf>) {
          out << "multiples(" << node.base.str() << ")";
        } else if constexpr (std::is_same_v<T, NotAbove>) {
          out << "notabove(" << node.n << ")";
        } else if constexpr (std::is_same_v<T, PowerSetPrimes>) {
          out << "powersetprimes";
        } else if constexpr (std::is_same_v<T, SpecZ>) {
          out << "specz";
        } else if constexpr (std::is_same_v<T, Full>) {
          out << "full";
        } else if constexpr (std::is_same_v<T, Empty>) {
          out << "empty";
        } else {
          out << (std::is_same_v<T, Union> ? "union(" : "intersection(");
          const auto& children = node.children;
          for (std::size_t i = 0; i < children.size(); ++i)
            out << (i ? "," : "") << children[i].str();
          out << ")";
        }
      },
      *node_);
  return out.str();
}

// ---------------------------------------------------------------------------
// pcfb basics and limits
// ---------------------------------------------------------------------------

PcfbBasic::PcfbBasic(Int n_, SupernaturalNumber s_)
    : n(std::move(n_)), s(std::move(s_)) {
  if (!divides(n, s))
    throw DomainError("pcfb basic requires n | s: " + n.str() + " vs " +
                      s.str());
}

bool PcfbBasic::contains(const SupernaturalNumber& x) const {
  return divides(n, x) && divides(x, s);
}

std::optional<PcfbBasic> basic_intersect(const PcfbBasic& a,
                                         const PcfbBasic& b) {
  Int n = boost::multiprecision::lcm(a.n, b.n);
  SupernaturalNumber s = gcd(a.s, b.s);
  if (!divides(n, s)) return std::nullopt;
  return PcfbBasic(std::move(n), std::move(s));
}

SupernaturalNumber pcfb_limit(const SequenceSpec& seq) {
  for (const Int& t : seq.prefix)
    if (t < 1) throw DomainError("sequence terms must be >= 1");
  if (seq.tail) {
    if (seq.tail->base < 1) throw DomainError("tail base must be >= 1");
    if (seq.tail->ratio < 2) throw DomainError("tail ratio must be >= 2");
  }
  if (seq.prefix.empty() && !seq.tail)
    throw DomainError("empty sequence has no limit");

  if (!seq.tail) {
    // Finite sequence, repeated from its last element: the limit is that
    // element, and condition 1 demands every earlier term divide it.
    const Int& last = seq.prefix.back();
    for (const Int& t : seq.prefix) {
      if (last % t != 0)
        throw NonConvergentError("term " + t.str() +
                                 " does not divide eventual value " +
                                 last.str());
    }
    return SupernaturalNumber::from_natural(last);
  }

  // Supremum: prefix terms contribute finite exponents; the tail pushes
  // every prime of the ratio to inf and contributes v_p(base) elsewhere.
  SupernaturalNumber sup = SupernaturalNumber::from_natural(seq.tail->base);
  for (const Int& t : seq.prefix)
    sup = lcm(sup, SupernaturalNumber::from_natural(t));
  std::map<Int, ExtExp> exc;
  for (const auto& [p, e] : sup.exceptions()) exc.emplace(p, e);
  for (const auto& [p, e] : factorize(seq.tail->ratio)) {
    (void)e;
    exc[p] = ExtExp::inf();
  }
  sup = SupernaturalNumber::from_exponents(std::move(exc), ExtExp(0));

  // Condition 1 (terms divide the limit) holds by construction. Condition 2
  // fails exactly when some prime outside the ratio carries more of the
  // limit than the tail base does: then n = p^{v_p(sup)} * q^large (q a
  // ratio prime) divides the limit but no term.
  for (const auto& [p, e] : sup.exceptions()) {
    if (e.is_inf()) continue;  // ratio prime
    Int vb = 0;
    Int base = seq.tail->base;
    while (base % p == 0) {
      base /= p;
      ++vb;
    }
    if (e.finite_value() > vb)
      throw NonConvergentError(
          "no tail term is divisible by " + p.str() + "^" + e.str() +
          "; the sequence does not pcfb-converge");
  }
  return sup;
}

std::vector<Int> cofinal_chain(const SupernaturalNumber& s, std::size_t k) {
  if (k < 1) throw DomainError("cofinal_chain: k must be >= 1");
  // First k support primes, ascending (cofinite support when default = inf).
  std::vector<Int> support;
  if (s.default_exponent().is_inf()) {
    for (Int p = 2; support.size() < k; ++p) {
      if (is_prime(p) && !s.valuation(p).is_zero()) support.push_back(p);
    }
  } else {
    for (const auto& [p, e] : s.exceptions())
      if (!e.is_zero()) support.push_back(p);
  }
  std::vector<Int> chain;
  for (std::size_t j = 1; j <= k; ++j) {
    Int n = 1;
    for (std::size_t i = 0; i < std::min(j, support.size()); ++i) {
      const Int& p = support[i];
      ExtExp cap = ExtExp::min(s.valuation(p), ExtExp(Int(j)));
      for (Int t = 0; t < cap.finite_value(); ++t) n *= p;
    }
    chain.push_back(std::move(n));
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Small-model emptiness solver
// ---------------------------------------------------------------------------

namespace {

void collect_natural(const Int& n, RelevantData& out) {
  for (const auto& [p, e] : factorize(n)) {
    out.primes.insert(p);
    out.max_exp = std::max(out.max_exp, e);
  }
}

void collect_supernatural(const SupernaturalNumber& s, RelevantData& out) {
  for (const auto& [p, e] : s.exceptions()) {
    out.primes.insert(p);
    if (!e.is_inf()) out.max_exp = std::max(out.max_exp, e.finite_value());
  }
}

void collect_expr(const PatchExpr& S, RelevantData& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PatchExpr::FgOpen>) {
          for (const Int& g : node.generators) collect_natural(g, out);
        } else if constexpr (std::is_same_v<T, PatchExpr::DivisorClosure>) {
          collect_supernatural(node.bound, out);
        } else if constexpr (std::is_same_v<T, PatchExpr::MultiplesOf>) {
          collect_supernatural(node.base, out);
        } else if constexpr (std::is_same_v<T, PatchExpr::NotAbove>) {
          collect_natural(node.n, out);
        } else if constexpr (std::is_same_v<T, PatchExpr::Union> ||
                             std::is_same_v<T, PatchExpr::Intersection>) {
          for (const PatchExpr& c : node.children) collect_expr(c, out);
        }
      },
      S.node());
}

constexpr std::uint64_t kCandidateBudget = 1'000'000;

}  // namespace

RelevantData relevant_data(const Int& n, const PatchExpr& S,
                           const std::vector<Int>& excluded) {
  RelevantData out;
  collect_natural(n, out);
  for (const Int& m : excluded) collect_natural(m, out);
  collect_expr(S, out);
  return out;
}

// The search space is a small model: every constraint reachable from the
// grammar is an order comparison of a valuation against a mentioned exponent,
// so exponents of relevant primes may be confined to {0,...,E,inf}. Primes
// outside the relevant set face only uniform constraints (leaf defaults),
// covered by the default-0 and default-inf completions; the one coupling
// leaf, specz, additionally allows a single zero exponent at a prime that
// may lie outside the relevant set, covered by the third completion.
std::optional<SupernaturalNumber> trace_nonempty_witness(
    const Int& n, const PatchExpr& S, const std::vector<Int>& excluded) {
  if (n < 1) throw DomainError("base must be >= 1");
  for (const Int& m : excluded) {
    if (m < 1 || m % n != 0)
      throw DomainError("excluded generator " + m.str() +
                        " is not a multiple of the base " + n.str());
  }

  RelevantData rel = relevant_data(n, S, excluded);
  std::vector<Int> primes(rel.primes.begin(), rel.primes.end());
  std::vector<ExtExp> domain;
  for (Int e = 0; e <= rel.max_exp; ++e) domain.push_back(ExtExp(e));
  domain.push_back(ExtExp::inf());

  std::uint64_t count = 3;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (count > kCandidateBudget / domain.size())
      throw BudgetError("witness search exceeds the candidate budget");
    count *= domain.size();
  }

  Int fresh = 2;
  while (rel.primes.count(fresh)) {
    do {
      ++fresh;
    } while (!is_prime(fresh));
  }

  const SupernaturalNumber base = SupernaturalNumber::from_natural(n);
  std::vector<std::size_t> idx(primes.size(), 0);
  while (true) {
    for (int completion = 0; completion < 3; ++completion) {
      std::map<Int, ExtExp> exc;
      for (std::size_t i = 0; i < primes.size(); ++i)
        exc.emplace(primes[i], domain[idx[i]]);
      ExtExp def = completion == 0 ? ExtExp(0) : ExtExp::inf();
      if (completion == 2) exc.emplace(fresh, ExtExp(0));
      SupernaturalNumber candidate =
          SupernaturalNumber::from_exponents(std::move(exc), def);
      if (!divides(base, candidate)) continue;
      bool blocked = false;
      for (const Int& m : excluded) {
        if (divides(m, candidate)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (member(candidate, S)) return candidate;
    }
    // Odometer, first prime most significant.
    std::size_t i = primes.size();
    while (i > 0) {
      --i;
      if (++idx[i] < domain.size()) break;
      idx[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (primes.empty()) return std::nullopt;
  }
}

}  // namespace bigcell
