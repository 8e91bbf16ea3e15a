#include "bigcell/supernat.hpp"

#include <cctype>
#include <sstream>

namespace bigcell {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<Int, Int>> factorize(Int n) {
  if (n < 1) throw DomainError("factorize: argument must be positive");
  std::vector<std::pair<Int, Int>> out;
  for (Int p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p != 0) continue;
    Int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int nth_prime(std::size_t i) {
  Int p = 1;
  for (std::size_t k = 0; k <= i; ++k) {
    do {
      ++p;
    } while (!is_prime(p));
  }
  return p;
}

std::size_t prime_index(const Int& p) {
  if (!is_prime(p)) throw DomainError("prime_index: not a prime: " + p.str());
  std::size_t i = 0;
  for (Int q = 2; q < p; ++q) {
    if (is_prime(q)) ++i;
  }
  return i;
}

SupernaturalNumber SupernaturalNumber::from_natural(const Int& n) {
  if (n < 1) throw DomainError("natural number must be >= 1");
  std::map<Int, ExtExp> exc;
  for (const auto& [p, e] : factorize(n)) exc.emplace(p, ExtExp(e));
  return from_exponents(std::move(exc), ExtExp(0));
}

SupernaturalNumber SupernaturalNumber::from_exponents(
    std::map<Int, ExtExp> exceptions, ExtExp default_exp) {
  if (!default_exp.is_zero() && !default_exp.is_inf())
    throw UnrepresentableError("default exponent must be 0 or inf");
  SupernaturalNumber s;
  s.default_ = default_exp;
  for (auto& [p, e] : exceptions) {
    if (!is_prime(p))
      throw DomainError("exponent key is not a prime: " + p.str());
    if (e != default_exp) s.exceptions_.emplace(p, e);
  }
  return s;
}

SupernaturalNumber SupernaturalNumber::maximal() {
  return from_exponents({}, ExtExp::inf());
}

SupernaturalNumber SupernaturalNumber::coprime_tower(const Int& p) {
  return from_exponents({{p, ExtExp(0)}}, ExtExp::inf());
}

ExtExp SupernaturalNumber::valuation(const Int& p) const {
  if (!is_prime(p)) throw DomainError("valuation: not a prime: " + p.str());
  auto it = exceptions_.find(p);
  return it == exceptions_.end() ? default_ : it->second;
}

bool SupernaturalNumber::is_natural() const {
  if (!default_.is_zero()) return false;
  for (const auto& [p, e] : exceptions_)
    if (e.is_inf()) return false;
  return true;
}

Int SupernaturalNumber::to_natural() const {
  if (!is_natural()) throw DomainError("not a natural number: " + str());
  Int n = 1;
  for (const auto& [p, e] : exceptions_) {
    for (Int k = 0; k < e.finite_value(); ++k) n *= p;
  }
  return n;
}

bool SupernaturalNumber::is_completely_infinite() const {
  for (const auto& [p, e] : exceptions_)
    if (!e.is_zero() && !e.is_inf()) return false;
  return true;
}

bool divides(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  if (!(a.default_exponent() <= b.default_exponent())) return false;
  for (const auto& [p, e] : a.exceptions())
    if (!(e <= b.valuation(p))) return false;
  for (const auto& [p, e] : b.exceptions())
    if (!(a.valuation(p) <= e)) return false;
  return true;
}

bool divides(const Int& n, const SupernaturalNumber& b) {
  return divides(SupernaturalNumber::from_natural(n), b);
}

namespace {

SupernaturalNumber merge(const SupernaturalNumber& a,
                         const SupernaturalNumber& b,
                         const ExtExp& (*pick)(const ExtExp&, const ExtExp&)) {
  std::map<Int, ExtExp> exc;
  for (const auto& [p, e] : a.exceptions()) exc[p] = pick(e, b.valuation(p));
  for (const auto& [p, e] : b.exceptions()) exc[p] = pick(a.valuation(p), e);
  return SupernaturalNumber::from_exponents(
      std::move(exc), pick(a.default_exponent(), b.default_exponent()));
}

}  // namespace

SupernaturalNumber gcd(const SupernaturalNumber& a,
                       const SupernaturalNumber& b) {
  return merge(a, b, ExtExp::min);
}

SupernaturalNumber lcm(const SupernaturalNumber& a,
                       const SupernaturalNumber& b) {
  return merge(a, b, ExtExp::max);
}

Int parse_natural(const std::string& text) {
  if (text.empty()) throw ParseError("empty natural number literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("invalid natural number literal: '" + text + "'");
  }
  Int n(text);
  if (n < 1) throw ParseError("natural number must be >= 1: '" + text + "'");
  return n;
}

// Literal grammar: FACTORS[;default=0|inf], FACTORS = p1^e1*p2^e2*...
// (a bare prime means exponent 1, "1" denotes the unit, empty FACTORS with
// ";default=inf" is the maximal supernatural).
SupernaturalNumber SupernaturalNumber::parse(const std::string& text) {
  std::string factors = text;
  ExtExp def(0);
  bool have_default = false;
  if (auto semi = text.find(';'); semi != std::string::npos) {
    have_default = true;
    factors = text.substr(0, semi);
    std::string rest = text.substr(semi + 1);
    if (rest == "default=0")
      def = ExtExp(0);
    else if (rest == "default=inf")
      def = ExtExp::inf();
    else
      throw ParseError("bad default clause at position " +
                       std::to_string(semi + 1) +
                       ": expected 'default=0' or 'default=inf'");
  }
  std::map<Int, ExtExp> exc;
  if (factors.empty() && !have_default)
    throw ParseError("empty supernatural literal");
  if (factors.empty() || factors == "1") {
    return from_exponents(std::move(exc), def);
  }
  std::size_t pos = 0;
  while (pos < factors.size()) {
    std::size_t start = pos;
    while (pos < factors.size() &&
           std::isdigit(static_cast<unsigned char>(factors[pos])))
      ++pos;
    if (pos == start)
      throw ParseError("expected prime at position " + std::to_string(start));
    Int p(factors.substr(start, pos - start));
    if (!is_prime(p))
      throw ParseError("factor base is not prime at position " +
                       std::to_string(start) + ": " + p.str());
    ExtExp e(1);
    if (pos < factors.size() && factors[pos] == '^') {
      ++pos;
      std::size_t estart = pos;
      if (factors.compare(pos, 3, "inf") == 0) {
        e = ExtExp::inf();
        pos += 3;
      } else {
        while (pos < factors.size() &&
               std::isdigit(static_cast<unsigned char>(factors[pos])))
          ++pos;
        if (pos == estart)
          throw ParseError("expected exponent at position " +
                           std::to_string(estart));
        e = ExtExp(Int(factors.substr(estart, pos - estart)));
      }
    }
    if (exc.count(p))
      throw ParseError("duplicate prime in literal: " + p.str());
    exc.emplace(p, e);
    if (pos < factors.size()) {
      if (factors[pos] != '*')
        throw ParseError("expected '*' at position " + std::to_string(pos));
      ++pos;
      if (pos == factors.size())
        throw ParseError("trailing '*' at position " + std::to_string(pos));
    }
  }
  return from_exponents(std::move(exc), def);
}

std::string SupernaturalNumber::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, e] : exceptions_) {
    if (!first) out << '*';
    first = false;
    out << p;
    if (e != ExtExp(1)) out << '^' << e.str();
  }
  if (first && default_.is_zero()) out << '1';
  if (default_.is_inf()) out << ";default=inf";
  return out.str();
}

}  // namespace bigcell
