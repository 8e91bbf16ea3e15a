#include "bigcell/site.hpp"

#include <algorithm>
#include <sstream>

namespace bigcell {

Sieve::Sieve(Int base, std::vector<Int> generators)
    : base_(std::move(base)), generators_(std::move(generators)) {
  if (base_ < 1) throw DomainError("sieve base must be >= 1");
  for (const Int& g : generators_) {
    if (g < 1 || g % base_ != 0)
      throw DomainError("sieve generator " + g.str() +
                        " is not a multiple of the base " + base_.str());
  }
}

bool Sieve::contains(const SupernaturalNumber& s) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Int& g) { return divides(g, s); });
}

Sieve Sieve::parse(const std::string& text) {
  std::istringstream in(text);
  std::string base_part, gens_part;
  in >> base_part >> gens_part;
  if (base_part.rfind("base:", 0) != 0)
    throw ParseError("sieve: expected 'base:n' at position 0");
  Int base = parse_natural(base_part.substr(5));
  std::vector<Int> gens;
  if (!gens_part.empty()) {
    if (gens_part.rfind("gens:", 0) != 0)
      throw ParseError("sieve: expected 'gens:m1,m2,...'");
    std::string list = gens_part.substr(5);
    std::size_t pos = 0;
    while (pos < list.size()) {
      std::size_t comma = list.find(',', pos);
      std::size_t end = comma == std::string::npos ? list.size() : comma;
      gens.push_back(parse_natural(list.substr(pos, end - pos)));
      pos = end + (comma == std::string::npos ? 0 : 1);
      if (pos == list.size() && comma != std::string::npos)
        throw ParseError("sieve: trailing ',' in generator list");
      if (comma == std::string::npos) break;
    }
  }
  return Sieve(std::move(base), std::move(gens));
}

std::string Sieve::str() const {
  std::ostringstream out;
  out << "base:" << base_ << " gens:";
  for (std::size_t i = 0; i < generators_.size(); ++i)
    out << (i ? "," : "") << generators_[i];
  return out.str();
}

Sieve pullback(const Sieve& L, const Int& m) {
  if (m < 1 || m % L.base() != 0)
    throw DomainError("pullback target " + m.str() +
                      " is not a multiple of the base " + L.base().str());
  std::vector<Int> gens;
  for (const Int& g : L.generators()) {
    Int lifted = boost::multiprecision::lcm(m, g);
    if (std::find(gens.begin(), gens.end(), lifted) == gens.end())
      gens.push_back(std::move(lifted));
  }
  return Sieve(m, std::move(gens));
}

bool is_cover(const Sieve& L, const PatchExpr& S) {
  return !trace_nonempty_witness(L.base(), S, L.generators()).has_value();
}

std::vector<Int> finite_subcover(const Sieve& L, const PatchExpr& S) {
  if (!is_cover(L, S))
    throw DomainError("finite_subcover precondition violated: sieve " +
                      L.str() + " does not cover");
  std::vector<Int> kept = L.generators();
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<Int> without = kept;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_cover(Sieve(L.base(), without), S)) kept = std::move(without);
  }
  return kept;
}

namespace {

constexpr std::size_t kFamilyIterationCap = 1000;

// Divisors of s composed of the given primes with exponent at most
// min(v_p(s), cap), in increasing numeric order.
std::vector<Int> bounded_divisors(const SupernaturalNumber& s,
                                  const std::vector<Int>& primes,
                                  const Int& cap) {
  std::vector<Int> out{Int(1)};
  for (const Int& p : primes) {
    ExtExp limit = ExtExp::min(s.valuation(p), ExtExp(cap));
    std::vector<Int> next;
    for (const Int& d : out) {
      Int power = 1;
      for (Int e = 0; e <= limit.finite_value(); ++e) {
        next.push_back(d * power);
        power *= p;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PointCertificate point_certificate(const SupernaturalNumber& s,
                                   const PatchExpr& S) {
  if (member(s, S)) return PointCertificate{PointCertificate::Member{}};

  RelevantData rel = relevant_data(1, S, {});
  for (const auto& [p, e] : s.exceptions()) {
    rel.primes.insert(p);
    if (!e.is_inf()) rel.max_exp = std::max(rel.max_exp, e.finite_value());
  }
  std::vector<Int> primes(rel.primes.begin(), rel.primes.end());

  // A refutation base: n | s with (n) ∩ closure{s} ∩ S empty. pcfb-closedness
  // of S guarantees one exists among small divisors of s.
  PatchExpr trace = PatchExpr::intersection_of(
      {S, PatchExpr::divisor_closure(s)});
  std::optional<Int> base;
  for (const Int& d : bounded_divisors(s, primes, rel.max_exp + 1)) {
    if (!trace_nonempty_witness(d, trace, {}).has_value()) {
      base = d;
      break;
    }
  }
  if (!base)
    throw Error(
        "internal defect: no refutation base found within the small model "
        "for " + s.str());

  // Grow a finite covering family avoiding s: each uncovered witness
  // s' ∈ (n) ∩ S contributes lcm(n, d) for the least divisor d of s' that
  // does not divide s.
  std::vector<Int> family;
  for (std::size_t iter = 0; iter < kFamilyIterationCap; ++iter) {
    auto witness = trace_nonempty_witness(*base, S, family);
    if (!witness) {
      return PointCertificate{
          PointCertificate::NonPoint{*base, std::move(family)}};
    }
    std::optional<Int> d;
    for (Int c = 2;; ++c) {
      if (divides(c, *witness) && !divides(c, s)) {
        d = c;
        break;
      }
    }
    family.push_back(boost::multiprecision::lcm(*base, *d));
  }
  throw Error("internal defect: covering family construction hit the "
              "iteration cap for " + s.str());
}

bool is_trivializing_zariski(const PatchExpr& S) {
  // S is trivializing iff no element has a finite nonzero exponent anywhere.
  // By the small-model argument it is enough to probe relevant primes plus
  // one fresh prime, at exponents 1..E+1: the probe p^e | s, p^(e+1) ∤ s
  // pins the valuation at exactly e.
  RelevantData rel = relevant_data(1, S, {});
  std::vector<Int> probes(rel.primes.begin(), rel.primes.end());
  Int fresh = 2;
  while (rel.primes.count(fresh)) {
    do {
      ++fresh;
    } while (!is_prime(fresh));
  }
  probes.push_back(fresh);
  for (const Int& p : probes) {
    Int pe = 1;
    for (Int e = 1; e <= rel.max_exp + 1; ++e) {
      pe *= p;
      if (trace_nonempty_witness(pe, S, {pe * p}).has_value()) return false;
    }
  }
  return true;
}

SupernaturalNumber tower_supernatural(
    const std::vector<Int>& chain,
    const std::optional<SequenceSpec::Tail>& tail) {
  if (chain.empty()) throw DomainError("tower chain must be nonempty");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i] < 1 || chain[i + 1] % chain[i] != 0)
      throw DomainError("not a divisibility chain: " + chain[i].str() +
                        " does not divide " + chain[i + 1].str());
  }
  if (chain.back() < 1) throw DomainError("chain entries must be >= 1");
  if (tail && tail->base % chain.back() != 0)
    throw DomainError("tail base " + tail->base.str() +
                      " does not extend the chain");
  return pcfb_limit(SequenceSpec{chain, tail});
}

}  // namespace bigcell
