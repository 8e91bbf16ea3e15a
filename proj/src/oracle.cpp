#include "bigcell/oracle.hpp"

#include <algorithm>

namespace bigcell {

BoundedUniverse::BoundedUniverse(std::vector<Int> primes_, Int max_exp_)
    : primes(std::move(primes_)), max_exp(std::move(max_exp_)) {
  for (const Int& p : primes)
    if (!is_prime(p)) throw DomainError("universe base is not prime: " + p.str());
  if (max_exp < 0) throw DomainError("universe exponent bound must be >= 0");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
}

std::vector<SupernaturalNumber> BoundedUniverse::enumerate() const {
  std::size_t domain = max_exp.convert_to<std::size_t>() + 2;
  std::size_t total = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (total > 1'000'000 / domain)
      throw BudgetError("universe enumeration exceeds the size cap");
    total *= domain;
  }
  std::vector<SupernaturalNumber> out;
  out.reserve(total);
  std::vector<std::size_t> idx(primes.size(), 0);
  while (true) {
    std::map<Int, ExtExp> exc;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (idx[i] == domain - 1)
        exc.emplace(primes[i], ExtExp::inf());
      else if (idx[i] > 0)
        exc.emplace(primes[i], ExtExp(Int(idx[i])));
    }
    out.push_back(SupernaturalNumber::from_exponents(std::move(exc), ExtExp(0)));
    std::size_t i = primes.size();
    bool done = primes.empty();
    while (i > 0) {
      --i;
      if (++idx[i] < domain) break;
      idx[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

std::vector<Int> BoundedUniverse::naturals() const {
  std::vector<Int> out{Int(1)};
  for (const Int& p : primes) {
    std::vector<Int> next;
    for (const Int& n : out) {
      Int power = 1;
      for (Int e = 0; e <= max_exp; ++e) {
        next.push_back(n * power);
        power *= p;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool naive_cover(const Int& n, const std::vector<Int>& gens,
                 const PredicateSet& S, const BoundedUniverse& U) {
  for (const SupernaturalNumber& s : U.enumerate()) {
    if (!divides(n, s) || !S(s)) continue;
    bool covered = std::any_of(gens.begin(), gens.end(),
                               [&](const Int& g) { return divides(g, s); });
    if (!covered) return false;
  }
  return true;
}

}  // namespace bigcell
