#ifndef BIGCELL_ORACLE_HPP
#define BIGCELL_ORACLE_HPP

#include "bigcell/supernat.hpp"

#include <functional>
#include <vector>

namespace bigcell {

/// Brute-force reference universe: all supernaturals with support in a fixed
/// prime list and exponents in {0,...,E,inf}. The counterweight to every
/// solver decision; not a production decision procedure.
struct BoundedUniverse {
  std::vector<Int> primes;
  Int max_exp;

  BoundedUniverse(std::vector<Int> primes_, Int max_exp_);

  /// Full enumeration, lexicographic in exponent tuples (first prime most
  /// significant, inf ordered last). Throws BudgetError past 10^6 elements.
  std::vector<SupernaturalNumber> enumerate() const;

  /// Naturals in the universe: exponents in {0,...,E}, ascending.
  std::vector<Int> naturals() const;
};

/// Arbitrary decidable membership predicate; admits sets outside the patch
/// grammar (test-only, not serializable).
using PredicateSet = std::function<bool(const SupernaturalNumber&)>;

/// Reference covering judgment: every s in the universe with n | s and
/// s ∈ S is divisible by some generator.
bool naive_cover(const Int& n, const std::vector<Int>& gens,
                 const PredicateSet& S, const BoundedUniverse& U);

}  // namespace bigcell

#endif  // BIGCELL_ORACLE_HPP
