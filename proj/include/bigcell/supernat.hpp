#ifndef BIGCELL_SUPERNAT_HPP
#define BIGCELL_SUPERNAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bigcell {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Base class for every recoverable error the library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (literals, patch expressions, poset files, ...).
struct ParseError : Error {
  using Error::Error;
};

/// Structurally valid input that violates an operation's precondition.
struct DomainError : Error {
  using Error::Error;
};

/// A result exists mathematically but has no canonical representation here
/// (e.g. a supremum whose default exponent would be neither 0 nor inf).
struct UnrepresentableError : DomainError {
  using DomainError::DomainError;
};

/// A sequence fails one of the two pcfb convergence conditions.
struct NonConvergentError : DomainError {
  using DomainError::DomainError;
};

/// The solver's search space exceeded the hard budget.
struct BudgetError : DomainError {
  using DomainError::DomainError;
};

/// Exponent in N ∪ {inf}; inf is a distinguished symbol, not a sentinel.
class ExtExp {
 public:
  ExtExp() = default;
  ExtExp(Int v) : value_(std::move(v)) {
    if (value_ < 0) throw DomainError("exponent must be nonnegative");
  }
  ExtExp(long v) : ExtExp(Int(v)) {}
  ExtExp(int v) : ExtExp(Int(v)) {}
  static ExtExp inf() {
    ExtExp e;
    e.infinite_ = true;
    return e;
  }

  bool is_inf() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }
  const Int& finite_value() const {
    if (infinite_) throw DomainError("exponent is infinite");
    return value_;
  }

  friend bool operator==(const ExtExp& a, const ExtExp& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const ExtExp& a, const ExtExp& b) { return !(a == b); }
  friend bool operator<=(const ExtExp& a, const ExtExp& b) {
    if (b.infinite_) return true;
    if (a.infinite_) return false;
    return a.value_ <= b.value_;
  }
  friend bool operator<(const ExtExp& a, const ExtExp& b) {
    return a <= b && a != b;
  }

  static const ExtExp& min(const ExtExp& a, const ExtExp& b) {
    return a <= b ? a : b;
  }
  static const ExtExp& max(const ExtExp& a, const ExtExp& b) {
    return a <= b ? b : a;
  }

  std::string str() const {
    return infinite_ ? "inf" : value_.str();
  }

 private:
  bool infinite_ = false;
  Int value_ = 0;
};

bool is_prime(const Int& n);

/// Prime factorization by trial division; inputs are desk scale by contract.
std::vector<std::pair<Int, Int>> factorize(Int n);

/// The i-th prime, 0-indexed (prime(0) == 2).
Int nth_prime(std::size_t i);

/// Index of a prime p in the ascending enumeration of primes.
std::size_t prime_index(const Int& p);

/// A supernatural number: an exponent map primes -> N ∪ {inf} carried by a
/// finite exception list over a default that is 0 or inf. Canonical form
/// (no exception equals the default) is maintained by construction, so
/// structural equality coincides with equality of the induced function.
/// Values are immutable after construction.
class SupernaturalNumber {
 public:
  /// The unit (all exponents 0).
  SupernaturalNumber() = default;

  static SupernaturalNumber from_natural(const Int& n);
  static SupernaturalNumber from_exponents(std::map<Int, ExtExp> exceptions,
                                           ExtExp default_exp);
  static SupernaturalNumber maximal();  // all exponents inf
  /// s_p: exponent 0 at p, inf everywhere else.
  static SupernaturalNumber coprime_tower(const Int& p);

  static SupernaturalNumber parse(const std::string& text);
  std::string str() const;

  ExtExp valuation(const Int& p) const;
  const ExtExp& default_exponent() const { return default_; }
  const std::map<Int, ExtExp>& exceptions() const { return exceptions_; }

  bool is_natural() const;
  Int to_natural() const;  // throws DomainError unless is_natural()
  bool is_completely_infinite() const;
  bool is_unit() const { return default_.is_zero() && exceptions_.empty(); }

  friend bool operator==(const SupernaturalNumber& a,
                         const SupernaturalNumber& b) {
    return a.default_ == b.default_ && a.exceptions_ == b.exceptions_;
  }
  friend bool operator!=(const SupernaturalNumber& a,
                         const SupernaturalNumber& b) {
    return !(a == b);
  }

 private:
  ExtExp default_;  // 0 or inf
  std::map<Int, ExtExp> exceptions_;
};

bool divides(const SupernaturalNumber& a, const SupernaturalNumber& b);
bool divides(const Int& n, const SupernaturalNumber& b);
SupernaturalNumber gcd(const SupernaturalNumber& a,
                       const SupernaturalNumber& b);
SupernaturalNumber lcm(const SupernaturalNumber& a,
                       const SupernaturalNumber& b);

/// Parses a strictly positive decimal natural number.
Int parse_natural(const std::string& text);

}  // namespace bigcell

#endif  // BIGCELL_SUPERNAT_HPP
