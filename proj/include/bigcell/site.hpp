#ifndef BIGCELL_SITE_HPP
#define BIGCELL_SITE_HPP

#include "bigcell/spectral.hpp"

#include <variant>

namespace bigcell {

/// A finitely generated sieve on an object n of the big cell, identified
/// with the open ideal spanned by its generators. All generators are
/// multiples of the base; the empty generator list is the empty sieve.
class Sieve {
 public:
  Sieve(Int base, std::vector<Int> generators);

  const Int& base() const { return base_; }
  const std::vector<Int>& generators() const { return generators_; }

  /// Maximal sieve {n} on n.
  static Sieve maximal(Int n) {
    Int copy = n;
    return Sieve(std::move(n), {std::move(copy)});
  }

  bool contains(const SupernaturalNumber& s) const;

  static Sieve parse(const std::string& text);  // "base:n gens:m1,m2,..."
  std::string str() const;

 private:
  Int base_;
  std::vector<Int> generators_;
};

/// Pullback of L along the morphism m -> base(L): the sieve (m) ∩ L.
Sieve pullback(const Sieve& L, const Int& m);

/// K_S covering judgment: L covers iff L contains (base) ∩ S.
bool is_cover(const Sieve& L, const PatchExpr& S);

/// Irredundant covering subfamily, by greedy removal in descending index
/// order. Precondition: is_cover(L, S).
std::vector<Int> finite_subcover(const Sieve& L, const PatchExpr& S);

/// Either s ∈ S, or a constructive refutation of s being a topos-theoretic
/// point: a base n | s together with a finite family generating a
/// K_S-covering sieve on n none of whose members divides s.
struct PointCertificate {
  struct Member {};
  struct NonPoint {
    Int base;
    std::vector<Int> family;
  };
  std::variant<Member, NonPoint> value;

  bool is_member() const { return value.index() == 0; }
  const NonPoint& non_point() const { return std::get<NonPoint>(value); }
};

PointCertificate point_certificate(const SupernaturalNumber& s,
                                   const PatchExpr& S);

/// True iff every element of S is completely infinite.
bool is_trivializing_zariski(const PatchExpr& S);

/// The supernatural number classifying a tower n_1 | n_2 | ... (finite
/// prefix, optional geometric tail): the per-prime supremum, which the full
/// chain pcfb-converges to.
SupernaturalNumber tower_supernatural(
    const std::vector<Int>& chain,
    const std::optional<SequenceSpec::Tail>& tail = std::nullopt);

}  // namespace bigcell

#endif  // BIGCELL_SITE_HPP
