#ifndef BIGCELL_SPECTRAL_HPP
#define BIGCELL_SPECTRAL_HPP

#include "bigcell/supernat.hpp"

#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace bigcell {

/// Finite grammar for patches of the spectral space of supernatural numbers.
/// Every expression denotes a patch; membership is decidable.
class PatchExpr {
 public:
  struct FgOpen {
    std::vector<Int> generators;
  };
  struct DivisorClosure {
    SupernaturalNumber bound;
  };
  struct MultiplesOf {
    SupernaturalNumber base;
  };
  struct NotAbove {
    Int n;
  };
  struct PowerSetPrimes {};
  struct SpecZ {};
  struct Full {};
  struct Empty {};
  struct Union {
    std::vector<PatchExpr> children;
  };
  struct Intersection {
    std::vector<PatchExpr> children;
  };

  using Node = std::variant<FgOpen, DivisorClosure, MultiplesOf, NotAbove,
                            PowerSetPrimes, SpecZ, Full, Empty, Union,
                            Intersection>;

  PatchExpr() : node_(std::make_shared<Node>(Full{})) {}
  explicit PatchExpr(Node n) : node_(std::make_shared<Node>(std::move(n))) {}

  static PatchExpr fg_open(std::vector<Int> gens);
  static PatchExpr divisor_closure(SupernaturalNumber s);
  static PatchExpr multiples_of(SupernaturalNumber s);
  static PatchExpr not_above(Int n);
  static PatchExpr power_set_primes() { return PatchExpr(Node(PowerSetPrimes{})); }
  static PatchExpr spec_z() { return PatchExpr(Node(SpecZ{})); }
  static PatchExpr full() { return PatchExpr(Node(Full{})); }
  static PatchExpr empty() { return PatchExpr(Node(Empty{})); }
  static PatchExpr union_of(std::vector<PatchExpr> children);
  static PatchExpr intersection_of(std::vector<PatchExpr> children);

  const Node& node() const { return *node_; }

  static PatchExpr parse(const std::string& text);
  std::string str() const;

 private:
  std::shared_ptr<Node> node_;  // immutable; cheap value copies
};

/// Decides s ∈ S.
bool member(const SupernaturalNumber& s, const PatchExpr& S);

/// Basic open of the pcfb topology: (n) ∩ closure{s}, with n | s.
struct PcfbBasic {
  Int n;
  SupernaturalNumber s;

  PcfbBasic(Int n_, SupernaturalNumber s_);
  bool contains(const SupernaturalNumber& x) const;
};

/// Intersection of two pcfb basics; nullopt when empty.
std::optional<PcfbBasic> basic_intersect(const PcfbBasic& a,
                                         const PcfbBasic& b);

/// A sequence of naturals: explicit prefix plus an optional geometric tail
/// b*m^j (j >= 0). Prefix-only sequences repeat their last element.
struct SequenceSpec {
  std::vector<Int> prefix;
  struct Tail {
    Int base;
    Int ratio;  // >= 2
  };
  std::optional<Tail> tail;
};

/// The pcfb limit of the sequence (per-prime supremum), verified against
/// both convergence conditions; throws NonConvergentError otherwise.
SupernaturalNumber pcfb_limit(const SequenceSpec& seq);

/// Prefix of the canonical cofinal chain for s: n_j is the product over the
/// first j support primes p_i (ascending) of p_i^min(v_{p_i}(s), j).
std::vector<Int> cofinal_chain(const SupernaturalNumber& s, std::size_t k);

/// Decides whether { s : n | s, s ∈ S, m ∤ s for all m in excluded } is
/// nonempty, returning a small-model witness when it is.
/// Preconditions: n | m for every m in excluded.
std::optional<SupernaturalNumber> trace_nonempty_witness(
    const Int& n, const PatchExpr& S, const std::vector<Int>& excluded);

/// Primes and maximal finite exponent mentioned by a query; the small-model
/// analysis of trace_nonempty_witness ranges over exactly these.
struct RelevantData {
  std::set<Int> primes;
  Int max_exp = 0;
};
RelevantData relevant_data(const Int& n, const PatchExpr& S,
                           const std::vector<Int>& excluded);

}  // namespace bigcell

#endif  // BIGCELL_SPECTRAL_HPP
