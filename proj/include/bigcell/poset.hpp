#ifndef BIGCELL_POSET_HPP
#define BIGCELL_POSET_HPP

#include "bigcell/supernat.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace bigcell {

/// A finite poset over string labels. The relation is stored reflexively and
/// transitively closed; construction validates antisymmetry.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::vector<std::string> elements,
              std::set<std::pair<std::string, std::string>> relation);

  const std::vector<std::string>& elements() const { return elements_; }
  bool leq(const std::string& x, const std::string& y) const;

  /// Text document: "elements: a b c" followed by "cover: a b" lines; the
  /// transitive closure is computed on load.
  static FinitePoset parse(const std::string& text);

 private:
  std::vector<std::string> elements_;
  std::set<std::pair<std::string, std::string>> relation_;
};

/// An order-embedding of a finite poset into the divisibility order.
struct DivEmbedding {
  std::map<std::string, Int> map;
};

/// Deterministic recursive embedding: the least-labeled minimal element goes
/// to 2; the remaining elements are embedded recursively, shifted to odd
/// numbers by the ascending prime shift, and the images of elements above
/// the chosen minimum are doubled.
DivEmbedding embed_poset(const FinitePoset& P);

/// Checks the two-sided invariant x <= y ⟺ E(x) | E(y) and injectivity.
bool verify_embedding(const FinitePoset& P, const DivEmbedding& E);

}  // namespace bigcell

#endif  // BIGCELL_POSET_HPP
