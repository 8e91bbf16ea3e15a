#include "bigcell/poset.hpp"

#include <algorithm>
#include <sstream>

namespace bigcell {

FinitePoset::FinitePoset(
    std::vector<std::string> elements,
    std::set<std::pair<std::string, std::string>> relation)
    : elements_(std::move(elements)), relation_(std::move(relation)) {
  std::set<std::string> seen(elements_.begin(), elements_.end());
  if (seen.size() != elements_.size())
    throw DomainError("poset labels must be distinct");
  for (const auto& [x, y] : relation_) {
    if (!seen.count(x) || !seen.count(y))
      throw DomainError("relation mentions unknown label");
  }
  for (const auto& x : elements_) relation_.emplace(x, x);
  // Transitive closure (Warshall).
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [x, y] : std::set(relation_)) {
      for (const auto& z : elements_) {
        if (relation_.count({y, z}) && !relation_.count({x, z})) {
          relation_.emplace(x, z);
          changed = true;
        }
      }
    }
  }
  for (const auto& [x, y] : relation_) {
    if (x != y && relation_.count({y, x}))
      throw DomainError("relation is not antisymmetric: " + x + " and " + y);
  }
}

bool FinitePoset::leq(const std::string& x, const std::string& y) const {
  return relation_.count({x, y}) > 0;
}

FinitePoset FinitePoset::parse(const std::string& text) {
  std::vector<std::string> elements;
  std::set<std::pair<std::string, std::string>> relation;
  std::istringstream in(text);
  std::string line;
  bool have_elements = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "elements:") {
      std::string label;
      while (ls >> label) elements.push_back(label);
      have_elements = true;
    } else if (head == "cover:") {
      std::string lo, hi;
      if (!(ls >> lo >> hi))
        throw ParseError("poset: 'cover:' line needs two labels");
      relation.emplace(lo, hi);
    } else {
      throw ParseError("poset: unexpected line starting with '" + head + "'");
    }
  }
  if (!have_elements) throw ParseError("poset: missing 'elements:' line");
  return FinitePoset(std::move(elements), std::move(relation));
}

namespace {

using Factored = std::map<Int, Int>;  // prime -> positive exponent

Int assemble(const Factored& f) {
  Int n = 1;
  for (const auto& [p, e] : f)
    for (Int k = 0; k < e; ++k) n *= p;
  return n;
}

Factored prime_shift(const Factored& f) {
  Factored out;
  for (const auto& [p, e] : f) out.emplace(nth_prime(prime_index(p) + 1), e);
  return out;
}

std::map<std::string, Factored> embed_subset(const FinitePoset& P,
                                             std::vector<std::string> subset) {
  if (subset.empty()) return {};
  std::sort(subset.begin(), subset.end());
  std::string x;
  for (const auto& cand : subset) {
    bool minimal = std::none_of(
        subset.begin(), subset.end(), [&](const std::string& z) {
          return z != cand && P.leq(z, cand);
        });
    if (minimal) {
      x = cand;
      break;
    }
  }
  std::vector<std::string> rest;
  for (const auto& y : subset)
    if (y != x) rest.push_back(y);

  // Embed the remainder, move it to the odd numbers, then double everything
  // above x. An odd h(r) divides 2*h(u) iff it divides h(u), so the shifted
  // sub-embedding keeps both directions of the invariant across the split.
  std::map<std::string, Factored> out;
  out.emplace(x, Factored{{Int(2), Int(1)}});
  for (auto& [label, img] : embed_subset(P, std::move(rest))) {
    Factored shifted = prime_shift(img);
    if (P.leq(x, label)) shifted[2] += 1;
    out.emplace(label, std::move(shifted));
  }
  return out;
}

}  // namespace

DivEmbedding embed_poset(const FinitePoset& P) {
  DivEmbedding out;
  for (auto& [label, img] : embed_subset(P, P.elements()))
    out.map.emplace(label, assemble(img));
  return out;
}

bool verify_embedding(const FinitePoset& P, const DivEmbedding& E) {
  for (const auto& x : P.elements())
    if (!E.map.count(x)) throw DomainError("embedding undefined on " + x);
  for (const auto& x : P.elements()) {
    for (const auto& y : P.elements()) {
      const Int& fx = E.map.at(x);
      const Int& fy = E.map.at(y);
      if (x != y && fx == fy) return false;
      if (P.leq(x, y) != (fy % fx == 0)) return false;
    }
  }
  return true;
}

}  // namespace bigcell
