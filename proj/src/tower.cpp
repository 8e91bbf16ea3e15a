#include "bigcell/tower.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace bigcell {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rat& x) { return x == 0; });
}

Rat RatMatrix::trace() const {
  if (!is_square()) throw DomainError("trace of a non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_)
    throw DomainError("matrix product shape mismatch");
  RatMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += a * other.at(k, j);
    }
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("matrix sum shape mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + other.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  return *this + other.scaled(Rat(-1));
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
  return out;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (!is_square()) throw DomainError("inverse of a non-square matrix");
  std::size_t n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a.at(col, j), a.at(pivot, j));
      std::swap(inv.at(col, j), inv.at(pivot, j));
    }
    Rat scale = Rat(1) / a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      Rat f = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::vector<std::size_t> RatMatrix::pivot_columns() const {
  RatMatrix a = *this;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && a.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap(a.at(row, j), a.at(pivot, j));
    Rat scale = Rat(1) / a.at(row, col);
    for (std::size_t j = 0; j < cols_; ++j) a.at(row, j) *= scale;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      Rat f = a.at(r, col);
      for (std::size_t j = 0; j < cols_; ++j) a.at(r, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RatMatrix RatMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<Rat> entries;
  std::string tok;
  while (in >> tok) {
    try {
      entries.emplace_back(tok);
    } catch (const std::exception&) {
      throw ParseError("matrix: bad rational '" + tok + "'");
    }
  }
  std::size_t n = 0;
  while (n * n < entries.size()) ++n;
  if (n * n != entries.size() || entries.empty())
    throw ParseError("matrix: element count must be a positive perfect square");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < entries.size(); ++i)
    out.data_[i] = std::move(entries[i]);
  return out;
}

std::string RatMatrix::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

SlotLayout::SlotLayout(const Int& n) : n_(n) {
  if (n < 1) throw DomainError("stage must be a positive natural");
  for (const auto& [p, e] : factorize(n))
    for (Int k = 0; k < e; ++k) slots_.push_back(p);
}

std::size_t SlotLayout::dimension() const {
  if (n_ > 1'000'000) throw BudgetError("stage too large to realize densely");
  return n_.convert_to<std::size_t>();
}

std::vector<std::size_t> slot_assignment(const SlotLayout& from,
                                         const SlotLayout& to) {
  if (to.n() % from.n() != 0)
    throw DomainError("no slot assignment: " + from.n().str() +
                      " does not divide " + to.n().str());
  std::vector<std::size_t> out;
  std::map<Int, std::size_t> seen;  // occurrences of each prime consumed
  for (const Int& p : from.slots()) {
    std::size_t occurrence = seen[p]++;
    std::size_t hits = 0;
    for (std::size_t j = 0; j < to.slots().size(); ++j) {
      if (to.slots()[j] == p && hits++ == occurrence) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> slot_radices(const SlotLayout& layout) {
  std::vector<std::size_t> out;
  for (const Int& p : layout.slots())
    out.push_back(p.convert_to<std::size_t>());
  return out;
}

// Mixed-radix digits of an index, leftmost slot most significant.
std::vector<std::size_t> index_digits(std::size_t index,
                                      const std::vector<std::size_t>& radix) {
  std::vector<std::size_t> out(radix.size());
  for (std::size_t i = radix.size(); i > 0; --i) {
    out[i - 1] = index % radix[i - 1];
    index /= radix[i - 1];
  }
  return out;
}

std::size_t digits_index(const std::vector<std::size_t>& digits,
                         const std::vector<std::size_t>& radix) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < radix.size(); ++i)
    out = out * radix[i] + digits[i];
  return out;
}

}  // namespace

TowerMatrix::TowerMatrix(SlotLayout l, RatMatrix e)
    : layout(std::move(l)), entries(std::move(e)) {
  if (entries.rows() != layout.dimension() ||
      entries.cols() != layout.dimension())
    throw DomainError("matrix shape does not match its stage");
}

TowerMatrix TowerMatrix::matrix_unit(const Int& n, std::size_t i,
                                     std::size_t j) {
  SlotLayout layout(n);
  std::size_t d = layout.dimension();
  if (i >= d || j >= d) throw DomainError("matrix unit index out of range");
  RatMatrix e(d, d);
  e.at(i, j) = 1;
  return TowerMatrix(std::move(layout), std::move(e));
}

TowerMatrix TowerMatrix::identity(const Int& n) {
  SlotLayout layout(n);
  std::size_t d = layout.dimension();
  return TowerMatrix(std::move(layout), RatMatrix::identity(d));
}

TowerMatrix standard_embedding(const TowerMatrix& x, const Int& m) {
  SlotLayout target(m);
  const SlotLayout& source = x.layout;
  std::vector<std::size_t> assigned = slot_assignment(source, target);
  std::vector<bool> is_assigned(target.slots().size(), false);
  for (std::size_t j : assigned) is_assigned[j] = true;

  std::vector<std::size_t> source_radix = slot_radices(source);
  std::vector<std::size_t> target_radix = slot_radices(target);
  std::size_t dim = target.dimension();
  RatMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    std::vector<std::size_t> rd = index_digits(r, target_radix);
    std::vector<std::size_t> rn(assigned.size());
    for (std::size_t i = 0; i < assigned.size(); ++i) rn[i] = rd[assigned[i]];
    std::size_t row_n = digits_index(rn, source_radix);
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<std::size_t> cd = index_digits(c, target_radix);
      bool free_match = true;
      for (std::size_t j = 0; j < cd.size(); ++j) {
        if (!is_assigned[j] && cd[j] != rd[j]) {
          free_match = false;
          break;
        }
      }
      if (!free_match) continue;
      std::vector<std::size_t> cn(assigned.size());
      for (std::size_t i = 0; i < assigned.size(); ++i)
        cn[i] = cd[assigned[i]];
      out.at(r, c) = x.entries.at(row_n, digits_index(cn, source_radix));
    }
  }
  return TowerMatrix(std::move(target), std::move(out));
}

std::vector<std::pair<std::size_t, std::size_t>> embedded_unit_positions(
    const Int& n, const Int& m, std::size_t i, std::size_t j) {
  SlotLayout source(n);
  SlotLayout target(m);
  std::vector<std::size_t> assigned = slot_assignment(source, target);
  std::vector<std::size_t> source_radix = slot_radices(source);
  std::vector<std::size_t> target_radix = slot_radices(target);
  std::size_t dn = source.dimension();
  if (i >= dn || j >= dn) throw DomainError("matrix unit index out of range");
  std::vector<std::size_t> id = index_digits(i, source_radix);
  std::vector<std::size_t> jd = index_digits(j, source_radix);

  std::vector<std::size_t> free_slots;
  std::vector<bool> is_assigned(target_radix.size(), false);
  for (std::size_t s : assigned) is_assigned[s] = true;
  for (std::size_t s = 0; s < target_radix.size(); ++s)
    if (!is_assigned[s]) free_slots.push_back(s);

  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<std::size_t> free_digit(free_slots.size(), 0);
  while (true) {
    std::vector<std::size_t> rd(target_radix.size(), 0);
    std::vector<std::size_t> cd(target_radix.size(), 0);
    for (std::size_t s = 0; s < assigned.size(); ++s) {
      rd[assigned[s]] = id[s];
      cd[assigned[s]] = jd[s];
    }
    for (std::size_t s = 0; s < free_slots.size(); ++s)
      rd[free_slots[s]] = cd[free_slots[s]] = free_digit[s];
    out.emplace_back(digits_index(rd, target_radix),
                     digits_index(cd, target_radix));
    std::size_t s = free_slots.size();
    bool done = free_slots.empty();
    while (s > 0) {
      --s;
      if (++free_digit[s] < target_radix[free_slots[s]]) break;
      free_digit[s] = 0;
      if (s == 0) done = true;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat normalized_trace(const TowerMatrix& x) {
  return x.entries.trace() / Rat(Int(x.layout.dimension()));
}

PglElement::PglElement(SlotLayout stage, RatMatrix matrix)
    : stage_(std::move(stage)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != stage_.dimension() ||
      matrix_.cols() != stage_.dimension())
    throw DomainError("matrix shape does not match its stage");
  if (!matrix_.inverse())
    throw DomainError("projective element must be invertible");
}

RatMatrix PglElement::canonical() const {
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
      if (matrix_.at(r, c) != 0)
        return matrix_.scaled(Rat(1) / matrix_.at(r, c));
    }
  }
  throw Error("invertible matrix with no nonzero entry");
}

bool pgl_equiv_n(const PglElement& g, const PglElement& h, const Int& n) {
  if (!(g.stage() == h.stage()))
    throw DomainError("projective comparison across different stages");
  const Int& m = g.stage().n();
  if (m % n != 0)
    throw DomainError("comparison level " + n.str() +
                      " does not divide the stage " + m.str());
  // g ~_n h iff g^-1 h centralizes the standardly embedded M_n.
  RatMatrix c = *g.matrix().inverse() * h.matrix();
  std::size_t dn = SlotLayout(n).dimension();
  std::size_t dm = g.stage().dimension();
  for (std::size_t i = 0; i < dn; ++i) {
    for (std::size_t j = 0; j < dn; ++j) {
      RatMatrix e(dm, dm);
      for (auto [r, col] : embedded_unit_positions(n, m, i, j))
        e.at(r, col) = 1;
      if (!(c * e == e * c)) return false;
    }
  }
  return true;
}

MatrixUnitEmbedding::MatrixUnitEmbedding(Int n, Int m,
                                         std::vector<RatMatrix> unit_images)
    : n_(std::move(n)), m_(std::move(m)), images_(std::move(unit_images)) {
  if (n_ < 1 || m_ < 1 || m_ % n_ != 0)
    throw DomainError("no unital embedding: " + n_.str() +
                      " does not divide " + m_.str());
  dim_n_ = SlotLayout(n_).dimension();
  std::size_t dm = SlotLayout(m_).dimension();
  if (images_.size() != dim_n_ * dim_n_)
    throw DomainError("expected " + std::to_string(dim_n_ * dim_n_) +
                      " unit images");
  for (const RatMatrix& img : images_)
    if (img.rows() != dm || img.cols() != dm)
      throw DomainError("unit image shape does not match the target stage");
  // Reduced identities: unital sum, phi(e_ij) = phi(e_i0)phi(e_0j), and
  // phi(e_0i)phi(e_j0) = delta_ij phi(e_00). Together they force a unital
  // algebra map, injective because phi(e_00) is nonzero.
  RatMatrix sum(dm, dm);
  for (std::size_t i = 0; i < dim_n_; ++i) sum = sum + image(i, i);
  if (!(sum == RatMatrix::identity(dm)))
    throw DomainError("unit images are not unital");
  if (image(0, 0).is_zero())
    throw DomainError("unit images do not span: phi(e_00) vanishes");
  for (std::size_t i = 0; i < dim_n_; ++i)
    for (std::size_t j = 0; j < dim_n_; ++j)
      if (!(image(i, j) == image(i, 0) * image(0, j)))
        throw DomainError("unit images are not multiplicative");
  for (std::size_t i = 0; i < dim_n_; ++i) {
    for (std::size_t j = 0; j < dim_n_; ++j) {
      RatMatrix prod = image(0, i) * image(j, 0);
      if (i == j ? !(prod == image(0, 0)) : !prod.is_zero())
        throw DomainError("unit images are not multiplicative");
    }
  }
}

const RatMatrix& MatrixUnitEmbedding::image(std::size_t i,
                                            std::size_t j) const {
  return images_[i * dim_n_ + j];
}

MatrixUnitEmbedding MatrixUnitEmbedding::standard(const Int& n, const Int& m) {
  std::size_t dn = SlotLayout(n).dimension();
  std::size_t dm = SlotLayout(m).dimension();
  std::vector<RatMatrix> images;
  images.reserve(dn * dn);
  for (std::size_t i = 0; i < dn; ++i) {
    for (std::size_t j = 0; j < dn; ++j) {
      RatMatrix img(dm, dm);
      for (auto [r, c] : embedded_unit_positions(n, m, i, j)) img.at(r, c) = 1;
      images.push_back(std::move(img));
    }
  }
  return MatrixUnitEmbedding(n, m, std::move(images));
}

MatrixUnitEmbedding MatrixUnitEmbedding::conjugated(const RatMatrix& p) const {
  auto p_inv = p.inverse();
  if (!p_inv) throw DomainError("conjugator must be invertible");
  std::vector<RatMatrix> images;
  images.reserve(images_.size());
  for (const RatMatrix& img : images_) images.push_back(p * img * *p_inv);
  return MatrixUnitEmbedding(n_, m_, std::move(images));
}

PglElement skolem_noether_conjugator(const MatrixUnitEmbedding& phi,
                                     const MatrixUnitEmbedding& psi) {
  if (phi.source_degree() != psi.source_degree() ||
      phi.target_degree() != psi.target_degree())
    throw DomainError("embeddings must share source and target degrees");
  const Int& n = phi.source_degree();
  const Int& m = phi.target_degree();
  std::size_t dn = SlotLayout(n).dimension();
  std::size_t dm = SlotLayout(m).dimension();
  std::size_t rank = dm / dn;

  // phi(e_00) and psi(e_00) are rank dm/dn idempotents; their pivot columns
  // give bases v_t, w_t of the respective images, fixed by the idempotents.
  auto image_basis = [&](const RatMatrix& e) {
    std::vector<std::size_t> pivots = e.pivot_columns();
    if (pivots.size() != rank)
      throw DomainError("corner idempotent has the wrong rank");
    std::vector<RatMatrix> basis;
    for (std::size_t c : pivots) {
      RatMatrix v(dm, 1);
      for (std::size_t r = 0; r < dm; ++r) v.at(r, 0) = e.at(r, c);
      basis.push_back(std::move(v));
    }
    return basis;
  };
  std::vector<RatMatrix> vs = image_basis(phi.image(0, 0));
  std::vector<RatMatrix> ws = image_basis(psi.image(0, 0));

  // Column i*rank+t of V is phi(e_i0) v_t; likewise W from psi. Both are
  // bases of the full space, and g = W V^-1 intertwines unit by unit.
  RatMatrix V(dm, dm), W(dm, dm);
  for (std::size_t i = 0; i < dn; ++i) {
    for (std::size_t t = 0; t < rank; ++t) {
      RatMatrix v = phi.image(i, 0) * vs[t];
      RatMatrix w = psi.image(i, 0) * ws[t];
      for (std::size_t r = 0; r < dm; ++r) {
        V.at(r, i * rank + t) = v.at(r, 0);
        W.at(r, i * rank + t) = w.at(r, 0);
      }
    }
  }
  auto v_inv = V.inverse();
  if (!v_inv) throw Error("conjugator construction produced a singular basis");
  RatMatrix g = W * *v_inv;
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      if (!(g * phi.image(i, j) == psi.image(i, j) * g))
        throw Error("conjugator verification failed");
  return PglElement(SlotLayout(m), std::move(g));
}

ComponentAlgebra::ComponentAlgebra(std::vector<Component> cs)
    : components(std::move(cs)) {
  std::set<Int> degrees;
  for (const Component& c : components) {
    if (c.degree < 1) throw DomainError("component degree must be positive");
    if (!degrees.insert(c.degree).second)
      throw DomainError("component degrees must be pairwise distinct");
  }
}

ComponentAlgebra truncate(const ComponentAlgebra& A,
                          const SupernaturalNumber& s) {
  std::vector<ComponentAlgebra::Component> kept;
  for (const auto& c : A.components)
    if (divides(c.degree, s)) kept.push_back(c);
  return ComponentAlgebra(std::move(kept));
}

namespace {

NcPoly poly_const(Rat c) {
  NcPoly p;
  p.terms.push_back({std::move(c), {}});
  return p;
}

NcPoly poly_gen(std::size_t idx) {
  NcPoly p;
  p.terms.push_back({Rat(1), {idx}});
  return p;
}

NcPoly poly_add(const NcPoly& a, const NcPoly& b) {
  NcPoly out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

NcPoly poly_scale(const NcPoly& a, const Rat& c) {
  NcPoly out = a;
  for (auto& t : out.terms) t.coefficient *= c;
  return out;
}

NcPoly poly_mul(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& ta : a.terms) {
    for (const auto& tb : b.terms) {
      NcPoly::Term t;
      t.coefficient = ta.coefficient * tb.coefficient;
      t.word = ta.word;
      t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

// Infix grammar over declared generators:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' natural]
//   atom   := rational | generator | '(' expr ')'
struct PolyParser {
  const std::string& text;
  const std::vector<std::string>& generators;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial: " + what + " at position " +
                     std::to_string(pos));
  }

  NcPoly parse() {
    NcPoly p = expr();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return p;
  }

  NcPoly expr() {
    NcPoly acc = eat('-') ? poly_scale(term(), Rat(-1)) : term();
    while (true) {
      if (eat('+'))
        acc = poly_add(acc, term());
      else if (eat('-'))
        acc = poly_add(acc, poly_scale(term(), Rat(-1)));
      else
        return acc;
    }
  }

  NcPoly term() {
    NcPoly acc = factor();
    while (eat('*')) acc = poly_mul(acc, factor());
    return acc;
  }

  NcPoly factor() {
    NcPoly base = atom();
    if (!eat('^')) return base;
    Int e = natural();
    NcPoly acc = poly_const(Rat(1));
    for (Int k = 0; k < e; ++k) acc = poly_mul(acc, base);
    return acc;
  }

  Int natural() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a natural number");
    return Int(text.substr(start, pos - start));
  }

  NcPoly atom() {
    skip_ws();
    if (pos == text.size()) fail("unexpected end of input");
    if (eat('(')) {
      NcPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = natural();
      if (eat('/')) return poly_const(Rat(num, natural()));
      return poly_const(Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      auto it = std::find(generators.begin(), generators.end(), name);
      if (it == generators.end()) fail("unknown generator '" + name + "'");
      return poly_gen(static_cast<std::size_t>(it - generators.begin()));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

AlgebraPresentation::AlgebraPresentation(std::vector<std::string> generators,
                                         std::vector<NcPoly> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  std::set<std::string> seen(generators_.begin(), generators_.end());
  if (seen.size() != generators_.size())
    throw DomainError("generator names must be distinct");
  for (const NcPoly& r : relations_)
    for (const auto& t : r.terms)
      for (std::size_t g : t.word)
        if (g >= generators_.size())
          throw DomainError("relation mentions an undeclared generator");
}

NcPoly AlgebraPresentation::parse_polynomial(const std::string& text) const {
  PolyParser parser{text, generators_};
  return parser.parse();
}

AlgebraPresentation AlgebraPresentation::parse(const std::string& text) {
  std::vector<std::string> generators;
  std::vector<std::string> relation_sources;
  std::istringstream in(text);
  std::string line;
  bool have_generators = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "generators:") {
      std::string name;
      while (ls >> name) generators.push_back(name);
      have_generators = true;
    } else if (head == "relation:") {
      std::string rest;
      std::getline(ls, rest);
      relation_sources.push_back(rest);
    } else {
      throw ParseError("presentation: unexpected line starting with '" + head +
                       "'");
    }
  }
  if (!have_generators)
    throw ParseError("presentation: missing 'generators:' line");
  AlgebraPresentation out(std::move(generators), {});
  for (const std::string& src : relation_sources)
    out.relations_.push_back(out.parse_polynomial(src));
  return out;
}

bool check_representation(
    const AlgebraPresentation& R,
    const std::map<std::string, TowerMatrix>& assignment) {
  if (R.generators().empty() && !R.relations().empty())
    throw DomainError("relations over an empty generator list");
  std::vector<const RatMatrix*> values;
  const SlotLayout* stage = nullptr;
  for (const std::string& g : R.generators()) {
    auto it = assignment.find(g);
    if (it == assignment.end())
      throw DomainError("assignment missing generator '" + g + "'");
    if (stage && !(*stage == it->second.layout))
      throw DomainError("assignment mixes stages");
    stage = &it->second.layout;
    values.push_back(&it->second.entries);
  }
  std::size_t dim = stage ? stage->dimension() : 1;
  for (const NcPoly& rel : R.relations()) {
    RatMatrix sum(dim, dim);
    for (const auto& term : rel.terms) {
      RatMatrix prod = RatMatrix::identity(dim);
      for (std::size_t g : term.word) prod = prod * *values[g];
      sum = sum + prod.scaled(term.coefficient);
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

}  // namespace bigcell
