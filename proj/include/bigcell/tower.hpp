#ifndef BIGCELL_TOWER_HPP
#define BIGCELL_TOWER_HPP

#include "bigcell/supernat.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bigcell {

/// Dense matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t n) { return RatMatrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Rat trace() const;

  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  RatMatrix scaled(const Rat& c) const;

  /// Exact inverse by Gauss-Jordan; nullopt when singular.
  std::optional<RatMatrix> inverse() const;

  /// Indices of pivot columns of the reduced row echelon form.
  std::vector<std::size_t> pivot_columns() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) {
    return !(a == b);
  }

  /// Row-major whitespace-separated rationals; the element count must be a
  /// perfect square.
  static RatMatrix parse(const std::string& text);
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Ordered prime-factor decomposition of n: ascending primes with
/// multiplicity, product n. The layout of 1 is the empty list.
class SlotLayout {
 public:
  explicit SlotLayout(const Int& n);

  const Int& n() const { return n_; }
  const std::vector<Int>& slots() const { return slots_; }
  std::size_t dimension() const;  // == n as size_t

  friend bool operator==(const SlotLayout& a, const SlotLayout& b) {
    return a.n_ == b.n_;
  }

 private:
  Int n_;
  std::vector<Int> slots_;
};

/// Slot matching for n | m: the k-th occurrence of each prime among the
/// slots of n maps to the k-th occurrence among the slots of m.
std::vector<std::size_t> slot_assignment(const SlotLayout& from,
                                         const SlotLayout& to);

/// An exact-rational matrix realized over the tensor decomposition of its
/// stage. Basis tuples are linearized with the leftmost slot most
/// significant, row-major.
struct TowerMatrix {
  SlotLayout layout;
  RatMatrix entries;

  TowerMatrix(SlotLayout l, RatMatrix e);

  static TowerMatrix matrix_unit(const Int& n, std::size_t i, std::size_t j);
  static TowerMatrix identity(const Int& n);
};

/// Standard embedding rho_{n,m}: x maps to the matrix acting as x on the
/// assigned slots and as the identity on the free slots. Unital algebra map.
TowerMatrix standard_embedding(const TowerMatrix& x, const Int& m);

/// Sparse image of a matrix unit under rho_{n,m}: the list of (row, col)
/// positions carrying a 1. There are exactly m/n of them.
std::vector<std::pair<std::size_t, std::size_t>> embedded_unit_positions(
    const Int& n, const Int& m, std::size_t i, std::size_t j);

/// Matrix trace scaled so the identity has trace 1; preserved by standard
/// embeddings.
Rat normalized_trace(const TowerMatrix& x);

/// Invertible stage matrix modulo nonzero scalars.
class PglElement {
 public:
  PglElement(SlotLayout stage, RatMatrix matrix);

  const SlotLayout& stage() const { return stage_; }
  const RatMatrix& matrix() const { return matrix_; }

  /// Scalar-normalized representative: first nonzero entry in row-major
  /// order rescaled to 1.
  RatMatrix canonical() const;

  friend bool operator==(const PglElement& a, const PglElement& b) {
    return a.stage_ == b.stage_ && a.canonical() == b.canonical();
  }

 private:
  SlotLayout stage_;
  RatMatrix matrix_;
};

/// g ~_n h: g and h act identically (by conjugation) on the standardly
/// embedded M_n inside the common stage.
bool pgl_equiv_n(const PglElement& g, const PglElement& h, const Int& n);

/// A unital algebra embedding M_n -> M_m presented by the images of the n^2
/// matrix units (row-major unit order). Construction validates unitality
/// and multiplicativity.
class MatrixUnitEmbedding {
 public:
  MatrixUnitEmbedding(Int n, Int m, std::vector<RatMatrix> unit_images);

  const Int& source_degree() const { return n_; }
  const Int& target_degree() const { return m_; }
  const RatMatrix& image(std::size_t i, std::size_t j) const;

  static MatrixUnitEmbedding standard(const Int& n, const Int& m);
  /// Conjugate of an embedding by an invertible matrix.
  MatrixUnitEmbedding conjugated(const RatMatrix& p) const;

 private:
  Int n_;
  Int m_;
  std::size_t dim_n_ = 0;
  std::vector<RatMatrix> images_;
};

/// A stage element g with g * phi(u) * g^-1 = psi(u) for every matrix unit
/// u; exists for any two embeddings M_n -> M_m over a field. The result is
/// verified before being returned.
PglElement skolem_noether_conjugator(const MatrixUnitEmbedding& phi,
                                     const MatrixUnitEmbedding& psi);

/// Product of matrix algebras over field centers, with pairwise distinct
/// component degrees. The empty list is the zero object.
struct ComponentAlgebra {
  struct Component {
    Int degree;
    std::string center_label;
  };
  std::vector<Component> components;

  ComponentAlgebra() = default;
  explicit ComponentAlgebra(std::vector<Component> cs);

  bool is_zero() const { return components.empty(); }
};

/// Keeps exactly the components whose degree divides s.
ComponentAlgebra truncate(const ComponentAlgebra& A,
                          const SupernaturalNumber& s);

/// Noncommutative polynomial over declared generators: a sum of rational
/// multiples of words.
struct NcPoly {
  struct Term {
    Rat coefficient;
    std::vector<std::size_t> word;  // generator indices; empty = unit
  };
  std::vector<Term> terms;
};

/// Finitely presented algebra: generator symbols plus relation polynomials.
class AlgebraPresentation {
 public:
  AlgebraPresentation(std::vector<std::string> generators,
                      std::vector<NcPoly> relations);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<NcPoly>& relations() const { return relations_; }

  /// Text document:
  ///   generators: x y
  ///   relation: x*y - y*x - 1
  /// Relation polynomials use the infix grammar with +, -, *, ^ and
  /// rational literals.
  static AlgebraPresentation parse(const std::string& text);

  /// Parses one polynomial in the infix grammar against these generators.
  NcPoly parse_polynomial(const std::string& text) const;

 private:
  std::vector<std::string> generators_;
  std::vector<NcPoly> relations_;
};

/// True iff every relation evaluates to zero under the assignment
/// (generator index -> stage matrix, all at one stage; unit -> identity).
bool check_representation(const AlgebraPresentation& R,
                          const std::map<std::string, TowerMatrix>& assignment);

}  // namespace bigcell

#endif  // BIGCELL_TOWER_HPP
