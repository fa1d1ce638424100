#pragma once

#include "jloci/sparse.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace jloci {

class Subspace;

/// Incremental semi-echelon basis over Q. Every stored row is normalized to
/// leading coefficient 1 and no two rows share a leading index.
class Echelon {
public:
  explicit Echelon(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Residual of v after eliminating every pivot of this basis.
  SparseVector reduce(SparseVector v) const;
  /// Adds v to the span. Returns the normalized residual that was stored,
  /// or an empty vector when v was already in the span.
  SparseVector insert(const SparseVector& v);

  /// Canonical reduced row-echelon form of the span.
  Subspace subspace() const;

private:
  std::size_t ambient_;
  std::vector<SparseVector> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;
};

/// A subspace of Q^n stored as its reduced row-echelon basis. Two subspaces
/// are equal exactly when their representations are equal.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, std::span<const SparseVector> vectors);
  /// The coordinate subspace spanned by the given unit vectors.
  static Subspace coordinate(std::size_t ambient, std::span<const std::size_t> indices);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to basis(); throws std::domain_error
  /// when v is not in the subspace.
  SparseVector coordinates(const SparseVector& v) const;
  /// Inverse of coordinates().
  SparseVector combine(const SparseVector& coords) const;

  /// {xi : <xi, s> = 0 for all s} under the coordinate pairing.
  Subspace annihilator() const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  friend class Echelon;
  std::size_t ambient_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
};

struct RankKernel {
  std::size_t rank;
  Subspace kernel;
};

/// Exact rank and right kernel {v : M v = 0}.
RankKernel rank_kernel(const ExactMatrix& m);

/// Rank of the column span, without the kernel.
std::size_t rank(const ExactMatrix& m);

/// Annihilator of S under the canonical pairing of a based space with its
/// dual (dual basis). Same as S.annihilator().
Subspace annihilator(const Subspace& s);

/// Smallest subspace containing the seeds and invariant under every operator.
Subspace spin(std::span<const ExactMatrix> ops, std::span<const SparseVector> seeds, std::size_t ambient);

/// {v in space : X v = 0 for every X in ops}.
Subspace joint_kernel(std::span<const ExactMatrix> ops, const Subspace& space);

/// True if X(space) is contained in space for every X in ops.
bool is_invariant(std::span<const ExactMatrix> ops, const Subspace& space);

} // namespace jloci
