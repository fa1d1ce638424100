#pragma once

#include "jloci/sparse.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace jloci {

using IndexTuple = std::vector<std::uint32_t>;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Strictly increasing k-tuples from {0..n-1} are numbered in lexicographic
// order. This numbering is the canonical basis of the k-th exterior power
// throughout the library.
std::size_t tuple_rank(std::span<const std::uint32_t> tuple, std::size_t n);
IndexTuple tuple_unrank(std::size_t rank, std::size_t n, std::size_t k);
std::vector<IndexTuple> all_tuples(std::size_t n, std::size_t k);

/// Element of the k-th exterior power of a based space of dimension n.
/// Coefficients are indexed by tuple_rank.
class Multivector {
public:
  Multivector(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {}
  Multivector(std::size_t n, std::size_t degree, SparseVector coefficients);

  /// e_{i1} ^ ... ^ e_{ik} for arbitrary (unsorted, possibly repeated) indices.
  static Multivector basis(std::size_t n, std::span<const std::uint32_t> indices);
  static Multivector basis(std::size_t n, std::initializer_list<std::uint32_t> indices)
  {
    return basis(n, std::span<const std::uint32_t>(indices.begin(), indices.size()));
  }
  /// Degree-one element with the given coordinates.
  static Multivector vector(std::size_t n, SparseVector coords) { return {n, 1, std::move(coords)}; }

  std::size_t ambient() const { return n_; }
  std::size_t degree() const { return degree_; }
  std::size_t space_dim() const { return binomial(n_, degree_); }
  const SparseVector& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Terms as (tuple, coefficient), in lexicographic tuple order.
  std::vector<std::pair<IndexTuple, Rational>> terms() const;

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(const Rational& c);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Rational& c, Multivector a) { return a *= c; }
  friend bool operator==(const Multivector&, const Multivector&) = default;

private:
  void check_compatible(const Multivector& other) const;

  std::size_t n_;
  std::size_t degree_;
  SparseVector coeffs_;
};

/// Exterior product; throws std::invalid_argument for different ambient spaces.
Multivector wedge(const Multivector& u, const Multivector& v);

/// Action of an endomorphism X of the base space on an exterior power as a
/// derivation: X(x1^...^xk) = sum_i x1^..^X xi^..^xk.
Multivector derivation_action(const ExactMatrix& x, const Multivector& w);
/// Action of an endomorphism as an algebra map: M(x1^...^xk) = Mx1^...^Mxk.
Multivector automorphism_action(const ExactMatrix& m, const Multivector& w);

/// Matrix of derivation_action on the degree-k exterior power.
ExactMatrix exterior_derivation_matrix(const ExactMatrix& x, std::size_t degree);

} // namespace jloci
