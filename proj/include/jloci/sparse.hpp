#pragma once

#include "jloci/rational.hpp"

#include <cstddef>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace jloci {

/// Sparse vector of exact rationals. Entries are kept sorted by index with
/// no stored zeros, so equality of vectors is equality of representations.
class SparseVector {
public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  /// Accepts unsorted input with repeated indices; duplicates are summed.
  explicit SparseVector(std::vector<Entry> entries);

  static SparseVector unit(std::size_t index, const Rational& value = 1);
  static SparseVector from_dense(std::span<const Rational> dense);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool is_zero() const { return entries_.empty(); }

  /// Coefficient at `index` (zero when absent).
  Rational at(std::size_t index) const;
  std::size_t leading_index() const { return entries_.front().first; }
  const Rational& leading_value() const { return entries_.front().second; }
  /// One past the largest stored index, zero for the empty vector.
  std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  std::vector<Rational> to_dense(std::size_t n) const;

  SparseVector& operator*=(const Rational& c);
  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  /// this += c * other
  void axpy(const Rational& c, const SparseVector& other);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& c, SparseVector a) { return a *= c; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

  Rational dot(const SparseVector& other) const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

private:
  std::vector<Entry> entries_;
};

/// Sum of c_i * v_i in one merge pass.
SparseVector linear_combination(std::span<const std::pair<Rational, const SparseVector*>> terms);

/// Sparse exact matrix stored by columns: column j is the image of basis
/// vector j, which is how every operator in this library is built.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::vector<SparseVector> columns);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(std::size_t cols, const std::vector<SparseVector>& rows);
  static ExactMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  /// (row, col, value) triplets; repeated positions are summed.
  static ExactMatrix from_triplets(std::size_t rows, std::size_t cols,
                                   const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& triplets);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nnz() const;

  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  const std::vector<SparseVector>& columns() const { return columns_; }
  /// Row view, built on demand.
  std::vector<SparseVector> row_vectors() const;

  Rational entry(std::size_t i, std::size_t j) const { return columns_[j].at(i); }

  SparseVector apply(const SparseVector& v) const;
  ExactMatrix transpose() const;
  bool is_integral() const;
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rational& c, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// a*b - b*a
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

} // namespace jloci
