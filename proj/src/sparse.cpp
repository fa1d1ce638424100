#include "jloci/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace jloci {

Rational parse_rational(std::string_view text)
{
  if (text.empty())
    throw std::invalid_argument("empty rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  auto slash = text.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to)
      return false;
    for (std::size_t i = from; i < to; ++i)
      if (text[i] < '0' || text[i] > '9')
        return false;
    return true;
  };
  std::size_t num_end = slash == std::string_view::npos ? text.size() : slash;
  if (!digits(start, num_end) || (slash != std::string_view::npos && !digits(slash + 1, text.size())))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (slash != std::string_view::npos) {
    Integer den(std::string(text.substr(slash + 1)));
    if (den == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = Rational(Integer(s.substr(0, s.find('/'))), den);
  } else {
    q = Rational(Integer(s));
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

SparseVector::SparseVector(std::vector<Entry> entries)
{
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first)
      entries_.back().second += e.second;
    else
      entries_.push_back(std::move(e));
    if (entries_.back().second == 0)
      entries_.pop_back();
  }
}

SparseVector SparseVector::unit(std::size_t index, const Rational& value)
{
  SparseVector v;
  if (value != 0)
    v.entries_.emplace_back(index, value);
  return v;
}

SparseVector SparseVector::from_dense(std::span<const Rational> dense)
{
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0)
      v.entries_.emplace_back(i, dense[i]);
  return v;
}

Rational SparseVector::at(std::size_t index) const
{
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index)
    return it->second;
  return 0;
}

std::vector<Rational> SparseVector::to_dense(std::size_t n) const
{
  std::vector<Rational> out(n);
  for (const auto& [i, c] : entries_) {
    if (i >= n)
      throw std::out_of_range("sparse vector index exceeds requested dimension");
    out[i] = c;
  }
  return out;
}

SparseVector& SparseVector::operator*=(const Rational& c)
{
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_)
    e.second *= c;
  return *this;
}

void SparseVector::axpy(const Rational& c, const SparseVector& other)
{
  if (c == 0 || other.empty())
    return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (s != 0)
        out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVector& SparseVector::operator+=(const SparseVector& other)
{
  axpy(1, other);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other)
{
  axpy(-1, other);
  return *this;
}

Rational SparseVector::dot(const SparseVector& other) const
{
  Rational s = 0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

SparseVector linear_combination(std::span<const std::pair<Rational, const SparseVector*>> terms)
{
  std::vector<SparseVector::Entry> all;
  std::size_t total = 0;
  for (const auto& t : terms)
    total += t.second->size();
  all.reserve(total);
  for (const auto& [c, v] : terms) {
    if (c == 0)
      continue;
    for (const auto& [i, x] : *v)
      all.emplace_back(i, c * x);
  }
  return SparseVector(std::move(all));
}

// ---------------------------------------------------------------------------

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::vector<SparseVector> columns)
    : rows_(rows), columns_(std::move(columns))
{
  for (const auto& c : columns_)
    if (c.extent() > rows_)
      throw std::out_of_range("matrix column has an entry beyond the row count");
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.columns_[i] = SparseVector::unit(i);
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::size_t cols, const std::vector<SparseVector>& rows)
{
  std::vector<std::vector<SparseVector::Entry>> cols_data(cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, c] : rows[i]) {
      if (j >= cols)
        throw std::out_of_range("row entry beyond the column count");
      cols_data[j].emplace_back(i, c);
    }
  ExactMatrix m(rows.size(), cols);
  for (std::size_t j = 0; j < cols; ++j)
    m.columns_[j] = SparseVector(std::move(cols_data[j]));
  return m;
}

ExactMatrix ExactMatrix::from_dense(const std::vector<std::vector<Rational>>& rows)
{
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<SparseVector> r;
  for (const auto& row : rows) {
    if (row.size() != cols)
      throw std::invalid_argument("ragged dense matrix");
    r.push_back(SparseVector::from_dense(row));
  }
  return from_rows(cols, r);
}

ExactMatrix ExactMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                       const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& triplets)
{
  std::vector<std::vector<SparseVector::Entry>> cols_data(cols);
  for (const auto& [i, j, c] : triplets) {
    if (i >= rows || j >= cols)
      throw std::out_of_range("matrix triplet out of range");
    cols_data[j].emplace_back(i, c);
  }
  ExactMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    m.columns_[j] = SparseVector(std::move(cols_data[j]));
  return m;
}

std::size_t ExactMatrix::nnz() const
{
  std::size_t n = 0;
  for (const auto& c : columns_)
    n += c.size();
  return n;
}

std::vector<SparseVector> ExactMatrix::row_vectors() const { return transpose().columns_; }

SparseVector ExactMatrix::apply(const SparseVector& v) const
{
  std::vector<std::pair<Rational, const SparseVector*>> terms;
  terms.reserve(v.size());
  for (const auto& [j, c] : v) {
    if (j >= cols())
      throw std::out_of_range("vector index beyond matrix column count");
    terms.emplace_back(c, &columns_[j]);
  }
  return linear_combination(terms);
}

ExactMatrix ExactMatrix::transpose() const
{
  std::vector<std::vector<SparseVector::Entry>> t(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, c] : columns_[j])
      t[i].emplace_back(j, c);
  ExactMatrix m(cols(), rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    m.columns_[i] = SparseVector(std::move(t[i]));
  return m;
}

bool ExactMatrix::is_integral() const
{
  for (const auto& c : columns_)
    for (const auto& e : c)
      if (!is_integer(e.second))
        return false;
  return true;
}

bool ExactMatrix::is_zero() const
{
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product dimension mismatch");
  ExactMatrix m(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    m.columns_[j] = a.apply(b.columns_[j]);
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum dimension mismatch");
  ExactMatrix m = a;
  for (std::size_t j = 0; j < b.cols(); ++j)
    m.columns_[j] += b.columns_[j];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + Rational(-1) * b; }

ExactMatrix operator*(const Rational& c, const ExactMatrix& a)
{
  ExactMatrix m = a;
  for (auto& col : m.columns_)
    col *= c;
  return m;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

} // namespace jloci
