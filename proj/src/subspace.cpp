#include "jloci/subspace.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace jloci {

Echelon::Echelon(std::size_t ambient) : ambient_(ambient), pivot_row_(ambient, -1) {}

SparseVector Echelon::reduce(SparseVector v) const
{
  if (v.extent() > ambient_)
    throw std::out_of_range("vector exceeds echelon ambient dimension");
  std::size_t pos = 0;
  for (;;) {
    const auto& e = v.entries();
    while (pos < e.size() && pivot_row_[e[pos].first] < 0)
      ++pos;
    if (pos == e.size())
      break;
    // every stored row starts at its pivot, so entries before pos survive
    Rational c = e[pos].second;
    v.axpy(-c, rows_[static_cast<std::size_t>(pivot_row_[e[pos].first])]);
  }
  return v;
}

SparseVector Echelon::insert(const SparseVector& v)
{
  SparseVector r = reduce(v);
  if (r.empty())
    return r;
  Rational inv = 1 / r.leading_value();
  r *= inv;
  pivot_row_[r.leading_index()] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(r);
  return r;
}

Subspace Echelon::subspace() const
{
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].leading_index() > rows_[b].leading_index(); });

  // back-substitution from the largest pivot down
  std::vector<SparseVector> reduced(rows_.size());
  std::vector<std::ptrdiff_t> reduced_at(ambient_, -1);
  for (std::size_t k : order) {
    const SparseVector& row = rows_[k];
    std::vector<std::pair<Rational, const SparseVector*>> terms{{Rational(1), &row}};
    for (std::size_t t = 1; t < row.size(); ++t) {
      const auto& [j, c] = row.entries()[t];
      if (reduced_at[j] >= 0)
        terms.emplace_back(-c, &reduced[static_cast<std::size_t>(reduced_at[j])]);
    }
    reduced[k] = terms.size() == 1 ? row : linear_combination(terms);
    reduced_at[row.leading_index()] = static_cast<std::ptrdiff_t>(k);
  }

  Subspace s(ambient_);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    s.pivots_.push_back(reduced[*it].leading_index());
    s.rows_.push_back(std::move(reduced[*it]));
  }
  return s;
}

// ---------------------------------------------------------------------------

Subspace Subspace::full(std::size_t ambient)
{
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(SparseVector::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, std::span<const SparseVector> vectors)
{
  Echelon e(ambient);
  for (const auto& v : vectors)
    e.insert(v);
  return e.subspace();
}

Subspace Subspace::coordinate(std::size_t ambient, std::span<const std::size_t> indices)
{
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  Subspace s(ambient);
  for (std::size_t i : idx) {
    if (i >= ambient)
      throw std::out_of_range("coordinate index beyond ambient dimension");
    s.rows_.push_back(SparseVector::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

SparseVector Subspace::reduce(const SparseVector& v) const
{
  if (v.extent() > ambient_)
    throw std::out_of_range("vector exceeds subspace ambient dimension");
  std::vector<std::pair<Rational, const SparseVector*>> terms{{Rational(1), &v}};
  for (const auto& [i, c] : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
    if (it != pivots_.end() && *it == i)
      terms.emplace_back(-c, &rows_[static_cast<std::size_t>(it - pivots_.begin())]);
  }
  if (terms.size() == 1)
    return v;
  return linear_combination(terms);
}

bool Subspace::contains(const Subspace& other) const
{
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const SparseVector& b) { return contains(b); });
}

SparseVector Subspace::coordinates(const SparseVector& v) const
{
  if (!contains(v))
    throw std::domain_error("vector is not in the subspace");
  std::vector<SparseVector::Entry> coords;
  for (const auto& [i, c] : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
    if (it != pivots_.end() && *it == i)
      coords.emplace_back(static_cast<std::size_t>(it - pivots_.begin()), c);
  }
  return SparseVector(std::move(coords));
}

SparseVector Subspace::combine(const SparseVector& coords) const
{
  std::vector<std::pair<Rational, const SparseVector*>> terms;
  for (const auto& [k, c] : coords) {
    if (k >= rows_.size())
      throw std::out_of_range("coordinate index beyond subspace dimension");
    terms.emplace_back(c, &rows_[k]);
  }
  return linear_combination(terms);
}

Subspace Subspace::annihilator() const
{
  // kernel of the RREF matrix: one vector per free column
  std::vector<std::vector<SparseVector::Entry>> free_parts(ambient_);
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t p : pivots_)
    is_pivot[p] = true;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (const auto& [j, c] : rows_[k])
      if (!is_pivot[j])
        free_parts[j].emplace_back(pivots_[k], -c);
  std::vector<SparseVector> vectors;
  for (std::size_t f = 0; f < ambient_; ++f) {
    if (is_pivot[f])
      continue;
    auto entries = std::move(free_parts[f]);
    entries.emplace_back(f, 1);
    vectors.emplace_back(std::move(entries));
  }
  return span(ambient_, vectors);
}

Subspace operator+(const Subspace& a, const Subspace& b)
{
  if (a.ambient_ != b.ambient_)
    throw std::invalid_argument("subspace sum over different ambient spaces");
  Echelon e(a.ambient_);
  for (const auto& v : a.rows_)
    e.insert(v);
  for (const auto& v : b.rows_)
    e.insert(v);
  return e.subspace();
}

// ---------------------------------------------------------------------------

RankKernel rank_kernel(const ExactMatrix& m)
{
  auto rows = m.row_vectors();
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
  Echelon e(m.cols());
  for (std::size_t i : order)
    if (!rows[i].empty())
      e.insert(rows[i]);
  return {e.rank(), e.subspace().annihilator()};
}

std::size_t rank(const ExactMatrix& m)
{
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.column(a).size() < m.column(b).size(); });
  Echelon e(m.rows());
  for (std::size_t j : order)
    if (!m.column(j).empty())
      e.insert(m.column(j));
  return e.rank();
}

Subspace annihilator(const Subspace& s) { return s.annihilator(); }

Subspace spin(std::span<const ExactMatrix> ops, std::span<const SparseVector> seeds, std::size_t ambient)
{
  for (const auto& op : ops)
    if (op.rows() != ambient || op.cols() != ambient)
      throw std::invalid_argument("spin operator does not act on the ambient space");
  Echelon e(ambient);
  std::deque<SparseVector> queue;
  for (const auto& s : seeds) {
    auto r = e.insert(s);
    if (!r.empty())
      queue.push_back(std::move(r));
  }
  while (!queue.empty()) {
    SparseVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : ops) {
      auto r = e.insert(op.apply(v));
      if (!r.empty())
        queue.push_back(std::move(r));
    }
  }
  return e.subspace();
}

Subspace joint_kernel(std::span<const ExactMatrix> ops, const Subspace& space)
{
  const std::size_t n = space.ambient();
  if (ops.empty() || space.dim() == 0)
    return space;
  std::vector<SparseVector> columns;
  columns.reserve(space.dim());
  for (const auto& b : space.basis()) {
    std::vector<SparseVector::Entry> stacked;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      if (ops[k].cols() != n || ops[k].rows() != n)
        throw std::invalid_argument("joint kernel operator does not act on the ambient space");
      for (const auto& [i, c] : ops[k].apply(b))
        stacked.emplace_back(k * n + i, c);
    }
    columns.emplace_back(std::move(stacked));
  }
  auto rk = rank_kernel(ExactMatrix(ops.size() * n, std::move(columns)));
  std::vector<SparseVector> vectors;
  for (const auto& coords : rk.kernel.basis())
    vectors.push_back(space.combine(coords));
  return Subspace::span(n, vectors);
}

bool is_invariant(std::span<const ExactMatrix> ops, const Subspace& space)
{
  for (const auto& op : ops)
    for (const auto& b : space.basis())
      if (!space.contains(op.apply(b)))
        return false;
  return true;
}

} // namespace jloci
