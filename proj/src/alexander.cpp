#include "jloci/alexander.hpp"

#include "jloci/modular.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace jloci {

std::size_t default_max_nnz()
{
  if (const char* env = std::getenv("JLOCI_MAX_NNZ")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return builtin_max_nnz;
}

bool HilbertProfile::finite() const
{
  return std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end();
}

namespace {

// Monomials of degree q in n variables as non-decreasing index tuples, in
// lexicographic order.
class MonomialBasis {
public:
  MonomialBasis(std::size_t n, std::size_t q)
  {
    IndexTuple t(q, 0);
    if (n == 0) {
      if (q == 0)
        add(t);
      return;
    }
    for (;;) {
      add(t);
      std::size_t i = q;
      while (i > 0 && t[i - 1] == n - 1)
        --i;
      if (i == 0)
        break;
      auto v = t[i - 1] + 1;
      for (std::size_t j = i - 1; j < q; ++j)
        t[j] = v;
    }
  }

  std::size_t size() const { return monomials_.size(); }
  const IndexTuple& operator[](std::size_t i) const { return monomials_[i]; }
  std::size_t index(const IndexTuple& t) const { return index_.at(t); }

private:
  void add(const IndexTuple& t)
  {
    index_.emplace(t, monomials_.size());
    monomials_.push_back(t);
  }

  std::vector<IndexTuple> monomials_;
  std::map<IndexTuple, std::size_t> index_;
};

IndexTuple times(IndexTuple m, std::uint32_t x)
{
  m.insert(std::upper_bound(m.begin(), m.end(), x), x);
  return m;
}

std::size_t block_nnz_estimate(const GroupAlgebraData& data, std::size_t q)
{
  std::size_t lower = q == 0 ? 0 : binomial(data.n + q - 2, q - 1);
  std::size_t upper = binomial(data.n + q - 1, q);
  return 3 * lower * binomial(data.n, 3) + upper * data.del.nnz();
}

} // namespace

ExactMatrix presentation_block(const GroupAlgebraData& data, std::size_t q)
{
  const std::size_t n = data.n;
  const std::size_t pairs = binomial(n, 2);
  MonomialBasis target(n, q);
  std::vector<SparseVector> cols;

  auto pair_index = [&](std::uint32_t x, std::uint32_t y) {
    IndexTuple t{x, y};
    return tuple_rank(t, n);
  };

  if (q > 0) {
    MonomialBasis source(n, q - 1);
    const auto triples = all_tuples(n, 3);
    for (std::size_t m = 0; m < source.size(); ++m)
      for (const auto& t : triples) {
        const auto a = t[0], b = t[1], c = t[2];
        // a (x) b^c + b (x) c^a + c (x) a^b, with c^a = -(a^c)
        std::vector<SparseVector::Entry> col{
            {target.index(times(source[m], a)) * pairs + pair_index(b, c), 1},
            {target.index(times(source[m], b)) * pairs + pair_index(a, c), -1},
            {target.index(times(source[m], c)) * pairs + pair_index(a, b), 1},
        };
        cols.emplace_back(std::move(col));
      }
  }
  for (std::size_t m = 0; m < target.size(); ++m)
    for (const auto& xi : data.del.columns()) {
      std::vector<SparseVector::Entry> col;
      col.reserve(xi.size());
      for (const auto& [r, c] : xi)
        col.emplace_back(m * pairs + r, c);
      cols.emplace_back(std::move(col));
    }
  return ExactMatrix(target.size() * pairs, std::move(cols));
}

HilbertProfile graded_dims(const GroupAlgebraData& data, std::size_t qmax, std::size_t max_nnz)
{
  HilbertProfile p;
  p.qmax = qmax;
  p.max_nnz = max_nnz;
  for (std::size_t q = 0; q <= qmax; ++q) {
    if (!p.dims.empty() && p.dims.back() == 0) {
      p.dims.push_back(0);
      p.inferred.push_back(true);
      continue;
    }
    if (block_nnz_estimate(data, q) > max_nnz) {
      p.truncated = true;
      p.truncated_at = q;
      break;
    }
    ExactMatrix block = presentation_block(data, q);
    p.dims.push_back(block.rows() - rank(block));
    p.inferred.push_back(false);
  }
  return p;
}

ExactMatrix evaluated_presentation(const GroupAlgebraData& data, std::span<const Rational> z)
{
  if (z.size() != data.n)
    throw std::invalid_argument("point has the wrong number of coordinates");
  const std::size_t n = data.n;
  std::vector<SparseVector> cols;
  for (const auto& t : all_tuples(n, 3)) {
    const auto a = t[0], b = t[1], c = t[2];
    std::vector<SparseVector::Entry> col{
        {tuple_rank(IndexTuple{b, c}, n), z[a]},
        {tuple_rank(IndexTuple{a, c}, n), -z[b]},
        {tuple_rank(IndexTuple{a, b}, n), z[c]},
    };
    cols.emplace_back(std::move(col));
  }
  for (const auto& xi : data.del.columns())
    cols.push_back(xi);
  return ExactMatrix(binomial(n, 2), std::move(cols));
}

bool wk_membership(const GroupAlgebraData& data, std::span<const Rational> z, std::size_t k)
{
  ExactMatrix m = evaluated_presentation(data, z);
  // dense elimination is fine for the small data this is meant for
  std::size_t r = m.rows() * m.cols() <= 250'000 ? bareiss_rank(m) : rank(m);
  return m.rows() - r >= k;
}

CrosscheckReport infares_crosscheck(const GroupAlgebraData& data, std::span<const Point> samples, std::size_t kmax)
{
  CrosscheckReport out;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& z = samples[s];
    if (std::all_of(z.begin(), z.end(), [](const Rational& x) { return x == 0; }))
      throw std::invalid_argument("the comparison only holds away from the origin");
    for (std::size_t k = 1; k <= kmax; ++k) {
      bool w = wk_membership(data, z, k);
      bool r = resonance_membership(data, z, k).member;
      ++out.cases;
      if (w && r)
        ++out.positives;
      if (w != r)
        out.discrepancies.push_back({s, k, w, r});
    }
  }
  return out;
}

GroupAlgebraData random_algebra_data(std::mt19937_64& rng)
{
  std::size_t n = 2 + rng() % 4;
  std::size_t h2 = rng() % 7;
  std::size_t rows = binomial(n, 2);
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < h2; ++j) {
    std::vector<SparseVector::Entry> col;
    for (std::size_t i = 0; i < rows; ++i)
      if (rng() % 3 == 0)
        col.emplace_back(i, static_cast<long>(rng() % 5) - 2);
    cols.emplace_back(std::move(col));
  }
  return GroupAlgebraData(n, ExactMatrix(rows, std::move(cols)), "random");
}

Point random_sparse_point(std::size_t n, std::mt19937_64& rng)
{
  Point z(n);
  for (;;) {
    bool zero = true;
    for (auto& x : z) {
      long v = rng() % 2 ? 0 : static_cast<long>(rng() % 5) - 2;
      x = v;
      if (v != 0)
        zero = false;
    }
    if (!zero)
      return z;
  }
}

FinitenessResult finiteness_detect(const GroupAlgebraData& data, std::size_t qbound, std::size_t max_nnz)
{
  if (qbound < 1)
    throw std::invalid_argument("qbound must be at least 1");
  FinitenessResult out;
  // stop at the first vanishing piece
  HilbertProfile p;
  p.qmax = qbound;
  p.max_nnz = max_nnz;
  for (std::size_t q = 0; q <= qbound; ++q) {
    if (block_nnz_estimate(data, q) > max_nnz) {
      p.truncated = true;
      p.truncated_at = q;
      break;
    }
    ExactMatrix block = presentation_block(data, q);
    p.dims.push_back(block.rows() - rank(block));
    p.inferred.push_back(false);
    if (p.dims.back() == 0) {
      out.finite = true;
      out.vanishing_degree = q;
      break;
    }
  }
  out.profile = std::move(p);
  return out;
}

} // namespace jloci
