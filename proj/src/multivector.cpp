#include "jloci/multivector.hpp"

#include <algorithm>
#include <stdexcept>

namespace jloci {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > UINT64_MAX)
      throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::size_t tuple_rank(std::span<const std::uint32_t> tuple, std::size_t n)
{
  const std::size_t k = tuple.size();
  std::size_t r = 0;
  std::size_t next = 0; // smallest value allowed at the current position
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t c = tuple[i];
    if (c < next || c >= n)
      throw std::invalid_argument("index tuple is not strictly increasing within range");
    // tuples that agree so far but carry a smaller value v in [next, c) here
    std::size_t m = k - 1 - i;
    r += binomial(n - next, m + 1) - binomial(n - c, m + 1);
    next = c + 1;
  }
  return r;
}

IndexTuple tuple_unrank(std::size_t rank, std::size_t n, std::size_t k)
{
  if (rank >= binomial(n, k))
    throw std::out_of_range("tuple rank out of range");
  IndexTuple t(k);
  std::size_t v = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (;; ++v) {
      std::uint64_t count = binomial(n - 1 - v, k - 1 - i);
      if (rank < count)
        break;
      rank -= count;
    }
    t[i] = static_cast<std::uint32_t>(v++);
  }
  return t;
}

std::vector<IndexTuple> all_tuples(std::size_t n, std::size_t k)
{
  std::vector<IndexTuple> out;
  out.reserve(binomial(n, k));
  if (k > n)
    return out;
  IndexTuple t(k);
  for (std::size_t i = 0; i < k; ++i)
    t[i] = static_cast<std::uint32_t>(i);
  for (;;) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j)
      t[j] = t[j - 1] + 1;
  }
  return out;
}

namespace {

// Sorts in place and returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(IndexTuple& t)
{
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j])
        return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

} // namespace

// ---------------------------------------------------------------------------

Multivector::Multivector(std::size_t n, std::size_t degree, SparseVector coefficients)
    : n_(n), degree_(degree), coeffs_(std::move(coefficients))
{
  if (coeffs_.extent() > binomial(n_, degree_))
    throw std::out_of_range("multivector coefficient index out of range");
}

Multivector Multivector::basis(std::size_t n, std::span<const std::uint32_t> indices)
{
  IndexTuple t(indices.begin(), indices.end());
  for (auto i : t)
    if (i >= n)
      throw std::out_of_range("basis index out of range");
  int sign = sort_with_sign(t);
  Multivector w(n, t.size());
  if (sign != 0)
    w.coeffs_ = SparseVector::unit(tuple_rank(t, n), sign);
  return w;
}

std::vector<std::pair<IndexTuple, Rational>> Multivector::terms() const
{
  std::vector<std::pair<IndexTuple, Rational>> out;
  out.reserve(coeffs_.size());
  for (const auto& [r, c] : coeffs_)
    out.emplace_back(tuple_unrank(r, n_, degree_), c);
  return out;
}

void Multivector::check_compatible(const Multivector& other) const
{
  if (n_ != other.n_ || degree_ != other.degree_)
    throw std::invalid_argument("multivectors live in different exterior powers");
}

Multivector& Multivector::operator+=(const Multivector& other)
{
  check_compatible(other);
  coeffs_ += other.coeffs_;
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other)
{
  check_compatible(other);
  coeffs_ -= other.coeffs_;
  return *this;
}

Multivector& Multivector::operator*=(const Rational& c)
{
  coeffs_ *= c;
  return *this;
}

Multivector wedge(const Multivector& u, const Multivector& v)
{
  if (u.ambient() != v.ambient())
    throw std::invalid_argument("wedge of multivectors over different ambient spaces");
  const std::size_t n = u.ambient();
  const std::size_t k = u.degree() + v.degree();
  if (k > n)
    return Multivector(n, k);
  auto vt = v.terms();
  std::vector<SparseVector::Entry> out;
  for (const auto& [tu, cu] : u.terms())
    for (const auto& [tv, cv] : vt) {
      // sign of the merge permutation: pairs (x in tu, y in tv) with x > y
      std::size_t inversions = 0;
      bool repeated = false;
      IndexTuple merged;
      merged.reserve(k);
      std::size_t i = 0, j = 0;
      while (i < tu.size() || j < tv.size()) {
        if (j == tv.size() || (i < tu.size() && tu[i] < tv[j])) {
          merged.push_back(tu[i++]);
        } else if (i == tu.size() || tv[j] < tu[i]) {
          inversions += tu.size() - i;
          merged.push_back(tv[j++]);
        } else {
          repeated = true;
          break;
        }
      }
      if (repeated)
        continue;
      Rational c = cu * cv;
      if (inversions % 2)
        c = -c;
      out.emplace_back(tuple_rank(merged, n), std::move(c));
    }
  return Multivector(n, k, SparseVector(std::move(out)));
}

Multivector derivation_action(const ExactMatrix& x, const Multivector& w)
{
  const std::size_t n = w.ambient();
  if (x.rows() != n || x.cols() != n)
    throw std::invalid_argument("operator does not act on the multivector's base space");
  std::vector<SparseVector::Entry> out;
  for (const auto& [t, c] : w.terms())
    for (std::size_t p = 0; p < t.size(); ++p)
      for (const auto& [r, xr] : x.column(t[p])) {
        IndexTuple s = t;
        s[p] = static_cast<std::uint32_t>(r);
        int sign = sort_with_sign(s);
        if (sign == 0)
          continue;
        Rational v = c * xr;
        if (sign < 0)
          v = -v;
        out.emplace_back(tuple_rank(s, n), std::move(v));
      }
  return Multivector(n, w.degree(), SparseVector(std::move(out)));
}

Multivector automorphism_action(const ExactMatrix& m, const Multivector& w)
{
  const std::size_t n = w.ambient();
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("operator does not act on the multivector's base space");
  Multivector result(n, w.degree());
  for (const auto& [t, c] : w.terms()) {
    Multivector prod = Multivector(n, 0, SparseVector::unit(0));
    for (auto i : t)
      prod = wedge(prod, Multivector::vector(n, m.column(i)));
    result += c * prod;
  }
  return result;
}

ExactMatrix exterior_derivation_matrix(const ExactMatrix& x, std::size_t degree)
{
  const std::size_t n = x.rows();
  const std::size_t dim = binomial(n, degree);
  std::vector<SparseVector> cols;
  cols.reserve(dim);
  for (std::size_t r = 0; r < dim; ++r)
    cols.push_back(derivation_action(x, Multivector(n, degree, SparseVector::unit(r))).coefficients());
  return ExactMatrix(dim, std::move(cols));
}

} // namespace jloci
