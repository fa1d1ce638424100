#include "jloci/modular.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jloci {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

} // namespace

std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p)
{
  std::vector<ModRow> pivots(m.cols());
  std::vector<bool> has_pivot(m.cols(), false);
  std::size_t rank = 0;

  for (const auto& row : m.row_vectors()) {
    if (row.empty())
      continue;
    Integer lcm = 1;
    for (const auto& e : row)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.second.get_den_mpz_t());
    ModRow r;
    for (const auto& [j, c] : row) {
      Integer v = c.get_num() * (lcm / c.get_den());
      auto residue = static_cast<std::uint64_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
      if (residue)
        r.emplace_back(j, residue);
    }
    // semi-echelon reduction; rows stay sorted by column
    std::size_t pos = 0;
    while (pos < r.size()) {
      if (!has_pivot[r[pos].first]) {
        ++pos;
        continue;
      }
      const ModRow& piv = pivots[r[pos].first];
      std::uint64_t f = r[pos].second;
      ModRow out;
      out.reserve(r.size() + piv.size());
      std::copy(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos), std::back_inserter(out));
      auto a = r.begin() + static_cast<std::ptrdiff_t>(pos);
      auto b = piv.begin();
      while (a != r.end() || b != piv.end()) {
        if (b == piv.end() || (a != r.end() && a->first < b->first)) {
          out.push_back(*a++);
        } else if (a == r.end() || b->first < a->first) {
          out.emplace_back(b->first, (p - f * b->second % p) % p);
          ++b;
        } else {
          std::uint64_t v = (a->second + p - f * b->second % p) % p;
          if (v)
            out.emplace_back(a->first, v);
          ++a;
          ++b;
        }
      }
      r = std::move(out);
    }
    if (r.empty())
      continue;
    std::uint64_t inv = pow_mod(r.front().second, p - 2, p);
    for (auto& e : r)
      e.second = e.second * inv % p;
    has_pivot[r.front().first] = true;
    pivots[r.front().first] = std::move(r);
    ++rank;
  }
  return rank;
}

std::size_t bareiss_rank(const ExactMatrix& m)
{
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    // clear denominators of row i
    Integer lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      Rational q = m.entry(i, j);
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      Rational q = m.entry(i, j);
      a[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Integer integer_determinant(const ExactMatrix& m)
{
  if (m.rows() != m.cols() || !m.is_integral())
    throw std::invalid_argument("determinant needs a square integral matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, v] : m.column(j))
      a[i][j] = v.get_num();

  Integer prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a[i][j] = a[c][c] * a[i][j] - a[i][c] * a[c][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return n == 0 ? Integer(1) : Integer(sign * prev);
}

} // namespace jloci
