#include "jloci/torus.hpp"

#include "jloci/modular.hpp"
#include "jloci/torelli.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jloci {

LatticeAction LatticeAction::transposed() const
{
  LatticeAction t = *this;
  for (auto& m : t.matrices)
    m = m.transpose();
  for (auto& m : t.inverses)
    m = m.transpose();
  return t;
}

ExactMatrix exterior_power_matrix(const ExactMatrix& m, std::size_t degree)
{
  const std::size_t n = m.rows();
  std::vector<SparseVector> cols;
  for (const auto& t : all_tuples(n, degree))
    cols.push_back(automorphism_action(m, Multivector::basis(n, t)).coefficients());
  return ExactMatrix(binomial(n, degree), std::move(cols));
}

namespace {

// pi(v) = v restricted to the free columns minus the pivot rows it hits
SparseVector project(const Subspace& sub, const std::vector<std::size_t>& free_pos, const SparseVector& v)
{
  SparseVector r = sub.reduce(v);
  std::vector<SparseVector::Entry> out;
  out.reserve(r.size());
  for (const auto& [i, c] : r)
    out.emplace_back(free_pos[i], c);
  return SparseVector(std::move(out));
}

ExactMatrix induced_matrix(const Subspace& sub, const std::vector<std::size_t>& free,
                           const std::vector<std::size_t>& free_pos, const ExactMatrix& ambient)
{
  std::vector<SparseVector> cols;
  cols.reserve(free.size());
  for (auto f : free)
    cols.push_back(project(sub, free_pos, ambient.column(f)));
  ExactMatrix m(free.size(), std::move(cols));
  if (!m.is_integral())
    throw std::logic_error("induced matrix is not integral");
  return m;
}

} // namespace

InducedAction induced_action(int g)
{
  if (g < 3)
    throw std::invalid_argument("induced_action needs genus >= 3");
  SymplecticSpace h(g);
  const std::size_t n3 = binomial(h.dim(), 3);

  std::vector<SparseVector> gens;
  for (std::size_t i = 0; i < h.dim(); ++i)
    gens.push_back(wedge_omega(h, SparseVector::unit(i)).coefficients());
  Subspace sub = Subspace::span(n3, gens);
  if (sub.dim() != h.dim())
    throw std::logic_error("H ^ omega has the wrong rank");
  for (const auto& row : sub.basis())
    for (const auto& [i, c] : row)
      if (!is_integer(c))
        throw std::logic_error("H ^ omega is not saturated");
  // the generators restricted to the pivot columns must be unimodular, so
  // that their Z-span equals the Z-span of the echelon rows
  {
    std::vector<SparseVector> rows;
    for (const auto& gvec : gens) {
      std::vector<SparseVector::Entry> e;
      for (std::size_t k = 0; k < sub.pivots().size(); ++k) {
        Rational c = gvec.at(sub.pivots()[k]);
        if (c != 0)
          e.emplace_back(k, c);
      }
      rows.emplace_back(std::move(e));
    }
    Integer det = integer_determinant(ExactMatrix::from_rows(sub.pivots().size(), rows));
    if (abs(det) != 1)
      throw std::logic_error("H ^ omega generators are not a lattice basis");
  }

  InducedAction ia;
  ia.genus = g;
  std::vector<bool> is_pivot(n3, false);
  for (auto p : sub.pivots())
    is_pivot[p] = true;
  std::vector<std::size_t> free_pos(n3, 0);
  for (std::size_t m = 0; m < n3; ++m)
    if (!is_pivot[m]) {
      free_pos[m] = ia.basis_monomials.size();
      ia.basis_monomials.push_back(m);
    }
  const std::size_t r = ia.basis_monomials.size();

  {
    std::vector<SparseVector> cols;
    for (std::size_t m = 0; m < n3; ++m)
      cols.push_back(project(sub, free_pos, SparseVector::unit(m)));
    ia.projection = ExactMatrix(r, std::move(cols));
  }

  LatticeAction& act = ia.action;
  act.rank = r;
  const auto identity = ExactMatrix::identity(h.dim());
  for (const auto& u : unipotents(g)) {
    // exp(X)^{-1} = exp(-X) = 2 - exp(X), as X^2 = 0
    ExactMatrix inv = Rational(2) * identity - u.matrix;
    if (!(u.matrix * inv == identity))
      throw std::logic_error("unipotent inverse check failed");
    ExactMatrix amb = exterior_power_matrix(u.matrix, 3);
    ExactMatrix amb_inv = exterior_power_matrix(inv, 3);
    if (u.is_positive_root())
      act.unipotent_subset.push_back(act.matrices.size());
    act.matrices.push_back(induced_matrix(sub, ia.basis_monomials, free_pos, amb));
    act.inverses.push_back(induced_matrix(sub, ia.basis_monomials, free_pos, amb_inv));
    act.labels.push_back(u.name);
    ia.ambient_matrices.push_back(std::move(amb));
  }
  return ia;
}

bool commuting_diagram_holds(const InducedAction& ia)
{
  for (std::size_t i = 0; i < ia.action.matrices.size(); ++i)
    if (!(ia.projection * ia.ambient_matrices[i] == ia.action.matrices[i] * ia.projection))
      return false;
  return true;
}

TorsionPoint::TorsionPoint(std::int64_t denominator, std::vector<std::int64_t> numerators)
    : den_(denominator), num_(std::move(numerators))
{
  if (den_ <= 0)
    throw std::invalid_argument("torsion point denominator must be positive");
  std::int64_t g = den_;
  for (auto& x : num_) {
    x %= den_;
    if (x < 0)
      x += den_;
    g = std::gcd(g, x);
  }
  den_ /= g;
  for (auto& x : num_)
    x /= g;
}

TorsionPoint TorsionPoint::from_rationals(std::span<const Rational> coords)
{
  Integer lcm = 1;
  for (const auto& q : coords)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  if (!lcm.fits_slong_p())
    throw std::overflow_error("torsion point order too large");
  std::vector<std::int64_t> num;
  num.reserve(coords.size());
  for (const auto& q : coords) {
    // reduce mod lcm before converting so huge integers are harmless
    Integer x = q.get_num() * (lcm / q.get_den());
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), lcm.get_mpz_t());
    num.push_back(x.get_si());
  }
  return TorsionPoint(lcm.get_si(), std::move(num));
}

std::vector<Rational> TorsionPoint::coordinates() const
{
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (auto x : num_) {
    Rational q(static_cast<long>(x), static_cast<long>(den_));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

TorsionPoint random_torsion_point(std::size_t rank, std::int64_t m, std::mt19937_64& rng)
{
  if (m < 1)
    throw std::invalid_argument("torsion order must be positive");
  if (m > 1 && rank == 0)
    throw std::invalid_argument("no point of order > 1 in rank 0");
  for (;;) {
    std::vector<std::int64_t> num(rank);
    for (auto& x : num)
      x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
    TorsionPoint t(m, std::move(num));
    if (t.order() == m)
      return t;
  }
}

namespace {

using DenseInt = std::vector<std::vector<std::int64_t>>;

DenseInt dense_transpose(const ExactMatrix& m)
{
  if (!m.is_integral())
    throw std::invalid_argument("lattice action matrices must be integral");
  DenseInt d(m.cols(), std::vector<std::int64_t>(m.rows(), 0));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, c] : m.column(j)) {
      if (!c.get_num().fits_slong_p())
        throw std::overflow_error("matrix entry too large");
      d[j][i] = c.get_num().get_si();
    }
  return d;
}

TorsionPoint apply_dense(const DenseInt& t, const TorsionPoint& p)
{
  const std::int64_t n = p.denominator();
  const auto& x = p.numerators();
  std::vector<std::int64_t> y(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (t[i][j] != 0)
        acc = (acc + static_cast<__int128>(t[i][j]) * x[j]) % n;
    y[i] = static_cast<std::int64_t>(acc);
  }
  return TorsionPoint(n, std::move(y));
}

// transport by generator i is (M_i^{-1})^T; by its inverse, M_i^T
struct Transports {
  explicit Transports(const LatticeAction& a)
  {
    for (std::size_t i = 0; i < a.matrices.size(); ++i) {
      forward.push_back(dense_transpose(a.inverses.at(i)));
      backward.push_back(dense_transpose(a.matrices[i]));
    }
  }
  std::vector<DenseInt> forward, backward;
};

void check_rank(const LatticeAction& a, const TorsionPoint& t)
{
  if (t.rank() != a.rank)
    throw std::invalid_argument("torsion point rank does not match the lattice");
}

} // namespace

TorsionPoint transport(const LatticeAction& action, std::size_t generator, const TorsionPoint& t, bool inverse)
{
  check_rank(action, t);
  const ExactMatrix& m = inverse ? action.matrices.at(generator) : action.inverses.at(generator);
  return apply_dense(dense_transpose(m), t);
}

Orbit orbit(const LatticeAction& action, const TorsionPoint& t, std::size_t cap)
{
  if (cap == 0)
    throw std::invalid_argument("orbit cap must be positive");
  check_rank(action, t);
  Transports tr(action);
  std::set<TorsionPoint> seen{t};
  std::deque<TorsionPoint> frontier{t};
  Orbit out;
  while (!frontier.empty() && !out.truncated) {
    TorsionPoint p = std::move(frontier.front());
    frontier.pop_front();
    for (const auto* family : {&tr.forward, &tr.backward})
      for (const auto& m : *family) {
        TorsionPoint q = apply_dense(m, p);
        if (seen.contains(q))
          continue;
        if (seen.size() == cap) {
          out.truncated = true;
          break;
        }
        seen.insert(q);
        frontier.push_back(std::move(q));
      }
  }
  out.points.assign(seen.begin(), seen.end());
  return out;
}

bool invariant_set_check(const LatticeAction& action, std::span<const TorsionPoint> set)
{
  std::set<TorsionPoint> s(set.begin(), set.end());
  for (const auto& p : s)
    check_rank(action, p);
  Transports tr(action);
  for (const auto& m : tr.forward)
    for (const auto& p : s)
      if (!s.contains(apply_dense(m, p)))
        return false;
  return true;
}

std::vector<TorsionPoint> full_torsion_subgroup(std::size_t rank, std::int64_t m, std::size_t max_points)
{
  if (m < 1)
    throw std::invalid_argument("torsion order must be positive");
  std::size_t total = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    if (total > max_points / static_cast<std::size_t>(m))
      throw std::length_error("torsion subgroup too large to enumerate");
    total *= static_cast<std::size_t>(m);
  }
  std::vector<TorsionPoint> out;
  out.reserve(total);
  std::vector<std::int64_t> num(rank, 0);
  for (std::size_t k = 0; k < total; ++k) {
    out.emplace_back(m, num);
    for (std::size_t i = rank; i-- > 0;) {
      if (++num[i] < m)
        break;
      num[i] = 0;
    }
  }
  return out;
}

bool full_torsion_invariant(const LatticeAction& action, std::int64_t m)
{
  if (m < 1)
    throw std::invalid_argument("torsion order must be positive");
  for (const auto& inv : action.inverses) {
    if (!inv.is_integral())
      return false;
    Integer det = integer_determinant(inv);
    Integer g;
    mpz_gcd_ui(g.get_mpz_t(), det.get_mpz_t(), static_cast<unsigned long>(m));
    if (g != 1)
      return false;
  }
  return true;
}

namespace {

SparseVector random_vector(std::size_t n, std::mt19937_64& rng)
{
  for (;;) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t i = 0; i < n; ++i) {
      long v = static_cast<long>(rng() % 11) - 5;
      if (v != 0)
        e.emplace_back(i, v);
    }
    if (!e.empty())
      return SparseVector(std::move(e));
  }
}

// Ascending chain F_{k+1} = {v : (M - 1)v in F_k for all M}. Reaching the
// whole space means the group is unitriangular in a common flag.
bool unipotent_flag(const std::vector<ExactMatrix>& nilpotent, std::size_t n, Subspace& fixed)
{
  Subspace f = Subspace::zero(n);
  for (std::size_t step = 0; step <= n; ++step) {
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<SparseVector::Entry> stacked;
      for (std::size_t i = 0; i < nilpotent.size(); ++i)
        for (const auto& [k, c] : f.reduce(nilpotent[i].column(j)))
          stacked.emplace_back(i * n + k, c);
      cols.emplace_back(std::move(stacked));
    }
    Subspace next = rank_kernel(ExactMatrix(nilpotent.size() * n, std::move(cols))).kernel;
    if (step == 0)
      fixed = next;
    if (next.dim() == n)
      return true;
    if (next == f)
      return false;
    f = std::move(next);
  }
  return false;
}

} // namespace

IrreducibilityResult irreducibility_witness(const LatticeAction& action, std::size_t trials, std::uint64_t seed)
{
  if (trials < 1)
    throw std::invalid_argument("trials must be at least 1");
  const std::size_t n = action.rank;
  IrreducibilityResult res;
  res.rank = n;
  if (n == 0)
    return res;

  std::vector<ExactMatrix> transposes;
  for (const auto& m : action.matrices)
    transposes.push_back(m.transpose());

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    res.trials_used = t + 1;
    SparseVector v = random_vector(n, rng);
    SparseVector w = random_vector(n, rng);
    res.vector_spin_dim = spin(action.matrices, std::span(&v, 1), n).dim();
    res.covector_spin_dim = spin(transposes, std::span(&w, 1), n).dim();
    if (res.vector_spin_dim == n && res.covector_spin_dim == n)
      break;
  }
  if (res.vector_spin_dim != n || res.covector_spin_dim != n || action.unipotent_subset.empty())
    return res;

  std::vector<ExactMatrix> nilpotent;
  const auto id = ExactMatrix::identity(n);
  for (auto i : action.unipotent_subset)
    nilpotent.push_back(action.matrices.at(i) - id);
  Subspace fixed;
  res.unipotent_flag_ok = unipotent_flag(nilpotent, n, fixed);
  res.fixed_dim = fixed.dim();
  res.fixed_spin_dim = spin(action.matrices, fixed.basis(), n).dim();
  if (res.unipotent_flag_ok && res.fixed_dim == 1 && res.fixed_spin_dim == n)
    res.irreducible = true;
  return res;
}

} // namespace jloci
