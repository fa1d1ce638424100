#include "jloci/symplectic.hpp"

#include <stdexcept>

namespace jloci {

Weight Weight::fundamental(int g, int j)
{
  if (j < 0 || j > g)
    throw std::out_of_range("fundamental weight index out of range");
  Weight w = zero(g);
  for (int i = 0; i < j; ++i)
    w.coeffs[static_cast<std::size_t>(i)] = 1;
  return w;
}

Weight& Weight::operator+=(const Weight& o)
{
  if (coeffs.size() != o.coeffs.size())
    throw std::invalid_argument("weights of different rank");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] += o.coeffs[i];
  return *this;
}

bool Weight::is_zero() const
{
  for (int c : coeffs)
    if (c != 0)
      return false;
  return true;
}

std::string Weight::to_string() const
{
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    int c = coeffs[i];
    if (c == 0)
      continue;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (c != 1 && c != -1)
      s += std::to_string(c < 0 ? -c : c);
    s += 't' + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------

SymplecticSpace::SymplecticSpace(int genus) : g_(genus)
{
  if (genus < 1)
    throw std::invalid_argument("genus must be positive");
}

std::string SymplecticSpace::label(std::size_t index) const
{
  if (index >= dim())
    throw std::out_of_range("basis index out of range");
  auto g = static_cast<std::size_t>(g_);
  return index < g ? "a" + std::to_string(index + 1) : "b" + std::to_string(index - g + 1);
}

int SymplecticSpace::pairing(std::size_t u, std::size_t v) const
{
  auto g = static_cast<std::size_t>(g_);
  if (u < g && v == u + g)
    return 1;
  if (u >= g && v + g == u)
    return -1;
  return 0;
}

Rational SymplecticSpace::pairing(const SparseVector& u, const SparseVector& v) const
{
  Rational s = 0;
  for (const auto& [i, x] : u)
    for (const auto& [j, y] : v)
      if (int p = pairing(i, j))
        s += p * x * y;
  return s;
}

Multivector SymplecticSpace::omega() const
{
  Multivector w(dim(), 2);
  for (int i = 1; i <= g_; ++i)
    w += Multivector::basis(dim(), {a(i), b(i)});
  return w;
}

Weight SymplecticSpace::basis_weight(std::size_t index) const
{
  Weight w = Weight::zero(g_);
  auto g = static_cast<std::size_t>(g_);
  if (index < g)
    w.coeffs[index] = 1;
  else
    w.coeffs[index - g] = -1;
  return w;
}

Weight SymplecticSpace::weight_of_tuple(std::span<const std::uint32_t> tuple) const
{
  Weight w = Weight::zero(g_);
  for (auto i : tuple)
    w += basis_weight(i);
  return w;
}

bool SymplecticSpace::is_infinitesimally_symplectic(const ExactMatrix& x) const
{
  for (std::size_t u = 0; u < dim(); ++u)
    for (std::size_t v = 0; v < dim(); ++v)
      if (pairing(x.column(u), SparseVector::unit(v)) + pairing(SparseVector::unit(u), x.column(v)) != 0)
        return false;
  return true;
}

bool SymplecticSpace::is_symplectic(const ExactMatrix& m) const
{
  for (std::size_t u = 0; u < dim(); ++u)
    for (std::size_t v = 0; v < dim(); ++v)
      if (pairing(m.column(u), m.column(v)) != pairing(u, v))
        return false;
  return true;
}

// ---------------------------------------------------------------------------

bool RepOperator::is_positive_root() const
{
  if (!root)
    return false;
  for (int c : root->coeffs)
    if (c != 0)
      return c > 0;
  return false;
}

namespace {

using Triplets = std::vector<std::tuple<std::size_t, std::size_t, Rational>>;

struct RootVector {
  Weight root;
  Triplets images; // (target, source, coefficient)
};

// Root vectors for the positive roots, in the order
// t_i - t_j (i<j), t_i + t_j (i<j), 2 t_i.
std::vector<RootVector> positive_root_vectors(const SymplecticSpace& h)
{
  const int g = h.genus();
  std::vector<RootVector> out;
  auto root = [&](int i, int ci, int j, int cj) {
    Weight w = Weight::zero(g);
    w.coeffs[static_cast<std::size_t>(i - 1)] += ci;
    w.coeffs[static_cast<std::size_t>(j - 1)] += cj;
    return w;
  };
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j)
      // a_j -> a_i, b_i -> -b_j
      out.push_back({root(i, 1, j, -1), {{h.a(i), h.a(j), 1}, {h.b(j), h.b(i), -1}}});
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j)
      // b_j -> a_i, b_i -> a_j
      out.push_back({root(i, 1, j, 1), {{h.a(i), h.b(j), 1}, {h.a(j), h.b(i), 1}}});
  for (int i = 1; i <= g; ++i)
    // b_i -> a_i
    out.push_back({root(i, 1, i, 1), {{h.a(i), h.b(i), 1}}});
  return out;
}

ExactMatrix exponential(const ExactMatrix& x)
{
  ExactMatrix result = ExactMatrix::identity(x.rows());
  ExactMatrix term = ExactMatrix::identity(x.rows());
  for (int k = 1; k <= static_cast<int>(x.rows()) + 1; ++k) {
    term = Rational(1, k) * (term * x);
    if (term.is_zero())
      return result;
    result = result + term;
  }
  throw std::logic_error("exponential of a non-nilpotent operator");
}

} // namespace

std::vector<RepOperator> sp_generators(int g)
{
  if (g < 2)
    throw std::invalid_argument("sp_g generators need g >= 2");
  SymplecticSpace h(g);
  const std::size_t n = h.dim();
  std::vector<RepOperator> ops;
  for (int k = 1; k <= g; ++k) {
    auto m = ExactMatrix::from_triplets(n, n, {{h.a(k), h.a(k), 1}, {h.b(k), h.b(k), -1}});
    ops.push_back({OperatorKind::LieDerivation, std::move(m), std::nullopt, "h" + std::to_string(k)});
  }
  auto positive = positive_root_vectors(h);
  for (const auto& rv : positive)
    ops.push_back({OperatorKind::LieDerivation, ExactMatrix::from_triplets(n, n, rv.images), rv.root,
                   "X(" + rv.root.to_string() + ")"});
  // negative root vectors are the transposes
  for (const auto& rv : positive) {
    Weight neg = -rv.root;
    ops.push_back({OperatorKind::LieDerivation, ExactMatrix::from_triplets(n, n, rv.images).transpose(), neg,
                   "X(" + neg.to_string() + ")"});
  }
  return ops;
}

std::vector<RepOperator> unipotents(int g)
{
  std::vector<RepOperator> out;
  for (auto& op : sp_generators(g)) {
    if (!op.root)
      continue;
    ExactMatrix m = exponential(op.matrix);
    if (!m.is_integral())
      throw std::logic_error("exponential of a root vector is not integral");
    out.push_back({OperatorKind::GroupAutomorphism, std::move(m), op.root, "exp " + op.name});
  }
  return out;
}

Multivector act(const RepOperator& op, const Multivector& w)
{
  return op.kind == OperatorKind::LieDerivation ? derivation_action(op.matrix, w)
                                                : automorphism_action(op.matrix, w);
}

Weight weight_of(std::span<const RepOperator> cartan, const Multivector& w)
{
  if (w.is_zero())
    throw std::domain_error("the zero vector has no weight");
  Weight out{std::vector<int>(cartan.size(), 0)};
  const auto& lead = w.coefficients().entries().front();
  for (std::size_t k = 0; k < cartan.size(); ++k) {
    Multivector hw = act(cartan[k], w);
    Rational c = hw.coefficients().at(lead.first) / lead.second;
    if (!is_integer(c) || !(hw == c * w))
      throw std::domain_error("vector is not a weight vector");
    out.coeffs[k] = static_cast<int>(c.get_num().get_si());
  }
  return out;
}

std::vector<RepOperator> cartan_part(std::span<const RepOperator> ops)
{
  std::vector<RepOperator> out;
  for (const auto& op : ops)
    if (op.is_cartan())
      out.push_back(op);
  return out;
}

std::vector<RepOperator> positive_part(std::span<const RepOperator> ops)
{
  std::vector<RepOperator> out;
  for (const auto& op : ops)
    if (op.is_positive_root())
      out.push_back(op);
  return out;
}

std::vector<ExactMatrix> matrices(std::span<const RepOperator> ops)
{
  std::vector<ExactMatrix> out;
  out.reserve(ops.size());
  for (const auto& op : ops)
    out.push_back(op.matrix);
  return out;
}

Subspace weight_space(std::span<const ExactMatrix> cartan, const Weight& w)
{
  if (cartan.empty())
    throw std::invalid_argument("no Cartan elements given");
  if (w.coeffs.size() != cartan.size())
    throw std::invalid_argument("weight rank does not match the Cartan subalgebra");
  const std::size_t n = cartan.front().rows();
  std::vector<ExactMatrix> shifted;
  for (std::size_t k = 0; k < cartan.size(); ++k)
    shifted.push_back(cartan[k] - Rational(w.coeffs[k]) * ExactMatrix::identity(n));
  return joint_kernel(shifted, Subspace::full(n));
}

} // namespace jloci
