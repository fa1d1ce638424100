#include "jloci/torelli.hpp"

#include <stdexcept>
#include <string>

namespace jloci {

SparseVector contraction(const SymplecticSpace& h, const Multivector& w)
{
  if (w.degree() != 3 || w.ambient() != h.dim())
    throw std::invalid_argument("contraction needs a degree-3 element over H");
  std::vector<SparseVector::Entry> out;
  for (const auto& [t, c] : w.terms()) {
    const auto x = t[0], y = t[1], z = t[2];
    if (int p = h.pairing(x, y))
      out.emplace_back(z, c * p);
    if (int p = h.pairing(y, z))
      out.emplace_back(x, c * p);
    if (int p = h.pairing(z, x))
      out.emplace_back(y, c * p);
  }
  return SparseVector(std::move(out));
}

ExactMatrix contraction_matrix(const SymplecticSpace& h)
{
  const std::size_t n = h.dim();
  const std::size_t d = binomial(n, 3);
  std::vector<SparseVector> cols;
  cols.reserve(d);
  for (std::size_t r = 0; r < d; ++r)
    cols.push_back(contraction(h, Multivector(n, 3, SparseVector::unit(r))));
  return ExactMatrix(n, std::move(cols));
}

Multivector wedge_omega(const SymplecticSpace& h, const SparseVector& x)
{
  return wedge(Multivector::vector(h.dim(), x), h.omega());
}

// ---------------------------------------------------------------------------

namespace {

std::vector<RepOperator> restrict_to_lprime(const TorelliRep& rep, const std::vector<RepOperator>& ops)
{
  std::vector<RepOperator> out;
  out.reserve(ops.size());
  for (const auto& op : ops) {
    std::vector<SparseVector> cols;
    cols.reserve(rep.dim());
    for (std::size_t j = 0; j < rep.dim(); ++j)
      cols.push_back(rep.coordinates(act(op, rep.lift(SparseVector::unit(j)))));
    out.push_back({op.kind, ExactMatrix(rep.dim(), std::move(cols)), op.root, op.name});
  }
  return out;
}

} // namespace

TorelliRep TorelliRep::build(int g)
{
  if (g < 3)
    throw std::invalid_argument("the Torelli representation needs g >= 3");
  TorelliRep rep(g);
  const SymplecticSpace& h = rep.space_;
  const std::size_t n3 = binomial(h.dim(), 3);

  rep.lprime_ = rank_kernel(contraction_matrix(h)).kernel;

  // third exterior power = L' (+) H ^ omega
  std::vector<SparseVector> omega_part;
  for (std::size_t i = 0; i < h.dim(); ++i)
    omega_part.push_back(wedge_omega(h, SparseVector::unit(i)).coefficients());
  Subspace hw = Subspace::span(n3, omega_part);
  if (rep.lprime_.dim() + hw.dim() != n3 || (rep.lprime_ + hw).dim() != n3)
    throw std::logic_error("L' and H^omega do not split the third exterior power");

  rep.h_generators_ = sp_generators(g);
  rep.h_unipotents_ = jloci::unipotents(g);
  auto cartan = cartan_part(rep.h_generators_);
  for (const auto& b : rep.lprime_.basis())
    rep.weights_.push_back(weight_of(cartan, Multivector(h.dim(), 3, b)));

  rep.generators_ = restrict_to_lprime(rep, rep.h_generators_);
  rep.unipotents_ = restrict_to_lprime(rep, rep.h_unipotents_);
  return rep;
}

SparseVector TorelliRep::coordinates(const Multivector& w3) const
{
  if (w3.degree() != 3 || w3.ambient() != space_.dim())
    throw std::invalid_argument("expected a degree-3 element over H");
  return lprime_.coordinates(w3.coefficients());
}

Multivector TorelliRep::lift(const SparseVector& v) const
{
  return Multivector(space_.dim(), 3, lprime_.combine(v));
}

std::vector<ExactMatrix> TorelliRep::wedge2_generators() const
{
  std::vector<ExactMatrix> out;
  out.reserve(generators_.size());
  for (const auto& op : generators_)
    out.push_back(exterior_derivation_matrix(op.matrix, 2));
  return out;
}

// ---------------------------------------------------------------------------

Subspace maximal_vectors(std::span<const ExactMatrix> positive, const Subspace& space)
{
  if (!is_invariant(positive, space))
    throw std::invalid_argument("space is not invariant under the raising operators");
  return joint_kernel(positive, space);
}

DistinguishedVectors distinguished_vectors(const TorelliRep& rep)
{
  const auto& h = rep.space();
  const int g = h.genus();
  Multivector v0 = rep.element({h.a(1), h.a(2), h.a(3)});
  Multivector u0(rep.dim(), 2);
  for (int k = 3; k <= g; ++k)
    u0 += wedge(rep.element({h.a(1), h.a(2), h.a(k)}), rep.element({h.a(1), h.a(2), h.b(k)}));
  auto cartan = cartan_part(rep.generators());
  Weight wv = weight_of(cartan, v0);
  Weight wu = weight_of(cartan, u0);
  return {std::move(v0), std::move(u0), std::move(wv), std::move(wu)};
}

WModule build_W(const TorelliRep& rep)
{
  const std::size_t n2 = binomial(rep.dim(), 2);
  WModule m;
  m.wedge2_ops = rep.wedge2_generators();

  auto dv = distinguished_vectors(rep);
  std::vector<SparseVector> seed{dv.u0.coefficients()};
  m.top = spin(m.wedge2_ops, seed, n2);

  std::vector<ExactMatrix> cartan, roots;
  for (std::size_t k = 0; k < rep.generators().size(); ++k)
    (rep.generators()[k].is_cartan() ? cartan : roots).push_back(m.wedge2_ops[k]);
  Subspace weight_zero = joint_kernel(cartan, Subspace::full(n2));
  Subspace invariants = joint_kernel(roots, weight_zero);
  if (invariants.dim() != 1)
    throw std::runtime_error("expected a one-dimensional space of sp_g-invariants in the second exterior power, found " +
                             std::to_string(invariants.dim()));
  m.z0 = Multivector(rep.dim(), 2, invariants.basis().front());

  m.w = m.top + invariants;
  if (m.w.dim() != m.top.dim() + 1)
    throw std::logic_error("the invariant line lies inside the spin of u0");
  if (!is_invariant(m.wedge2_ops, m.w))
    throw std::logic_error("W is not invariant under sp_g");
  return m;
}

} // namespace jloci
