#include "jloci/resonance.hpp"

#include "jloci/modular.hpp"

#include <stdexcept>

namespace jloci {

GroupAlgebraData::GroupAlgebraData(std::size_t n_, ExactMatrix del_, std::string label_)
    : n(n_), h2(del_.cols()), del(std::move(del_)), label(std::move(label_))
{
  if (del.rows() != binomial(n, 2))
    throw std::invalid_argument("comultiplication matrix must have C(n,2) rows");
}

GroupAlgebraData data_from_cup_kernel(std::size_t n, const Subspace& cup_kernel, std::string label)
{
  if (cup_kernel.ambient() != binomial(n, 2))
    throw std::invalid_argument("cup kernel must live in the second exterior power");
  Subspace image = cup_kernel.annihilator();
  return GroupAlgebraData(n, ExactMatrix(binomial(n, 2), image.basis()), std::move(label));
}

GroupAlgebraData free_group_data(std::size_t n)
{
  return GroupAlgebraData(n, ExactMatrix(binomial(n, 2), 0), "free group F_" + std::to_string(n));
}

GroupAlgebraData surface_data(int g)
{
  SymplecticSpace h(g);
  return GroupAlgebraData(h.dim(), ExactMatrix(binomial(h.dim(), 2), {h.omega().coefficients()}),
                          "surface group of genus " + std::to_string(g));
}

GroupAlgebraData heisenberg_data()
{
  return GroupAlgebraData(2, ExactMatrix(1, 2), "Heisenberg group");
}

GroupAlgebraData free_product_data()
{
  // x1, x2, y1, y2 = 0, 1, 2, 3
  std::vector<SparseVector> cols;
  for (std::uint32_t i : {0u, 1u})
    for (std::uint32_t j : {2u, 3u})
      cols.push_back(Multivector::basis(4, {i, j}).coefficients());
  return GroupAlgebraData(4, ExactMatrix(6, std::move(cols)), "F_2 x F_2");
}

GroupAlgebraData indecomposable_form_data()
{
  Multivector form = Multivector::basis(4, {0, 1}) + Multivector::basis(4, {2, 3});
  std::vector<SparseVector> kernel{form.coefficients()};
  return data_from_cup_kernel(4, Subspace::span(6, kernel), "indecomposable two-form, n = 4");
}

// ---------------------------------------------------------------------------

ExactMatrix multiplication_matrix(const GroupAlgebraData& data, std::span<const Rational> a)
{
  if (a.size() != data.n)
    throw std::invalid_argument("point has the wrong number of coordinates");
  const auto pairs = all_tuples(data.n, 2);
  std::vector<SparseVector> rows;
  rows.reserve(data.h2);
  for (const auto& xi : data.del.columns()) {
    // <e_i ^ e_b, e^p ^ e^q> = [i=p][b=q] - [i=q][b=p]
    std::vector<SparseVector::Entry> row;
    for (const auto& [r, c] : xi) {
      const auto p = pairs[r][0], q = pairs[r][1];
      if (a[p] != 0)
        row.emplace_back(q, c * a[p]);
      if (a[q] != 0)
        row.emplace_back(p, -c * a[q]);
    }
    rows.emplace_back(std::move(row));
  }
  return ExactMatrix::from_rows(data.n, rows);
}

Membership resonance_membership(const GroupAlgebraData& data, std::span<const Rational> a, std::size_t depth)
{
  if (a.size() != data.n)
    throw std::invalid_argument("point has the wrong number of coordinates");
  if (depth < 1)
    throw std::invalid_argument("depth must be at least 1");
  bool zero = true;
  for (const auto& x : a)
    if (x != 0)
      zero = false;
  if (zero)
    return {data.n >= depth, data.n};

  ExactMatrix m = multiplication_matrix(data, a);
  // a is always in the kernel, so n - 1 bounds the rank; a modular rank that
  // reaches the bound certifies it
  std::size_t r = rank_mod_p(m);
  if (r != data.n - 1)
    r = rank_kernel(m).rank;
  std::size_t h1 = data.n - 1 - r;
  return {h1 >= depth, h1};
}

Point random_point(std::size_t n, std::mt19937_64& rng)
{
  Point a(n);
  for (;;) {
    bool zero = true;
    for (auto& x : a) {
      long num = static_cast<long>(rng() % 21) - 10;
      long den = static_cast<long>(rng() % 10) + 1;
      x = Rational(num, den);
      x.canonicalize();
      if (num != 0)
        zero = false;
    }
    if (!zero)
      return a;
  }
}

GroupAlgebraData torelli_data(const TorelliRep& rep, const WModule& w)
{
  return data_from_cup_kernel(rep.dim(), w.w, "Torelli group, genus " + std::to_string(rep.genus()));
}

GroupAlgebraData torelli_data(int g)
{
  auto rep = TorelliRep::build(g);
  return torelli_data(rep, build_W(rep));
}

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::Full:
    return "FULL";
  case Verdict::Trivial:
    return "TRIVIAL";
  case Verdict::Inconclusive:
    break;
  }
  return "INCONCLUSIVE";
}

TorelliResonanceReport verify_torelli_resonance(int g, std::uint64_t seed, std::size_t samples)
{
  TorelliResonanceReport rep_out;
  rep_out.genus = g;
  rep_out.seed = seed;

  auto rep = TorelliRep::build(g);
  auto w = build_W(rep);
  auto dv = distinguished_vectors(rep);
  auto data = torelli_data(rep, w);
  auto cartan = cartan_part(rep.generators());

  rep_out.dim_v = rep.dim();
  rep_out.dim_wedge2 = binomial(rep.dim(), 2);
  rep_out.dim_top = w.top.dim();
  rep_out.dim_w = w.w.dim();
  rep_out.rank_del = rank(data.del);
  rep_out.v0_weight = dv.v0_weight.to_string();
  rep_out.u0_weight = dv.u0_weight.to_string();
  rep_out.z0_weight = weight_of(cartan, w.z0).to_string();

  // an invariant closed cone that is nonzero contains a maximal vector
  auto positive = matrices(positive_part(rep.generators()));
  Subspace maximal = maximal_vectors(positive, Subspace::full(rep.dim()));
  std::vector<SparseVector> v0_span{dv.v0.coefficients()};
  rep_out.maximal_vectors_dim = maximal.dim();
  rep_out.maximal_vectors_is_v0 = maximal == Subspace::span(rep.dim(), v0_span);

  Point v0 = dv.v0.coefficients().to_dense(rep.dim());
  rep_out.v0 = resonance_membership(data, v0, 1);

  std::vector<SparseVector> images;
  for (std::size_t b = 0; b < rep.dim(); ++b)
    images.push_back(w.w.reduce(wedge(dv.v0, Multivector::vector(rep.dim(), SparseVector::unit(b))).coefficients()));
  rep_out.kernel_mu_v0 = rank_kernel(ExactMatrix(rep_out.dim_wedge2, std::move(images))).kernel.dim();

  std::mt19937_64 rng(seed);
  rep_out.samples = samples;
  bool all_members = true, no_members = true;
  for (std::size_t i = 0; i < samples; ++i) {
    auto m = resonance_membership(data, random_point(rep.dim(), rng), 1);
    rep_out.sample_h1.push_back(m.h1_dim);
    if (m.member) {
      ++rep_out.sample_members;
      no_members = false;
    } else {
      all_members = false;
    }
  }
  rep_out.origin = resonance_membership(data, Point(rep.dim()), 1);

  const bool w_full = rep_out.dim_w == rep_out.dim_wedge2;
  if (all_members && rep_out.v0.member && w_full)
    rep_out.verdict = Verdict::Full;
  else if (!rep_out.v0.member && rep_out.maximal_vectors_is_v0 && no_members)
    rep_out.verdict = Verdict::Trivial;
  else
    rep_out.verdict = Verdict::Inconclusive;
  return rep_out;
}

NonvanishingReport nonvanishing_checks(int g)
{
  NonvanishingReport out;
  out.genus = g;
  auto rep = TorelliRep::build(g);
  auto dv = distinguished_vectors(rep);
  const auto& h = rep.space();

  Multivector vu = wedge(dv.v0, dv.u0);
  out.v0_wedge_u0_zero = vu.is_zero();
  out.v0_wedge_u0_terms = vu.coefficients().size();

  Multivector top = rep.element({h.a(1), h.a(2), h.a(3)});
  Multivector e = wedge(top, rep.element({h.b(1), h.b(2), h.b(3)}));
  Multivector expected = wedge(top, rep.element({h.a(1), h.b(2), h.b(3)}));

  Weight two_t1 = Weight::zero(g);
  two_t1.coeffs[0] = 2;
  const RepOperator* t1 = nullptr;
  for (const auto& op : rep.generators())
    if (op.root && *op.root == two_t1)
      t1 = &op;
  if (!t1)
    throw std::logic_error("no root vector for 2t1");
  Multivector t1e = act(*t1, e);
  out.t1e_nonzero = !t1e.is_zero();
  out.t1e_matches_expected = t1e == expected;

  auto w = build_W(rep);
  std::vector<SparseVector> z{w.z0.coefficients()};
  out.e_invariant = Subspace::span(w.z0.space_dim(), z).contains(e.coefficients());
  return out;
}

} // namespace jloci
