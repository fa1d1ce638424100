#pragma once

#include "jloci/torelli.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace jloci {

using Point = std::vector<Rational>;

/// Degree-one data of a group: b_1 = n, dim H_2 = h2, and the
/// comultiplication del: H_2 -> second exterior power of H_1, a
/// C(n,2) x h2 matrix in the lexicographic pair basis.
struct GroupAlgebraData {
  std::size_t n = 0;
  std::size_t h2 = 0;
  ExactMatrix del;
  std::string label;

  GroupAlgebraData() = default;
  /// Throws std::invalid_argument when del does not have C(n,2) rows.
  GroupAlgebraData(std::size_t n, ExactMatrix del, std::string label = {});
};

/// Data whose cup-product kernel in the second exterior power of H^1 is the
/// given subspace: im(del) is its annihilator.
GroupAlgebraData data_from_cup_kernel(std::size_t n, const Subspace& cup_kernel, std::string label = {});

GroupAlgebraData free_group_data(std::size_t n);
/// Closed orientable surface of genus g: n = 2g, del spanned by omega.
GroupAlgebraData surface_data(int g);
/// Integer Heisenberg group: n = 2 with vanishing cup product on H^1.
GroupAlgebraData heisenberg_data();
/// F_2 x F_2 with basis x1, x2, y1, y2: im(del) = span{x_i ^ y_j}.
GroupAlgebraData free_product_data();
/// n = 4 with cup kernel spanned by e1*^e2* + e3*^e4*.
GroupAlgebraData indecomposable_form_data();

struct Membership {
  bool member;
  std::size_t h1_dim;
};

/// Matrix of b -> (<a ^ b, del xi>)_xi, one row per column of del.
ExactMatrix multiplication_matrix(const GroupAlgebraData& data, std::span<const Rational> a);

/// Depth-d membership of a in the degree-one resonance variety. For a != 0,
/// h1_dim = dim{b : a^b pairs to zero with im del} - 1; for a = 0 it is n.
Membership resonance_membership(const GroupAlgebraData& data, std::span<const Rational> a, std::size_t depth);

/// Rational point with numerators in [-10, 10] and denominators in [1, 10],
/// never the zero vector. Deterministic for a given engine state.
Point random_point(std::size_t n, std::mt19937_64& rng);

/// H_1 = V, cup kernel W.
GroupAlgebraData torelli_data(const TorelliRep& rep, const WModule& w);
GroupAlgebraData torelli_data(int g);

enum class Verdict { Full, Trivial, Inconclusive };
std::string to_string(Verdict v);

struct TorelliResonanceReport {
  int genus = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Inconclusive;

  std::size_t dim_v = 0;
  std::size_t dim_wedge2 = 0;
  std::size_t dim_top = 0; // spin of u0
  std::size_t dim_w = 0;
  std::size_t rank_del = 0;
  std::string v0_weight, u0_weight, z0_weight;

  std::size_t maximal_vectors_dim = 0;
  bool maximal_vectors_is_v0 = false;

  Membership v0{false, 0};
  /// dim of {b : v0 ^ b in W}, computed against W directly
  std::size_t kernel_mu_v0 = 0;

  std::size_t samples = 0;
  std::size_t sample_members = 0;
  std::vector<std::size_t> sample_h1;

  /// membership of the origin, never used for the verdict
  Membership origin{false, 0};
};

TorelliResonanceReport verify_torelli_resonance(int g, std::uint64_t seed, std::size_t samples = 50);

struct NonvanishingReport {
  int genus = 0;
  bool v0_wedge_u0_zero = false;
  std::size_t v0_wedge_u0_terms = 0;
  /// T_1 = X(2t1) applied to e = (a1^a2^a3) ^ (b1^b2^b3)
  bool t1e_nonzero = false;
  bool t1e_matches_expected = false; // equals (a1^a2^a3) ^ (a1^b2^b3)
  bool e_invariant = false;          // whether e lies on the invariant line
};

NonvanishingReport nonvanishing_checks(int g);

} // namespace jloci
