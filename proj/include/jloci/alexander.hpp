#pragma once

#include "jloci/resonance.hpp"

#include <optional>
#include <random>
#include <vector>

namespace jloci {

/// Default cap on the nonzero entries of one graded presentation block.
/// The environment variable JLOCI_MAX_NNZ overrides it.
inline constexpr std::size_t builtin_max_nnz = 2'000'000;
std::size_t default_max_nnz();

/// Dimensions of the graded pieces b_q of the infinitesimal Alexander
/// invariant. The module is generated in degree 0, where b_0 is
/// (second exterior power of H_1)/im(del); b_q corresponds to
/// (H'/H'')_{q+2} of the holonomy Lie algebra.
struct HilbertProfile {
  std::vector<std::size_t> dims;
  /// true where the value follows from an earlier zero instead of a rank
  std::vector<bool> inferred;
  std::size_t qmax = 0;
  bool truncated = false;
  /// first degree skipped because of the resource guard
  std::optional<std::size_t> truncated_at;
  std::size_t max_nnz = 0;

  bool finite() const;
};

/// Sym^q(H_1) (x) second exterior power <- Sym^{q-1} (x) third exterior
/// power (+) Sym^q (x) H_2: the degree-q block of the presentation map.
ExactMatrix presentation_block(const GroupAlgebraData& data, std::size_t q);

HilbertProfile graded_dims(const GroupAlgebraData& data, std::size_t qmax, std::size_t max_nnz = default_max_nnz());

/// The presentation evaluated at z in H^1: delta_3(z) + del, a
/// C(n,2) x (C(n,3) + h2) matrix.
ExactMatrix evaluated_presentation(const GroupAlgebraData& data, std::span<const Rational> z);

/// dim coker(presentation at z) >= k. Uses dense fraction-free elimination,
/// independent of the route taken by resonance_membership.
bool wk_membership(const GroupAlgebraData& data, std::span<const Rational> z, std::size_t k);

struct Discrepancy {
  std::size_t sample;
  std::size_t depth;
  bool wk;
  bool resonance;
};

struct CrosscheckReport {
  std::size_t cases = 0;
  std::size_t positives = 0; // cases where both sides report membership
  std::vector<Discrepancy> discrepancies;
};

/// Compares wk_membership with resonance_membership for every sample and
/// every depth 1..kmax. Throws std::invalid_argument on a zero sample.
CrosscheckReport infares_crosscheck(const GroupAlgebraData& data, std::span<const Point> samples, std::size_t kmax);

/// Random data with 2 <= n <= 5, 0 <= h2 <= 6 and small sparse integer del.
GroupAlgebraData random_algebra_data(std::mt19937_64& rng);
/// Nonzero point with integer coordinates in [-2, 2], about half of them zero.
Point random_sparse_point(std::size_t n, std::mt19937_64& rng);

struct FinitenessResult {
  /// nullopt means unknown: no zero piece appeared within the bound
  std::optional<bool> finite;
  std::optional<std::size_t> vanishing_degree;
  HilbertProfile profile;
};

/// Never claims infinite dimension.
FinitenessResult finiteness_detect(const GroupAlgebraData& data, std::size_t qbound,
                                   std::size_t max_nnz = default_max_nnz());

} // namespace jloci
