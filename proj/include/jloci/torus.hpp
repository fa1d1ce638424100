#pragma once

#include "jloci/symplectic.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace jloci {

/// Integral action on a lattice of rank r, given by generators with their
/// inverses. The character torus Hom(L, C*) is acted on by transport.
struct LatticeAction {
  std::size_t rank = 0;
  std::vector<ExactMatrix> matrices;
  std::vector<ExactMatrix> inverses;
  std::vector<std::string> labels;
  /// Indices of generators that together generate a unipotent group; used
  /// by irreducibility_witness. May be empty.
  std::vector<std::size_t> unipotent_subset;

  /// Same lattice, every matrix replaced by its transpose (and the unipotent
  /// subset kept).
  LatticeAction transposed() const;
};

/// L = (third exterior power of H) / (H ^ omega) over Z, with the induced
/// action of exp(X_alpha) for every root. The basis of L is the set of
/// non-pivot monomials of the reduced echelon form of H ^ omega.
struct InducedAction {
  int genus = 0;
  LatticeAction action;
  /// Monomials a^b^c (tuple ranks) forming the basis of L.
  std::vector<std::size_t> basis_monomials;
  /// Projection Z^{C(2g,3)} -> L, an r x C(2g,3) integral matrix.
  ExactMatrix projection;
  /// Unipotents on the third exterior power, same order as the action.
  std::vector<ExactMatrix> ambient_matrices;
};

/// Throws std::invalid_argument for g < 3 and std::logic_error if an induced
/// matrix fails to be integral or the quotient is not a lattice.
InducedAction induced_action(int g);

/// projection * ambient == induced * projection for every generator.
bool commuting_diagram_holds(const InducedAction& ia);

/// Matrix of M acting on the degree-k exterior power by automorphisms.
ExactMatrix exterior_power_matrix(const ExactMatrix& m, std::size_t degree);

/// Point of finite order of (R/Z)^r, stored as numerators over a common
/// denominator. Canonical: numerators in [0, denominator) and the
/// denominator is the order of the point.
class TorsionPoint {
public:
  TorsionPoint() = default;
  /// Reduces modulo 1 and to lowest common denominator.
  TorsionPoint(std::int64_t denominator, std::vector<std::int64_t> numerators);
  static TorsionPoint from_rationals(std::span<const Rational> coords);
  static TorsionPoint zero(std::size_t rank) { return {1, std::vector<std::int64_t>(rank, 0)}; }

  std::size_t rank() const { return num_.size(); }
  std::int64_t order() const { return den_; }
  std::int64_t denominator() const { return den_; }
  const std::vector<std::int64_t>& numerators() const { return num_; }
  std::vector<Rational> coordinates() const;

  friend auto operator<=>(const TorsionPoint&, const TorsionPoint&) = default;

private:
  std::int64_t den_ = 1;
  std::vector<std::int64_t> num_;
};

/// Uniform point of exact order m (m >= 1).
TorsionPoint random_torsion_point(std::size_t rank, std::int64_t m, std::mt19937_64& rng);

/// Character transport t -> t o M^{-1}, i.e. exponents -> (M^{-1})^T exponents
/// mod 1. inverse = true applies M^{-1} instead of M.
TorsionPoint transport(const LatticeAction& action, std::size_t generator, const TorsionPoint& t,
                       bool inverse = false);

inline constexpr std::size_t default_orbit_cap = 100'000;

struct Orbit {
  /// sorted
  std::vector<TorsionPoint> points;
  bool truncated = false;
};

/// Breadth-first closure under generators and inverses. Throws
/// std::invalid_argument for cap == 0.
Orbit orbit(const LatticeAction& action, const TorsionPoint& t, std::size_t cap = default_orbit_cap);

/// true iff every generator maps the set into (hence onto) itself.
bool invariant_set_check(const LatticeAction& action, std::span<const TorsionPoint> set);

/// Every point of order dividing m, in lexicographic order of numerators.
/// Throws std::length_error beyond max_points.
std::vector<TorsionPoint> full_torsion_subgroup(std::size_t rank, std::int64_t m,
                                                std::size_t max_points = 1'000'000);

/// The m-torsion subgroup is invariant iff each transport matrix is integral
/// and invertible mod m. Decided without enumerating the subgroup.
bool full_torsion_invariant(const LatticeAction& action, std::int64_t m);

struct IrreducibilityResult {
  /// true is a certificate; nullopt means inconclusive. Never false.
  std::optional<bool> irreducible;
  std::size_t rank = 0;
  std::size_t trials_used = 0;
  std::size_t vector_spin_dim = 0;
  std::size_t covector_spin_dim = 0;
  /// joint fixed space of the unipotent subset, when that subset exists
  std::optional<std::size_t> fixed_dim;
  std::optional<std::size_t> fixed_spin_dim;
  bool unipotent_flag_ok = false;
};

/// Irreducibility of the action on L (x) Q. Random vector and covector spins
/// detect cyclicity only, so a certificate additionally needs the unipotent
/// subset to have a one-dimensional joint fixed space whose spin is
/// everything: every nonzero invariant subspace contains a fixed vector of
/// the unipotent group.
IrreducibilityResult irreducibility_witness(const LatticeAction& action, std::size_t trials, std::uint64_t seed);

} // namespace jloci
