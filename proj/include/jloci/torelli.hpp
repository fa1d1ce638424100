#pragma once

#include "jloci/symplectic.hpp"

#include <vector>

namespace jloci {

/// Johnson contraction C(x^y^z) = (x.y)z + (y.z)x + (z.x)y, as a map from
/// the third exterior power of H to H. Throws for degree != 3.
SparseVector contraction(const SymplecticSpace& h, const Multivector& w);
/// Matrix of the contraction, 2g x C(2g,3).
ExactMatrix contraction_matrix(const SymplecticSpace& h);
/// x -> x ^ omega, as a map H -> third exterior power.
Multivector wedge_omega(const SymplecticSpace& h, const SparseVector& x);

/// The irreducible sp_g-module V = (third exterior power of H)/H, realized
/// concretely as L' = ker C. Basis vectors of V are the reduced echelon basis
/// of L'; each is a weight vector.
class TorelliRep {
public:
  /// Throws std::invalid_argument for g < 3.
  static TorelliRep build(int g);

  int genus() const { return space_.genus(); }
  const SymplecticSpace& space() const { return space_; }
  std::size_t dim() const { return lprime_.dim(); }
  const Subspace& lprime() const { return lprime_; }
  const std::vector<Weight>& basis_weights() const { return weights_; }

  /// Lie algebra generators (Cartan, positive, negative) acting on V.
  const std::vector<RepOperator>& generators() const { return generators_; }
  /// Unipotents exp(X_alpha) acting on V.
  const std::vector<RepOperator>& unipotents() const { return unipotents_; }
  /// The same operators on H.
  const std::vector<RepOperator>& h_generators() const { return h_generators_; }
  const std::vector<RepOperator>& h_unipotents() const { return h_unipotents_; }

  /// Coordinates in V of an element of L'; throws std::domain_error otherwise.
  SparseVector coordinates(const Multivector& w3) const;
  /// The same, as a degree-one multivector over V.
  Multivector element(const Multivector& w3) const { return Multivector::vector(dim(), coordinates(w3)); }
  Multivector element(std::initializer_list<std::uint32_t> h_indices) const
  {
    return element(Multivector::basis(space_.dim(), h_indices));
  }
  /// Inverse of coordinates().
  Multivector lift(const SparseVector& v) const;

  /// Matrices of generators() on the second exterior power of V.
  std::vector<ExactMatrix> wedge2_generators() const;

private:
  explicit TorelliRep(int g) : space_(g) {}

  SymplecticSpace space_;
  Subspace lprime_;
  std::vector<Weight> weights_;
  std::vector<RepOperator> generators_, unipotents_, h_generators_, h_unipotents_;
};

/// Joint kernel of the given raising operators on an invariant subspace.
/// Throws std::invalid_argument when the space is not invariant.
Subspace maximal_vectors(std::span<const ExactMatrix> positive, const Subspace& space);

/// v0 (class of a1^a2^a3) in V, and u0 (sum over k >= 3 of
/// (a1^a2^ak) ^ (a1^a2^bk)) in the second exterior power of V.
struct DistinguishedVectors {
  Multivector v0;
  Multivector u0;
  Weight v0_weight;
  Weight u0_weight;
};
DistinguishedVectors distinguished_vectors(const TorelliRep& rep);

/// The submodule V(2 lambda_2) + V(0) of the second exterior power of V.
struct WModule {
  Subspace w;
  /// spin of u0 under all generators
  Subspace top;
  /// spans the sp_g-invariants (joint kernel of every generator)
  Multivector z0{0, 2};
  std::vector<ExactMatrix> wedge2_ops;
};

/// Throws std::runtime_error if the invariant line is not one-dimensional.
WModule build_W(const TorelliRep& rep);

} // namespace jloci
