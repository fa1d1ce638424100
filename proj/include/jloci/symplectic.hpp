#pragma once

#include "jloci/multivector.hpp"
#include "jloci/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jloci {

/// Integer combination sum c_i t_i of the coordinates of the Cartan subalgebra.
struct Weight {
  std::vector<int> coeffs;

  static Weight zero(int g) { return {std::vector<int>(static_cast<std::size_t>(g), 0)}; }
  /// lambda_j = t_1 + ... + t_j
  static Weight fundamental(int g, int j);

  Weight& operator+=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator*(int c, Weight a)
  {
    for (auto& x : a.coeffs)
      x *= c;
    return a;
  }
  friend Weight operator-(const Weight& a) { return -1 * a; }
  friend auto operator<=>(const Weight&, const Weight&) = default;

  bool is_zero() const;
  /// Human-readable, e.g. "t1+t2-2t3"; "0" for the zero weight.
  std::string to_string() const;
};

/// H = Z^{2g} with basis a_1..a_g, b_1..b_g (indices 0..g-1, g..2g-1) and
/// intersection form a_i.b_i = 1 = -b_i.a_i.
class SymplecticSpace {
public:
  explicit SymplecticSpace(int genus);

  int genus() const { return g_; }
  std::size_t dim() const { return 2 * static_cast<std::size_t>(g_); }
  std::uint32_t a(int i) const { return static_cast<std::uint32_t>(i - 1); }
  std::uint32_t b(int i) const { return static_cast<std::uint32_t>(g_ + i - 1); }
  std::string label(std::size_t index) const;

  /// Intersection pairing of two basis vectors.
  int pairing(std::size_t u, std::size_t v) const;
  Rational pairing(const SparseVector& u, const SparseVector& v) const;

  /// omega = sum a_i ^ b_i
  Multivector omega() const;
  /// Weight of a basis vector: t_i for a_i, -t_i for b_i.
  Weight basis_weight(std::size_t index) const;
  Weight weight_of_tuple(std::span<const std::uint32_t> tuple) const;

  bool is_infinitesimally_symplectic(const ExactMatrix& x) const;
  bool is_symplectic(const ExactMatrix& m) const;

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

private:
  int g_;
};

enum class OperatorKind { LieDerivation, GroupAutomorphism };

/// A linear operator on a based space, tagged with how it extends to
/// exterior powers: Lie algebra elements act by derivations, group elements
/// by algebra automorphisms.
struct RepOperator {
  OperatorKind kind;
  ExactMatrix matrix;
  /// Root for a root vector or its exponential; nullopt for Cartan elements.
  std::optional<Weight> root;
  std::string name;

  bool is_cartan() const { return kind == OperatorKind::LieDerivation && !root; }
  bool is_positive_root() const;
};

/// Cartan basis h_1..h_g, then X_alpha for the positive roots, then for the
/// negative roots (2g^2 root vectors in total). Throws std::invalid_argument
/// for g < 2.
std::vector<RepOperator> sp_generators(int g);

/// exp(X_alpha) for every root alpha, in the same root order as sp_generators.
std::vector<RepOperator> unipotents(int g);

/// Extends op to the exterior power holding w (derivation or automorphism).
Multivector act(const RepOperator& op, const Multivector& w);

/// Simultaneous eigenvalues of the Cartan elements on w. Throws
/// std::domain_error when w is zero or not a weight vector.
Weight weight_of(std::span<const RepOperator> cartan, const Multivector& w);

/// Cartan elements among ops.
std::vector<RepOperator> cartan_part(std::span<const RepOperator> ops);
/// Positive root vectors among ops.
std::vector<RepOperator> positive_part(std::span<const RepOperator> ops);
std::vector<ExactMatrix> matrices(std::span<const RepOperator> ops);

/// Joint eigenspace {v : h_k v = c_k v} in the based space the Cartan
/// matrices act on.
Subspace weight_space(std::span<const ExactMatrix> cartan, const Weight& w);

} // namespace jloci
