#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilrig/cochain.hpp"
#include "nilrig/lie_algebra.hpp"

namespace nilrig {

struct ConditionResult {
  std::string name;
  bool holds = true;
  /// First basis tuple (0-based) where the defect is nonzero.
  std::optional<Tuple> witness;
};

/// Exact zero tests of the t-graded pieces of a linear deformation mu0 + t phi.
struct DeformationCheck {
  std::vector<ConditionResult> conditions;

  bool all_hold() const;
  /// Throws std::out_of_range for an unknown name.
  const ConditionResult& operator[](std::string_view name) const;
};

/// Conditions "ch_cocycle" (T(phi) = 0) and "quadratic" (phi o_1 phi = 0).
/// Together they hold iff mu0 + t phi is a Lie bracket of nilindex <= 2 for
/// every t. Needs mu0 of nilindex <= 2.
DeformationCheck check_linear_deformation_2step(const LieAlgebra& mu0, const Cochain& phi);

/// Conditions "chevalley_cocycle", "jacobiator_square", "r_cocycle",
/// "mixed_quadratic" and "cubic": the coefficients of t, t^2, t^3 in the Jacobi
/// identity and in the 3-step identity of mu0 + t phi. Needs mu0 of nilindex <= 3.
DeformationCheck check_linear_deformation_3step(const LieAlgebra& mu0, const Cochain& phi);

/// mu o_1 phi o_1 phi + phi o_1 phi o_1 mu + phi o_1 mu o_1 phi, for any
/// bilinear phi (symmetry not assumed).
MultiMap attached_defect(const LieAlgebra& mu, const MultiMap& phi);
/// attached_defect is zero. Needs mu of nilindex <= 3.
bool is_attached(const LieAlgebra& mu, const MultiMap& phi);

/// f o (g ⊗ h)(x1, x2, x3, x4) = f(g(x1, x2), h(x3, x4)) for bilinear f, g, h.
MultiMap tensor_comp(const MultiMap& f, const MultiMap& g, const MultiMap& h);

/// Formal combination of permutations acting on 4-linear maps by
/// (F o Phi_sigma)(x_1..x_4) = F(x_{sigma(1)}, .., x_{sigma(4)}).
struct PermCombination {
  /// Permutations in 1-based one-line notation.
  std::vector<std::pair<std::vector<std::size_t>, Rational>> terms;

  MultiMap apply(const MultiMap& f) const;
  /// v = (2341) + (3142) + (1243).
  static PermCombination jordan_v();
};

/// ((x2x3)x4)x1 + ((x3x1)x4)x2 + ((x1x2)x4)x3
///   - (x2x3)(x4x1) - (x3x1)(x4x2) - (x1x2)(x4x3)   for xy = A(x, y).
/// Throws std::invalid_argument if A is not symmetric.
MultiMap jordan_linearized_defect(const MultiMap& a);

/// (mu o_1 mu o_1 mu - mu o (mu ⊗ mu)) o Phi_v.
MultiMap jordan_identity_map(const MultiMap& mu);

/// Derivative of jordan_identity_map at mu in the direction phi:
/// (phi mu mu + mu phi mu + mu mu phi - mu o (mu⊗phi + phi⊗mu) - phi o (mu⊗mu)) o Phi_v.
/// Throws std::invalid_argument if either map is not symmetric.
MultiMap jordan_cocycle_defect(const MultiMap& mu, const MultiMap& phi);

}  // namespace nilrig
