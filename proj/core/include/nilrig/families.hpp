#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilrig/cochain.hpp"
#include "nilrig/lie_algebra.hpp"

namespace nilrig {

// Named algebras. All brackets are 1-based in the comments: [X_1, X_2] = X_3
// is bracket (0, 1) -> e_2 in the API.

/// h_{2p+1}: [X_{2i-1}, X_{2i}] = X_{2p+1}, 1 <= i <= p.
LieAlgebra heisenberg(std::size_t p);
/// g_{p,1}: [X_1, X_{2i}] = X_{2i+1}, 1 <= i <= p. Dimension 2p+1.
LieAlgebra g_p1(std::size_t p);
/// g_{p-1,2}: [X_1, X_{2i}] = X_{2i+1}, 1 <= i <= p-1. Dimension 2p.
LieAlgebra g_p12(std::size_t p);

/// "g5", "g7", "g9", "g6", "g8", "h6", "h8", "h10".
LieAlgebra rigid_2step(const std::string& which);
std::vector<std::string> rigid_2step_names();

/// g_{k3,k2,k1}: chains X_{2+3i} -> X_{3+3i} -> X_{4+3i} under ad X_1
/// (0 <= i < k3), then X_{3k3+2j} -> X_{3k3+2j+1} (1 <= j <= k2), then k1 - 1
/// central vectors. Dimension 3k3 + 2k2 + k1.
LieAlgebra g_k3k2k1(std::size_t k3, std::size_t k2, std::size_t k1);
/// g_{p,0,1}: [X_1, X_{3i-1}] = X_{3i}, [X_1, X_{3i}] = X_{3i+1}, 1 <= i <= p.
LieAlgebra g_p01(std::size_t p);
/// The 7-dimensional algebra with characteristic sequence (3,3,1) built on
/// g_{2,0,1} by [X2,X3] = X4, [X3,X5] = X7, [X5,X6] = X4, [X2,X5] = X6.
LieAlgebra rigid_3step_7();

/// One X_k-coordinate of a template cocycle: phi(X_i, X_j) has X_k-coefficient
/// sum of coeff * parameter (0-based indices, i < j).
struct TemplateEntry {
  std::size_t i = 0, j = 0, k = 0;
  std::vector<std::pair<std::string, Rational>> terms;
};

/// Normalized cocycle family: a linear space of 2-cochains parametrized by the
/// free coefficient names.
struct CocycleTemplate {
  std::string family;
  std::size_t p = 0;
  std::size_t dim = 0;
  std::vector<std::string> free;
  std::vector<TemplateEntry> entries;
  /// Human-readable fixed linear relations between coordinates.
  std::vector<std::string> relations;

  /// Throws std::invalid_argument for a name that is not a free parameter.
  Cochain instantiate(const std::map<std::string, Rational>& coeffs) const;
  /// The cochain with `name` = 1 and every other parameter 0.
  Cochain basis_element(const std::string& name) const;
};

/// family is one of "221", "Z2kk", "C1", "C2", "p01", "clas3111". For
/// "221", "Z2kk", "C1", "C2" the base is g_{p,1} or g_{p-1,2}; "p01" lives on
/// g_{p,0,1}; "clas3111" lives on g_{1,0,p} (dimension p + 3). Parameter names
/// look like "a_{2,4}^7"; for "p01" the superscript is the summation index.
CocycleTemplate normalized_cocycle_template(const std::string& family, std::size_t p);

struct FamilyParams {
  std::string family;  // "221", "C1" or "C2"
  std::size_t p = 0;
  std::map<std::string, Rational> coeffs;
};

enum class Base2Step { GP1, GP12 };

/// mu0 + phi where mu0 is g_{p,1} (family "221") or g_{p-1,2} ("C1", "C2")
/// and phi is the template instantiated with params.coeffs.
LieAlgebra deformed_2step(Base2Step base, const FamilyParams& params);

/// The 16 members of the (3,3,1) family as tuples (a1..a5, b1..b5).
const std::vector<std::vector<int>>& classification_F731_tuples();
/// g_{2,0,1} + phi for phi on the p = 2 template with
///   phi(X2,X3) = a1 X4 + b1 X7, phi(X3,X5) = a2 X4 + b2 X7,
///   phi(X2,X6) = a3 X4 + b3 X7, phi(X5,X6) = a4 X4 + b4 X7,
///   phi(X2,X5) = (a2+a3) X3 + a5 X4 + (b2+b3) X6 + b5 X7.
LieAlgebra F731_member(const std::vector<Rational>& ab);
std::vector<LieAlgebra> classification_F731();

struct CountCheck {
  std::size_t computed = 0;
  std::size_t closed_form = 0;
};
/// Dimension of the cocycles of g_{p,1} in the span of the "221" template,
/// next to p(p+1)(p-2)/2.
CountCheck cocycle_space_dim_221(std::size_t p);

}  // namespace nilrig
