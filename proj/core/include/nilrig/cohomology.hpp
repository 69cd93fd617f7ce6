#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nilrig/cochain.hpp"
#include "nilrig/lie_algebra.hpp"
#include "nilrig/matrix.hpp"

namespace nilrig {

// Coboundary operators. Preconditions are checked and reported as
// std::invalid_argument naming a failing basis tuple.

/// df(x, y) = [f x, y] + [x, f y] - f[x, y]
Cochain chevalley_delta1(const LieAlgebra& g, const Cochain& f);
/// dphi(x,y,z) = [x,phi(y,z)] - [y,phi(x,z)] + [z,phi(x,y)]
///              - phi([x,y],z) + phi([x,z],y) - phi([y,z],x)
Cochain chevalley_delta2(const LieAlgebra& g, const Cochain& phi);

/// T(phi)(x,y,z) = mu(phi(x,y),z) + phi(mu(x,y),z). Needs nilindex <= 2.
MultiMap ch_delta2(const LieAlgebra& g, const Cochain& phi);

/// The alternating-parity CH formulas for psi of arity k <= 3:
///   k = 2p:   mu(x1, psi(x2..)) + sum_{i=1..p}   psi(.., mu(x_{2i},   x_{2i+1}), ..)
///   k = 2p-1: mu(x1, psi(x2..)) + sum_{i=1..p-1} psi(.., mu(x_{2i+1}, x_{2i+2}), ..)
/// Needs nilindex <= 2.
MultiMap ch_delta_general(const LieAlgebra& g, const Cochain& psi);

/// (phi . phi)(x,y,z) = phi(phi(x,y),z) + phi(phi(y,z),x) + phi(phi(z,x),y)
Cochain bullet_square(const Cochain& phi);

/// [[phi(x1,x2),x3],x4] + [phi([x1,x2],x3),x4] + phi([[x1,x2],x3],x4).
/// Needs nilindex <= 3.
MultiMap r_delta2(const LieAlgebra& g, const Cochain& phi);
/// mu(psi(x1..x4), x5) - psi(mu(x1,x2), x3, x4, x5)
MultiMap r_delta3(const LieAlgebra& g, const MultiMap& psi);

/// Matrix of the Chevalley coboundary on 1-cochains. Column p*n + q is the
/// image of E_pq (X_q -> X_p); rows are 2-cochain coordinates.
RationalMatrix chevalley_delta1_matrix(const LieAlgebra& g);

enum class ComplexKind { Chevalley, CH, CR };
std::string to_string(ComplexKind kind);
/// "chevalley", "ch", "cr" (case-insensitive).
ComplexKind parse_complex_kind(const std::string& text);

/// Throws std::invalid_argument if g violates the precondition of `kind`:
/// Jacobi for all, nilindex <= 2 for CH, nilindex <= 3 for CR.
void require_complex(const LieAlgebra& g, ComplexKind kind);

/// Matrix whose kernel is Z^2 of `kind`, on 2-cochain coordinates. For CR the
/// Chevalley rows come first.
RationalMatrix z2_operator_matrix(const LieAlgebra& g, ComplexKind kind);

struct CohomologyReport {
  ComplexKind kind = ComplexKind::Chevalley;
  std::size_t z2 = 0;
  std::size_t b2 = 0;
  std::size_t h2 = 0;
  bool rigid_candidate = false;
  /// Cocycles whose classes form a basis of H^2 (filled on request).
  std::vector<Cochain> representatives;
};

/// Progress callback: (columns processed, total columns).
using Progress = std::function<void(std::size_t, std::size_t)>;

/// Z^2 = ker of the kind's operator, B^2 = Im of the Chevalley d^1,
/// H^2 = Z^2 - B^2. Throws std::logic_error if B^2 is not inside Z^2.
CohomologyReport space_dims(const LieAlgebra& g, ComplexKind kind, bool representatives = false,
                            const Progress& progress = {});

/// The same dimensions restricted to cochains with phi(X_1, .) = 0: z2 counts
/// normalized cocycles, b2 counts coboundaries that are normalized, and h2 is
/// their difference.
struct NormalizedDims {
  std::size_t z2 = 0;
  std::size_t b2 = 0;
  std::size_t h2 = 0;
};
NormalizedDims normalized_space_dims(const LieAlgebra& g, ComplexKind kind);

}  // namespace nilrig
