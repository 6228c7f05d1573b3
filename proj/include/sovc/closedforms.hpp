#pragma once

// Builders for the closed-form sides of the matrix-element identities: the
// q-factor, the shift-operator matrix element between separated-variable
// states, and the overlap of momentum and separated-variable eigenstates.
// Each returns a symbolic AFactorProduct with its parameter bindings filled
// in; bases (z0, p) are bound by the caller before evaluation when present.

#include <string>
#include <vector>

#include "sovc/aproduct.hpp"

namespace sovc {

// expression helpers used across modules
namespace expr {

// i * x as both slots (separated-point parameter)
AffineExpr i_point(const std::string& name);
// 1 + i(x - y)
AffineExpr one_plus_i_diff(const std::string& xname, const std::string& yname);
// s - i x (holomorphic spin slot)
AffineExpr spin_minus_i_point(const std::string& sname, const std::string& xname);
// s_bar - i x_bar (barred slots of the same symbol)
AffineExpr spinbar_minus_i_pointbar(const std::string& sname, const std::string& xname);

} // namespace expr

// q(x, x') = pi a(1+i(x-x')) a(sbar - i xbar) / a(s - i x'). Parameters are
// named "x", "y", "s" and bound to the given values.
AFactorProduct q_factor(const SeparatedPoint& x, const SeparatedPoint& xp, const Spin& s);

// T_{z0}(x, x') = (-1)^[A_X] [z0]^{i(X-X')} prod_{k,j} q(x_k, x'_j).
// Parameters "x1..xN", "y1..yN", "s"; base "z0" (bind before evaluation).
AFactorProduct txx_closed_form(const std::vector<SeparatedPoint>& x,
                               const std::vector<SeparatedPoint>& xp, const Spin& s);

// <Psi_B(p, u)|Psi_A(x)> = i^[A_X] pi^N |p|^(-N-1) [p]^{A_X}
//   prod_k a(sbar - i xbar_k) prod_j q(x_k, u_j).
// Parameters "x1..xN", "u1..u(N-1)", "s"; base "p" bound to the given value.
AFactorProduct ba_closed_form(cplx p, const std::vector<SeparatedPoint>& u,
                              const std::vector<SeparatedPoint>& x, const Spin& s);

} // namespace sovc
