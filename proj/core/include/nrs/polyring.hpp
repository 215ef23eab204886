#pragma once

// Conventions of the symmetric-polynomial ring R_n = Z[e_1,...,e_n] and its
// two representations:
//
//   E-REP  polynomials in the elementary generators e_1..e_n (primary),
//   X-REP  polynomials in the underlying variables x_1..x_n (cross-checks).
//
// Also the "bar" specialization x_{n-1} -> x, x_n -> -x, which in E-REP
// sends e_k to e'_k - x^2 e'_{k-2} over the ring in n-2 variables, and the
// discriminant-like product Delta+ = prod_{i<j} (x_i + x_j).

#include <vector>

#include "nrs/mpoly.hpp"

namespace nrs {

/// e_1..e_N (memoized, shared across the process).
SymbolsPtr esyms(int nvars);
/// e_1..e_N, x — the target of the E-REP bar map lives over
/// esyms_with_x(nvars - 2).
SymbolsPtr esyms_with_x(int nvars);
/// x_1..x_N.
SymbolsPtr xsyms(int nvars);
/// x_1..x_{N-2}, x — the target of the X-REP bar map.
SymbolsPtr xsyms_bar(int nvars);
/// e_1..e_N, X1, X2 — scratch ring for two-point generating functions.
SymbolsPtr esyms_xx(int nvars);
/// e_1..e_N, X — scratch ring for one-point generating functions.
SymbolsPtr esyms_X(int nvars);

/// E-REP basis polynomial: e_k as a monomial; e_0 = 1; zero outside
/// 0 <= k <= nvars.
MPoly e_poly(int nvars, int k);

/// Elementary symmetric polynomial e_k(x_1..x_N) in X-REP.
MPoly e_in_x(int nvars, int k);

/// E-REP -> X-REP conversion (substitute each e_k by e_k(x)).
MPoly to_xrep(const MPoly& f, int nvars);

/// Bar map in E-REP: input over esyms(nvars), output over
/// esyms_with_x(nvars-2). Requires nvars >= 2.
MPoly bar_e(const MPoly& f, int nvars);

/// Bar map in X-REP: substitute x_{N-1} -> x, x_N -> -x.
MPoly bar_x(const MPoly& f, int nvars);

/// Delta+ in E-REP via the determinant formula det(e_{N-2i+j})_{i,j=1..N-1}.
MPoly delta_plus(int nvars);

/// Delta+ in X-REP via the defining product prod_{i<j}(x_i + x_j)
/// (independent route, used as an oracle against the determinant formula).
MPoly delta_plus_x(int nvars);

/// Values (e_1,...,e_N) at an integer point (x_1,...,x_N).
std::vector<Int> elementary_values(const std::vector<Int>& xpoint);

/// Delta+ evaluated directly at an integer x-point.
Int delta_plus_at(const std::vector<Int>& xpoint);

/// x-degree weights by symbol name: e_k -> k, x_k -> 1, x -> 1, X* -> 0.
std::vector<long> xdeg_weights(const SymbolSet& syms);

/// The section-7 evaluation point: for even N = 2n, e_1 = +1, e_N = -1 and
/// all other e_k = 0; for odd N = 2n+1, e_N = +1, e_{N-1} = -1, rest 0.
std::vector<Int> special_point(int nvars);

}  // namespace nrs
