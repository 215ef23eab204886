#pragma once

// Constructions of the named elements of H^(N) and its exterior powers:
// the P_{r,s} table, the generators v_r, w_r, v_0, xi_k, the theta-route
// elements Xi_1/Xi_2, the xi expansion coefficients a^(k)_{ij}, and the
// candidate basis families Bas_ell (even) and Bas^o_ell (odd).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nrs/mpoly.hpp"
#include "nrs/wedge.hpp"

namespace nrs {

/// n such that N = 2n (even) or N = 2n+1 (odd).
int half_n(int nvars);

/// P_{r,s} over esyms(nvars); memoized, safe for concurrent readers.
/// Zero conventions: s <= 0 always; even: s >= n+1; odd: r >= 2 and
/// s >= n+1. Range: 1 <= r <= n (even) or n+1 (odd).
const MPoly& p_rs(int nvars, int r, int s);

/// P_{r,s} with the index extension used in the xi-expansion proof:
/// P_{r,s} = e_{2(s+r)-3} for r <= 0; delegates to p_rs for r >= 1.
MPoly p_rs_ext(int nvars, int r, int s);

/// Generators. Even N = 2n: v_i, w_i for 1 <= i <= n, xi_k for 1 <= k <= n;
/// v_0 exists as a widened scaffold (its top term sits at X^{2n}). Odd
/// N = 2n+1: v_0 (honest element), v_i/w_i for 1 <= i <= n, xi_k for
/// 1 <= k <= n.
WedgeElement gen_v(int nvars, int i);
WedgeElement gen_w(int nvars, int j);
WedgeElement gen_v0(int nvars);
WedgeElement gen_xi(int nvars, int k);

/// Theta-route elements: Theta_pm(X) = prod_j (1 +- X x_j) expanded in
/// E-REP; 2 Xi_1 = Theta_+ + (-1)^{N-1} Theta_-, and Xi_2 per its defining
/// two-point combination. Independent of the recursion route; the library
/// keeps both and the tests compare them (Xi_1 = w_1 resp. v_0,
/// Xi_2 = xi_1).
WedgeElement gen_Xi1(int nvars);
WedgeElement gen_Xi2(int nvars);

/// Dispatcher for the CLI: kind in {v, w, v0, xi, Xi1, Xi2}.
WedgeElement generator(int nvars, std::string_view kind, int index);

/// Expansion coefficient a^(k)_{ij} of xi_k (even N = 2n), by the
/// two-branch closed form:
///   0 <= i <= n-k :  (sum_{r+s=i+j+2, r<=i} - sum_{r+s=i+j+2, r>=j+1})
///                    e_{2r} P_{k-1,s}
///   n-k+1 <= i    :  (sum_{r+s=i+j+1, r<=j} - sum_{r+s=i+j+1, r>=i+1})
///                    e_{2r} P_{k,s}
/// with the r <= 0 extension of P. Requires 1 <= k <= n, 0 <= i,j <= n-1.
MPoly xi_expansion_coeff(int nvars, int k, int i, int j);

/// Index of one candidate basis element v_I ^ w_J ^ xi_K (with an optional
/// leading v_0 in the odd case).
struct BasisIndex {
  bool v0 = false;
  std::vector<int> I;  // strictly increasing v-indices
  std::vector<int> J;  // strictly increasing w-indices
  std::vector<int> K;  // weakly increasing xi-indices

  int l1() const { return static_cast<int>(I.size()); }
  int l2() const { return static_cast<int>(J.size()); }
  int l3() const { return static_cast<int>(K.size()); }
  int ell() const { return (v0 ? 1 : 0) + l1() + l2() + 2 * l3(); }

  /// deg1 of the associated wedge (parity-dependent w-degrees).
  long deg1(int nvars) const;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;

  std::string str() const;
  nlohmann::json to_json() const;
};

/// All valid indices for the given wedge degree, in the deterministic
/// order: shapes (l1, l2, l3) in descending lexicographic order, then I, J,
/// K each ascending; odd case lists the v0-carrying family Bas^{o+} first.
std::vector<BasisIndex> enumerate_basis_indices(int nvars, int ell);

/// The wedge element named by an index.
WedgeElement basis_element(int nvars, const BasisIndex& idx);

/// Indices paired with their elements, in enumeration order.
std::vector<std::pair<BasisIndex, WedgeElement>> enumerate_basis(int nvars,
                                                                 int ell);

}  // namespace nrs
