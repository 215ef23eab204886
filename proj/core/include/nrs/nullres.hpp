#pragma once

// Null-residue machinery: the rho_+/rho_- residue components of a wedge
// element, membership in U_{N,ell}, the square matrix of basis-candidate
// coefficients, its determinant identity det X = c (Delta+)^E, Cramer /
// graded coordinate solving, and the degree-sum bookkeeping check.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nrs/construct.hpp"
#include "nrs/mpoly.hpp"
#include "nrs/wedge.hpp"

namespace nrs {

/// The two families of residue components of one element, indexed by the
/// (ell-1)-tuple prefix; each component is already cleared by
/// x^(2*nvars - 1), so it is a genuine polynomial over
/// esyms_with_x(nvars - 2).
struct ResidueComponents {
  int nvars = 0;
  int ell = 0;
  std::map<std::vector<int>, MPoly> even_part;
  std::map<std::vector<int>, MPoly> odd_part;
  bool all_zero() const;
};

ResidueComponents residue_components(const WedgeElement& p);

/// True iff every residue component vanishes (the defining property of
/// U_{N,ell}). Degree-0 elements belong trivially.
bool in_U(const WedgeElement& p);

/// Rows follow enumerate_basis_indices order; columns are the strictly
/// increasing index tuples in ascending lexicographic order.
struct BasisMatrix {
  int nvars = 0;
  int ell = 0;
  std::vector<BasisIndex> rows;
  std::vector<std::vector<int>> cols;
  std::vector<std::vector<MPoly>> entries;
};

BasisMatrix basis_matrix(int nvars, int ell);

enum class DetMode { Symbolic, Randomized };

struct DetReport {
  int nvars = 0;
  int ell = 0;
  DetMode mode = DetMode::Symbolic;
  bool matches = false;
  Rat c = 0;           // the constant in det X = c (Delta+)^E
  long exponent = 0;   // E = binom(N-1, ell-1) + binom(N-2, ell-1)
  int trials = 0;      // randomized mode only
  std::uint64_t seed = 0;
  nlohmann::json to_json() const;
};

/// Verify det X^(N,ell) = c (Delta+)^E with a nonzero constant c.
///
/// Symbolic mode: fraction-free determinant, exact division. Randomized
/// mode: >= 8 integer points from [-10^6, 10^6]^N (resampled while Delta+
/// vanishes), c solved at the first point and confirmed at the rest, plus a
/// doubled-point evaluation checking the predicted homogeneity degree
/// binom(N,2) * E. In both modes, even N with ell = 1 additionally checks
/// the n x n v-block against Delta+ itself (c = 1 there).
DetReport det_identity_check(int nvars, int ell, DetMode mode,
                             int trials = 8, std::uint64_t seed = 12345);

/// Coordinates of p in the candidate basis: p = sum_r S_r Q_r. Returns
/// nullopt when p is not an R-combination of the family (equivalently, not
/// in U). Uses Cramer determinants for small matrices and per-deg1-degree
/// exact linear solves otherwise; the result is always verified by
/// resubstitution before being returned.
std::optional<std::vector<MPoly>> coordinates(const WedgeElement& p);

/// Compare the direct enumeration sum_r deg1(Q_r) + sum_tuples |t| with the
/// closed form binom(N,2) * E.
bool degree_sum_check(int nvars, int ell);

/// The column-operation divisibility route: for every basis element, prefix
/// tuple and parity, the cleared column combination (in X-REP) vanishes
/// under x_N -> -x_{N-1}, i.e. is divisible by (x_{N-1} + x_N). This is an
/// independent X-REP re-check of the residue components.
bool column_operation_check(int nvars, int ell);

}  // namespace nrs
