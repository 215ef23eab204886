#pragma once

// Homological layer: the degree-preserving connecting maps between the
// solution spaces, the plus/minus partition of the candidate index family
// with its shift bijections, graded dimensions of the quotient modules by
// exact rational elimination, wedge-with-xi_1 injectivity on exterior-power
// slices, and character-level Euler consistency of the whole complex.

#include <stdexcept>
#include <utility>
#include <vector>

#include "nrs/qchar.hpp"
#include "nrs/wedge.hpp"

namespace nrs {

struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The connecting map at level ell: takes a of wedge degree ell and b of
/// wedge degree ell-1 to
///   (a ^ g + (-1)^ell b ^ xi_1,  b ^ g)
/// where g is w_1 for even rank and v_0 for odd rank. The first component
/// alone is the composition-relevant part; the pair form makes consecutive
/// maps compose to zero. For ell = 0 the second argument must be zero (there
/// is nothing below level 0) and the second output is zero. When
/// check_membership is set, a and b must lie in the solution spaces.
std::pair<WedgeElement, WedgeElement> phi_map(int nvars, int ell,
                                              const WedgeElement& a,
                                              const WedgeElement& b,
                                              bool check_membership = true);

/// Both components of the composite of the level-(ell+1) map after the
/// level-ell map vanish symbolically on every pair of candidate basis
/// elements (a from degree ell, b from degree ell-1).
bool phi_complex_check(int nvars, int ell);

/// Partition of the candidate index family at wedge degree ell into the
/// distinguished class (w-index 1 present; odd rank: the v_0 factor
/// present) and its complement, together with the two index-shift
/// bijections: stripping the distinguished factor lands injectively in the
/// complement one level down (bijectively wherever the inverse attachment
/// stays admissible), and attaching it lands bijectively on the
/// distinguished class one level up (checked within the range where the
/// attachment stays admissible). Also verifies the degree-histogram
/// identity behind the bijectivity of the assembled map: the distinguished
/// class at ell+1 plus the complement at ell-1 carry the same deg1
/// histogram as the whole family at ell.
bool bas_partition_check(int nvars, int ell);

/// Dimensions, per deg1 degree d = 0..d_max, of the quotient of the
/// solution space at wedge degree ell by the submodule generated by the
/// level-(ell-1) family wedge g and the level-(ell-2) family wedge xi_1.
/// Each entry is (basis dimension of the degree-d slice) minus the exact
/// rank of the image family in that slice.
std::vector<long> graded_quotient_dims(int nvars, int ell, long d_max);

/// Dimensions of the degree-d slices of the solution space itself,
/// d = 0..d_max (sum over basis elements of partition counts).
std::vector<long> graded_u_dims(int nvars, int ell, long d_max);

/// Wedging with xi_1 from the m-th to the (m+2)-nd exterior power is
/// injective on every deg1 slice up to d_max (kernels computed by exact
/// rank; slices below the minimal degree are handled automatically).
bool xi1_injectivity(int nvars, int m, long d_max);

/// Character-level Euler consistency of the resolution: the alternating sum
/// of the level characters telescopes to the quotient character.
bool euler_char_check(int nvars, int ell, long cutoff);

}  // namespace nrs
