#pragma once

// Graded slices of the exterior powers of H^(N). The grading is by deg1
// (coefficient x-degree minus the sum of wedge indices); each slice is a
// finite-dimensional lattice with a deterministic coordinate order, used by
// the per-degree linear-algebra routes (coordinate solving, quotient
// dimensions, kernel checks).

#include <map>
#include <vector>

#include "nrs/linalg.hpp"
#include "nrs/mpoly.hpp"
#include "nrs/wedge.hpp"

namespace nrs {

/// Strictly increasing tuples of the given length with entries in
/// {0, ..., limit-1}, ascending lexicographic order.
std::vector<std::vector<int>> index_tuples(int limit, int len);

/// All monomials in e_1..e_N of weighted degree exactly d (weight of e_k is
/// k) — equivalently the partitions of d into parts of size <= N. Empty for
/// d < 0; the unit monomial for d = 0. Deterministic order.
std::vector<Exponents> weighted_monomials(int nvars, long d);

/// Number of such monomials (partitions of d into parts <= nvars).
long partition_count(int nvars, long d);

/// Coordinate system for the deg1 = d slice of the ell-th exterior power.
struct Slice {
  int nvars = 0;
  int ell = 0;
  long d = 0;
  std::vector<std::vector<int>> tuples;          // ascending lex
  std::vector<std::vector<Exponents>> mons;      // per tuple
  std::vector<long> offsets;                     // prefix sums into columns
  std::vector<std::map<Exponents, long, GradedLexLess>> lookup;

  long dim() const { return offsets.empty() ? 0 : offsets.back(); }
  /// Global column of (tuple, monomial); -1 when absent.
  long index_of(const std::vector<int>& tuple, const Exponents& mon) const;
};

Slice make_slice(int nvars, int ell, long d);

/// Coordinates of a deg1-homogeneous element of degree slice.d. Every term
/// must land inside the slice; throws otherwise.
linalg::SparseRow slice_vector(const Slice& slice, const WedgeElement& w);

}  // namespace nrs
