#pragma once

// Exact linear algebra over the rings used in this project:
//  - fraction-free Bareiss determinants over any integral domain that
//    supports exact division (integers, multivariate polynomials),
//  - dense Gaussian elimination over the rationals (rank / solve),
//  - sparse fraction-free row echelonization over the integers for large
//    graded slices.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "nrs/mpoly.hpp"

namespace nrs::linalg {

struct IntRing {
  using Elem = Int;
  static Elem zero() { return Int(0); }
  static Elem one() { return Int(1); }
  static bool is_zero(const Elem& a) { return a == 0; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem exact_div(const Elem& a, const Elem& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

/// Polynomial ring adapter; all matrix entries must share one symbol set,
/// provided at construction so zero/one constants can be minted.
struct MPolyRing {
  SymbolsPtr syms;
  using Elem = MPoly;
  Elem zero() const { return MPoly(syms); }
  Elem one() const { return MPoly(syms, 1); }
  static bool is_zero(const Elem& a) { return a.is_zero(); }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem exact_div(const Elem& a, const Elem& b) { return a.exact_div(b); }
};

/// Fraction-free determinant (Bareiss). The matrix is consumed. Division
/// steps are exact by the Bareiss identity, so this works verbatim over
/// Z and Z[x_1,...,x_m].
template <typename Ring>
typename Ring::Elem bareiss_det(const Ring& ring,
                                std::vector<std::vector<typename Ring::Elem>> m) {
  const std::size_t n = m.size();
  if (n == 0) return ring.one();
  for (const auto& row : m)
    if (row.size() != n) throw PolyError("bareiss_det: matrix not square");
  bool negate = false;
  typename Ring::Elem prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Ring::is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && Ring::is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return ring.zero();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = Ring::sub(Ring::mul(m[k][k], m[i][j]),
                             Ring::mul(m[i][k], m[k][j]));
        m[i][j] = Ring::exact_div(num, prev);
      }
      m[i][k] = ring.zero();
    }
    prev = m[k][k];
  }
  auto det = m[n - 1][n - 1];
  if (negate) det = Ring::sub(ring.zero(), det);
  return det;
}

inline Int bareiss_det_int(std::vector<std::vector<Int>> m) {
  return bareiss_det(IntRing{}, std::move(m));
}

inline MPoly bareiss_det_poly(const SymbolsPtr& syms,
                              std::vector<std::vector<MPoly>> m) {
  return bareiss_det(MPolyRing{syms}, std::move(m));
}

/// Dense rational Gaussian elimination; returns the rank. Destroys `rows`.
long rank_dense(std::vector<std::vector<Rat>>& rows);

/// Solve A x = b over Q (A is m x n, row-major). Returns one solution with
/// free variables set to zero, or nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve_dense(std::vector<std::vector<Rat>> a,
                                            std::vector<Rat> b);

/// Sparse integer row: strictly increasing column indices with nonzero
/// values attached.
using SparseRow = std::vector<std::pair<long, Int>>;

/// Rank of a sparse integer matrix by incremental fraction-free
/// echelonization with content reduction. Consumes the rows.
long rank_sparse(std::vector<SparseRow> rows);

namespace detail {
/// a*ra - b*rb, content-reduced; helper shared by rank_sparse and tests.
SparseRow row_combine(const Int& a, const SparseRow& ra, const Int& b,
                      const SparseRow& rb);
}  // namespace detail

}  // namespace nrs::linalg
