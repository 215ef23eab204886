#pragma once

// Exact q-series arithmetic: truncated integer-coefficient series with an
// exact rational global exponent offset, Gaussian binomials through their
// twin Pascal recursions, the q-tetranomial identity, characters of U and
// M, branching functions, the Virasoro / fermionic comparisons and the
// Ising characters.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nrs/mpoly.hpp"

namespace nrs {

/// coeffs[k] is the coefficient of q^(offset + k); cutoff = coeffs.size()-1
/// is the last relative exponent the series is known through. Mixing two
/// series keeps the smallest absolutely-known window, so no operation ever
/// pretends to know more than its inputs. Quarter-integer exponents (the
/// odd-variable prefactors) live entirely in the offset.
struct QSeries {
  Rat offset = 0;
  long cutoff = 0;
  std::vector<Int> coeffs;  // size cutoff + 1

  static QSeries zero(long cutoff, Rat offset = 0);
  static QSeries one(long cutoff);
  /// c * q^exponent, known through exponent + cutoff.
  static QSeries monomial(const Rat& exponent, long cutoff, Int c = 1);

  bool is_zero() const;
  /// Coefficient of q^exponent: 0 below the offset or off the integer grid,
  /// error above the known window.
  Int coeff_at(const Rat& exponent) const;

  /// Shrink the window (new_cutoff <= cutoff).
  QSeries truncated(long new_cutoff) const;
  /// Extend the window with zero coefficients. Only meaningful when the
  /// series is exactly a polynomial already complete within its window.
  QSeries padded(long new_cutoff) const;
  QSeries shifted(const Rat& delta) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const Int& s);

  /// Power-series division; the divisor's lowest nonzero coefficient must
  /// be +1 or -1.
  QSeries exact_div(const QSeries& divisor) const;

  /// Semantic equality of the known coefficients on the common window.
  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) {
    return !(a == b);
  }

  std::string str() const;
  /// {"offset": "p/q", "cutoff": N, "coeffs": ["..", ...]}
  nlohmann::json to_json() const;
  static QSeries from_json(const nlohmann::json& j);
};

/// Finitely supported Laurent polynomial in z with QSeries coefficients.
struct ZLaurent {
  std::map<long, QSeries> terms;
  void add(long zexp, const QSeries& s);
  friend bool operator==(const ZLaurent& a, const ZLaurent& b);
};

/// Gaussian binomial [m; r] in base q^base_power, computed through BOTH
/// Pascal recursions (they must agree). cutoff < 0 keeps the full exact
/// polynomial; otherwise the window is padded/truncated to `cutoff`.
QSeries qbinom(int m, int r, int base_power = 1, long cutoff = -1);

/// q-tetranomial [n; l1, l2, l3] as the product of three q^2-binomials;
/// zero as soon as one argument (including n - l1 - l2 - l3) is negative.
QSeries qtetra(int n, int l1, int l2, int l3, long cutoff = -1);

/// The pivot identity [l3]_{q^2} T(n; l1, l2, l3)
///                  = [l1+1]_{q^2} T(n; l1+1, l2, l3-1).
bool qtetra_pivot(int n, int l1, int l2, int l3);

/// The q-tetranomial expansion of [2n; ell] for every 0 <= ell <= 2n, plus
/// the three-term recursion in n for both sides.
bool verify_tetranomial(int n);

/// (q)_n = prod_{j=1..n} (1 - q^j), truncated.
QSeries poly_pochhammer(int n, long cutoff);

/// prod_{j>=1} (1 + q^j), truncated.
QSeries euler_product(long cutoff);

/// ch U_{N,ell} = q^(N^2/4) / (q)_N * [N; ell]. `cutoff` counts kept powers
/// above the offset N^2/4.
QSeries ch_U(int nvars, int ell, long cutoff);

/// ch M_{N,ell} = q^(N^2/4) / (q)_N * ([N; ell] - [N; ell-1]).
QSeries ch_M(int nvars, int ell, long cutoff);

/// Branching function: sum of ch M_{n,ell} over n == i (mod 2) with
/// n - 2 ell = lambda; the result has offset lambda^2/4.
QSeries branching(int i, int lambda, long cutoff);

/// Virasoro side q^(lambda^2/4) (1 - q^(lambda+1)) / (q; q)_inf, written so
/// that `lambda` is twice the sl2 spin and branching(i, lambda) must equal
/// virasoro_product(lambda) coefficient by coefficient.
QSeries virasoro_product(int lambda, long cutoff);

/// chi_{lambda/2}(z) weighted sum of branching functions (the character
/// side of the level-one fermionic identity).
ZLaurent fermionic_branching_side(int i, long cutoff, int z_range);

/// Double sum over n == i (mod 2), 0 <= ell <= n of
/// z^(n-2 ell) q^(n^2/4) / ((q)_ell (q)_{n-ell}).
ZLaurent fermionic_sum_side(int i, long cutoff, int z_range);

bool fermionic_identity(int i, long cutoff, int z_range);

/// Sum form of the Ising character: sum over n == i (mod 2) of
/// q^(n(n-1)/2) / (q)_n.
QSeries ising_char(int i, long cutoff);

/// ising_char(i) == euler_product, both truncations.
bool ising_identity(int i, long cutoff);

}  // namespace nrs
