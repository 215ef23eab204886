#pragma once

// Elements of the exterior algebra of the free module H = span(X^0..X^{N-1})
// over the symmetric-polynomial ring, stored as maps from strictly
// increasing index tuples to nonzero polynomial coefficients.
//
// A "widened" element may carry indices >= N; the two construction
// scaffolds (the even-case v_0 and the odd-case w_0) need one power beyond
// the module rank before cancellations land their combinations back inside.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nrs/mpoly.hpp"

namespace nrs {

struct WedgeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class WedgeElement {
 public:
  using Tuple = std::vector<int>;
  using TermMap = std::map<Tuple, MPoly>;

  /// Zero element of wedge degree `ell` over H^(nvars), with coefficients
  /// over `coeff_syms`.
  WedgeElement(int nvars, int ell, SymbolsPtr coeff_syms, bool widened = false);

  int nvars() const { return nvars_; }
  int ell() const { return ell_; }
  bool widened() const { return widened_; }
  const SymbolsPtr& coeff_symbols() const { return coeff_syms_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Replace the coefficient at a strictly increasing tuple.
  void set_coeff(Tuple tuple, MPoly coeff);

  /// Coefficient at a strictly increasing stored tuple (zero if absent).
  MPoly coeff(const Tuple& tuple) const;

  /// Antisymmetric extension: arbitrary tuple, sign from sorting, zero on a
  /// repeated index.
  MPoly coeff_signed(Tuple tuple) const;

  /// Add sign * coeff at the (possibly unsorted) tuple.
  void add_term(Tuple tuple, MPoly coeff);

  WedgeElement operator-() const;
  WedgeElement& operator+=(const WedgeElement& other);
  WedgeElement& operator-=(const WedgeElement& other);
  friend WedgeElement operator+(WedgeElement a, const WedgeElement& b) {
    return a += b;
  }
  friend WedgeElement operator-(WedgeElement a, const WedgeElement& b) {
    return a -= b;
  }
  WedgeElement& operator*=(const MPoly& scalar);
  WedgeElement& operator*=(const Int& scalar);
  friend WedgeElement operator*(WedgeElement a, const MPoly& s) {
    return a *= s;
  }
  friend WedgeElement operator*(const MPoly& s, WedgeElement a) {
    return a *= s;
  }
  friend WedgeElement operator*(WedgeElement a, const Int& s) { return a *= s; }
  friend WedgeElement operator*(const Int& s, WedgeElement a) { return a *= s; }
  friend bool operator==(const WedgeElement& a, const WedgeElement& b);
  friend bool operator!=(const WedgeElement& a, const WedgeElement& b) {
    return !(a == b);
  }

  /// Exterior product; wedge degrees add.
  WedgeElement wedge(const WedgeElement& other) const;

  /// deg1 of one term is xdeg(coefficient) - sum(tuple). True (with the
  /// common value in *deg_out) when every monomial of every coefficient
  /// agrees; vacuously true for zero.
  bool is_deg1_homogeneous(long* deg_out = nullptr) const;
  /// deg1 for homogeneous elements; throws otherwise.
  long deg1() const;
  /// deg2 = nvars^2/4 + deg1 (exact rational).
  Rat deg2() const;

  /// Split into deg1-homogeneous components (coefficients are split
  /// monomial-by-monomial).
  std::map<long, WedgeElement> deg1_components() const;

  /// Specialize every coefficient at an integer e-point.
  std::map<Tuple, Int> eval_terms(const std::vector<Int>& point) const;

  std::string str() const;

  /// {"n": .., "ell": .., "terms": [[[i..], mpoly], ..]}; a true "widened"
  /// flag is added only when set.
  nlohmann::json to_json() const;
  static WedgeElement from_json(const nlohmann::json& j);

 private:
  void check_tuple(const Tuple& tuple) const;
  int nvars_;
  int ell_;
  bool widened_;
  SymbolsPtr coeff_syms_;
  TermMap terms_;
};

}  // namespace nrs
