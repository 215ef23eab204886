#pragma once

// Sparse exact multivariate polynomials over arbitrary-precision integers.
//
// A polynomial owns a shared, immutable symbol set; terms are kept in a
// canonical graded-lex order so that serialization, printing and iteration
// are deterministic. All arithmetic is exact; division is only offered in
// its exact form and throws when the quotient would leave Z[x_1,...,x_m].

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include <nlohmann/json_fwd.hpp>

namespace nrs {

using Int = mpz_class;
using Rat = mpq_class;

/// Error type for all polynomial-ring failures (mismatched symbol sets,
/// inexact division, malformed JSON, ...).
struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Immutable ordered list of distinct symbol names. Polynomials hold a
/// shared pointer to one of these; two polynomials interoperate when their
/// sets compare equal element-wise.
class SymbolSet {
 public:
  static std::shared_ptr<const SymbolSet> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;

  friend bool operator==(const SymbolSet& a, const SymbolSet& b) {
    return a.names_ == b.names_;
  }

 private:
  explicit SymbolSet(std::vector<std::string> names);
  std::vector<std::string> names_;
};

using SymbolsPtr = std::shared_ptr<const SymbolSet>;

/// True when the two sets are the same object or equal element-wise.
bool same_symbols(const SymbolsPtr& a, const SymbolsPtr& b);

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: first by total degree, then lexicographically
/// on the exponent vector. This is the canonical term order used for
/// storage, printing and serialization.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MPoly {
 public:
  using TermMap = std::map<Exponents, Int, GradedLexLess>;

  /// Zero polynomial over the empty symbol set.
  MPoly();
  /// Zero polynomial over the given symbols.
  explicit MPoly(SymbolsPtr syms);
  /// Constant polynomial.
  MPoly(SymbolsPtr syms, Int value);

  static MPoly variable(const SymbolsPtr& syms, std::string_view name);
  static MPoly monomial(const SymbolsPtr& syms, Exponents exps, Int coeff);

  const SymbolsPtr& symbols() const { return syms_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; zero polynomial yields 0, non-constant throws.
  Int constant_value() const;

  /// Coefficient of an exact monomial (zero if absent).
  Int coeff(const Exponents& exps) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Int& scalar);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Int& s) { return a *= s; }
  friend MPoly operator*(const Int& s, MPoly a) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned n) const;

  /// Exact polynomial division: returns q with *this == q * divisor, or
  /// throws PolyError when no such q exists over the integers.
  MPoly exact_div(const MPoly& divisor) const;
  /// Exact scalar division (every coefficient divisible).
  MPoly exact_div(const Int& scalar) const;

  /// Total degree (max over terms); -1 for the zero polynomial.
  long degree() const;
  long degree_in(std::size_t sym_index) const;
  /// Max over terms of sum(w_i * e_i); LONG_MIN sentinel not used: zero
  /// polynomial returns -1 here as well by convention of the callers.
  long weighted_degree(const std::vector<long>& weights) const;
  /// True when all terms share the same weighted degree (vacuously true for
  /// zero). On success and when deg_out is non-null, stores that degree.
  bool is_homogeneous(const std::vector<long>& weights,
                      long* deg_out = nullptr) const;

  template <typename T>
  T eval(const std::vector<T>& point) const;

  /// Simultaneous substitution: symbol i is replaced by images[i]; every
  /// image must live over `target`. The result lives over `target`.
  MPoly substitute(const SymbolsPtr& target,
                   const std::vector<MPoly>& images) const;

  /// Reinterpret over another symbol set. Symbols are matched by name; any
  /// symbol of the current set that is missing from `target` must have zero
  /// exponent throughout.
  MPoly with_symbols(const SymbolsPtr& target) const;

  /// Human-readable form, terms in descending graded-lex order.
  std::string str() const;

  /// {"symbols": [...], "terms": [["coeff", [e...]], ...]} with terms in
  /// descending graded-lex order and coefficients as decimal strings.
  nlohmann::json to_json() const;
  static MPoly from_json(const nlohmann::json& j);

 private:
  void insert_term(const Exponents& exps, const Int& c);
  SymbolsPtr syms_;
  TermMap terms_;
};

inline MPoly exact_div(const MPoly& a, const MPoly& b) { return a.exact_div(b); }

/// n-choose-k as an exact integer; zero outside 0 <= k <= n.
Int binomial(long n, long k);

}  // namespace nrs
