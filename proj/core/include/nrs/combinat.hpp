#pragma once

// Linear algebra over the 2n-dimensional space Gamma = span(alpha_1..alpha_n,
// beta_1..beta_n): the omega elements, the alpha/beta/omega candidate family,
// exact rank certification, the rewriting algorithm for out-of-range
// alpha/beta monomials with its h statistic, and the specialization bridge
// that ties the symbolic generators at the distinguished e-point to this
// combinatorial model.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nrs/construct.hpp"
#include "nrs/mpoly.hpp"

namespace nrs {

struct CombinatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Representative of x modulo n in {1, ..., n}.
int mod_rep(int x, int n);

/// Element of the exterior algebra of Gamma^(2n) with exact rational
/// coefficients. Basis labels are 0..2n-1: label i-1 is alpha_i, label
/// n+j-1 is beta_j; stored tuples are strictly increasing.
class GammaWedge {
 public:
  using Tuple = std::vector<int>;
  using TermMap = std::map<Tuple, Rat>;

  GammaWedge(int n, int ell);

  static GammaWedge unit(int n);
  static GammaWedge alpha(int n, int i);
  static GammaWedge beta(int n, int j);

  int n() const { return n_; }
  int ell() const { return ell_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient at a strictly increasing tuple (zero if absent).
  Rat coeff(const Tuple& tuple) const;

  /// Add sign * c at the (possibly unsorted) label tuple; repeated labels
  /// contribute nothing.
  void add_term(Tuple labels, Rat c);

  GammaWedge operator-() const;
  GammaWedge& operator+=(const GammaWedge& other);
  GammaWedge& operator-=(const GammaWedge& other);
  friend GammaWedge operator+(GammaWedge a, const GammaWedge& b) {
    return a += b;
  }
  friend GammaWedge operator-(GammaWedge a, const GammaWedge& b) {
    return a -= b;
  }
  GammaWedge& operator*=(const Rat& scalar);
  friend GammaWedge operator*(GammaWedge a, const Rat& s) { return a *= s; }
  friend GammaWedge operator*(const Rat& s, GammaWedge a) { return a *= s; }
  friend bool operator==(const GammaWedge& a, const GammaWedge& b);
  friend bool operator!=(const GammaWedge& a, const GammaWedge& b) {
    return !(a == b);
  }

  /// Exterior product; wedge degrees add.
  GammaWedge wedge(const GammaWedge& other) const;

  std::string str() const;

 private:
  int n_ = 0;
  int ell_ = 0;
  TermMap terms_;
};

/// omega_k = sum_{r=1}^n alpha_{r-k+1} ^ beta_r, the alpha index read
/// modulo n in {1..n}. Periodic in k with period n.
GammaWedge omega(int n, int k);

/// alpha_I ^ beta_J ^ omega_K for an index triple (the v0 flag must be
/// unset; the odd-rank gamma factor is handled by the bridge, not here).
GammaWedge abw_element(int n, const BasisIndex& idx);

struct SpanReport {
  int n = 0;
  int ell = 0;
  long rank = 0;
  long dimension = 0;  // binomial(2n, ell)
  bool full = false;

  nlohmann::json to_json() const;
};

/// Exact rational rank of the expanded family {abw_element(n, idx)} over
/// all idx of wedge degree ell; full when it equals binomial(2n, ell).
/// Since the family size equals the dimension, full certifies both linear
/// independence and spanning.
SpanReport span_rank(int n, int ell);

struct SpanExpansion {
  std::vector<BasisIndex> indices;  // enumeration order
  std::vector<Rat> coeffs;          // aligned with indices
};

/// Exact solve expressing the target in the alpha/beta/omega family.
/// Returns nullopt only when the target lies outside the span (impossible
/// once span_rank is full).
std::optional<SpanExpansion> express_in_span(const GammaWedge& target);

// ---------------------------------------------------------------------------
// Rewriting of out-of-range alpha/beta monomials.
//
// A monomial alpha_{i_{l1-1}} ^ ... ^ alpha_{i_0} ^ beta_{n-r_k} ^ ... ^
// beta_{n-r_0} whose beta part sticks out of the basis range is stored as a
// descriptor (i_{l1-1}, ..., i_0 | n-r_k, ..., n-r_0): the alpha subscripts
// i_s are strictly decreasing in s (so i_0 is the largest), and the offsets
// r_0 < ... < r_k pick which of the top l1 beta slots are occupied. The
// in-range beta factors and the omega part never change and are omitted.

struct Descriptor {
  int n = 0;
  std::vector<int> i;  // i[s] = i_s: strictly decreasing values in 1..n
  std::vector<int> r;  // strictly increasing offsets in 0..l1-1, nonempty

  int l1() const { return static_cast<int>(i.size()); }
  int k() const { return static_cast<int>(r.size()) - 1; }
  /// Spread statistic h = max alpha value - min alpha value = i_0 - i_{l1-1}.
  int h() const { return i.empty() ? 0 : i.front() - i.back(); }

  bool valid() const;

  std::string str() const;
  nlohmann::json to_json() const;

  friend bool operator==(const Descriptor&, const Descriptor&) = default;
  friend bool operator<(const Descriptor& a, const Descriptor& b);
};

/// One admissible rewriting choice: a strictly increasing tuple p of the
/// same length as the descriptor's r (entries in 0..l1-1) and a permutation
/// sigma of {0..k} assigning a p-slot to each rewritten alpha position.
struct StepChoice {
  std::vector<int> p;
  std::vector<int> sigma;

  std::string str() const;
  friend bool operator==(const StepChoice&, const StepChoice&) = default;
};

struct StepResult {
  bool zero = false;  // the image monomial vanishes (repeated alpha index)
  int sign = 0;       // sgn(sigma) * sorting sign; 0 when zero
  Descriptor image;   // normalized image descriptor when not zero
  int h_before = 0;
  int h_after = 0;    // equals h_before when zero (no image)
  std::string case_tag;
};

/// True when (p, sigma) is admissible for the descriptor: p strictly
/// increasing inside 0..l1-1, sigma a permutation of 0..k, and the image is
/// not proportional to the source (that is, not p == r with the rewritten
/// alpha values a permutation of the original ones).
bool choice_is_admissible(const Descriptor& d, const StepChoice& c);

/// All admissible choices, p in ascending lexicographic order, then sigma.
std::vector<StepChoice> valid_choices(const Descriptor& d);

/// Apply one rewriting step. Throws CombinatError when the choice violates
/// the side conditions. Asserts the h monotonicity h' <= h, the
/// ends-preserved criterion for h' = h, and classifies the step:
///   "zero"  image vanishes          "drop"  h strictly decreases
///   h preserved, neither end offset rewritten (r_0 != 0, r_k != l1-1),
///   split by which p-ends are extreme:
///     "i-i" (p_0 = 0 only), "i-ii" (p_k = l1-1 only), "i-iii" (neither),
///     "i-both-ends" (both)
///   "ii"   h preserved, top rewritten only (r_0 = 0, r_k != l1-1)
///   "iii"  h preserved, bottom rewritten only
///   "iv-a".."iv-d"  h preserved, both ends rewritten, split by where the
///   witnesses sit (the positions forced to reproduce the extreme values).
StepResult reduce_step(const Descriptor& d, const StepChoice& c);

/// The smaller-parameter step induced by an h-preserving step of tag
/// "iv-*" (drop both alpha ends, l1 -> l1-2, n -> n-1, shift offsets) or
/// "i-iii" (same drops, permutation kept). nullopt for every other tag.
/// The induced image's alpha multiset equals the original image's interior,
/// and a choice is admissible exactly when its induced choice is; tests
/// verify both mechanically.
std::optional<std::pair<Descriptor, StepChoice>> induced_step(
    const Descriptor& d, const StepChoice& c);

/// For every choice with p == r and sigma not the identity whose image alpha
/// values are a permutation of the source's, the signed normalized image
/// must equal the source exactly (coincidence with sign +1). True when that
/// holds for the descriptor; such choices are the inadmissible ones.
bool proportional_image_check(const Descriptor& d);

struct TerminationStats {
  long nodes = 0;
  long edges = 0;
  int max_depth = 0;
  bool terminated = false;
};

/// Depth-first search over every admissible rewriting chain from the given
/// descriptor. Chains end at vanishing images or at descriptors with no
/// admissible choice (which rewrite to zero). Terminated is false only if a
/// descriptor repeats along one chain.
TerminationStats check_termination(const Descriptor& start);

struct TraceStep {
  std::string case_tag;
  bool is_zero = false;
  Descriptor descriptor;  // meaningful when !is_zero
  int h = 0;

  nlohmann::json to_json() const;
};

/// The chain obtained by always applying the first admissible choice,
/// starting with a "start" entry and ending at a vanishing image or at a
/// "terminal-zero" entry (no admissible choice left).
std::vector<TraceStep> reduce_trace(const Descriptor& start);

/// All valid descriptors over 1..n with 1 <= l1 <= l1_max, deterministic
/// order; used by the exhaustive checks.
std::vector<Descriptor> enumerate_descriptors(int n, int l1_max);

// ---------------------------------------------------------------------------
// Specialization bridge.

struct BridgeReport {
  int nvars = 0;
  bool p_pattern_ok = false;
  bool vw_ok = false;
  bool xi_ok = false;
  bool delta_sign_ok = false;
  bool family_ok = false;

  bool ok() const {
    return p_pattern_ok && vw_ok && xi_ok && delta_sign_ok && family_ok;
  }
  nlohmann::json to_json() const;
};

/// Evaluate everything at the distinguished e-point and confirm: the 0/1
/// pattern of the P table; the monomial (resp. binomial) forms of v_i, w_j
/// and v_0; the expansion of xi_k into the specialized generators; the sign
/// of the specialized delta; and that the candidate basis family matches
/// the alpha/beta/omega family elementwise up to sign under the index
/// identification (wedge degree up to 3).
BridgeReport specialization_bridge(int nvars);

}  // namespace nrs
