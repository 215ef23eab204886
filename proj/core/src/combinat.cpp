#include "nrs/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "nrs/graded.hpp"
#include "nrs/linalg.hpp"
#include "nrs/polyring.hpp"
#include "nrs/wedge.hpp"

namespace nrs {

namespace {

/// Sort labels ascending in place; returns +1/-1 for the permutation parity
/// and 0 when a label repeats.
int sort_sign(std::vector<int>& labels) {
  int sign = 1;
  for (std::size_t a = 1; a < labels.size(); ++a) {
    for (std::size_t b = a; b > 0 && labels[b - 1] > labels[b]; --b) {
      std::swap(labels[b - 1], labels[b]);
      sign = -sign;
    }
  }
  for (std::size_t a = 1; a < labels.size(); ++a) {
    if (labels[a - 1] == labels[a]) return 0;
  }
  return sign;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) sign = -sign;
    }
  }
  return sign;
}

bool is_permutation_of_iota(const std::vector<int>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// Position-indexed rewritten alpha values (unsorted); no validity checks.
std::vector<int> raw_image_values(const Descriptor& d, const StepChoice& c) {
  std::vector<int> values = d.i;
  for (std::size_t s = 0; s < d.r.size(); ++s) {
    int pos = d.r[s];
    values[pos] = d.i[pos] + d.r[s] - c.p[c.sigma[s]];
  }
  return values;
}

bool well_formed_choice(const Descriptor& d, const StepChoice& c) {
  if (static_cast<int>(c.p.size()) != d.k() + 1) return false;
  if (c.sigma.size() != c.p.size()) return false;
  for (std::size_t s = 0; s < c.p.size(); ++s) {
    if (c.p[s] < 0 || c.p[s] >= d.l1()) return false;
    if (s > 0 && c.p[s - 1] >= c.p[s]) return false;
  }
  return is_permutation_of_iota(c.sigma);
}

/// Signed maps over X-monomial index tuples, for the bridge comparisons.
using XMono = std::map<std::vector<int>, Int>;

void add_xmono(XMono& m, std::vector<int> exps, const Int& c) {
  if (c == 0) return;
  int sign = sort_sign(exps);
  if (sign == 0) return;
  Int& slot = m[exps];
  slot += sign > 0 ? c : Int(-c);
  if (slot == 0) m.erase(exps);
}

bool equal_up_to_sign(const XMono& a, const XMono& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (int sign : {1, -1}) {
    bool match = true;
    for (const auto& [tuple, c] : a) {
      auto it = b.find(tuple);
      if (it == b.end() || it->second != (sign > 0 ? c : Int(-c))) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

Int rat_to_int(const Rat& value) {
  if (value.get_den() != 1) {
    throw CombinatError("expected an integral coefficient");
  }
  return value.get_num();
}

}  // namespace

int mod_rep(int x, int n) {
  if (n <= 0) throw CombinatError("mod_rep needs a positive modulus");
  int m = (x - 1) % n;
  if (m < 0) m += n;
  return m + 1;
}

// ----------------------------------------------------------------------------
// GammaWedge

GammaWedge::GammaWedge(int n, int ell) : n_(n), ell_(ell) {
  if (n < 1) throw CombinatError("GammaWedge needs n >= 1");
  if (ell < 0 || ell > 2 * n) {
    throw CombinatError("GammaWedge degree out of range");
  }
}

GammaWedge GammaWedge::unit(int n) {
  GammaWedge g(n, 0);
  g.terms_[{}] = Rat(1);
  return g;
}

GammaWedge GammaWedge::alpha(int n, int i) {
  if (i < 1 || i > n) throw CombinatError("alpha index out of range");
  GammaWedge g(n, 1);
  g.terms_[{i - 1}] = Rat(1);
  return g;
}

GammaWedge GammaWedge::beta(int n, int j) {
  if (j < 1 || j > n) throw CombinatError("beta index out of range");
  GammaWedge g(n, 1);
  g.terms_[{n + j - 1}] = Rat(1);
  return g;
}

Rat GammaWedge::coeff(const Tuple& tuple) const {
  auto it = terms_.find(tuple);
  return it == terms_.end() ? Rat(0) : it->second;
}

void GammaWedge::add_term(Tuple labels, Rat c) {
  if (static_cast<int>(labels.size()) != ell_) {
    throw CombinatError("term length does not match the wedge degree");
  }
  for (int lbl : labels) {
    if (lbl < 0 || lbl >= 2 * n_) throw CombinatError("label out of range");
  }
  if (c == 0) return;
  int sign = sort_sign(labels);
  if (sign == 0) return;
  if (sign < 0) c = -c;
  Rat& slot = terms_[labels];
  slot += c;
  slot.canonicalize();
  if (slot == 0) terms_.erase(labels);
}

GammaWedge GammaWedge::operator-() const {
  GammaWedge out(n_, ell_);
  for (const auto& [tuple, c] : terms_) out.terms_[tuple] = Rat(-c);
  return out;
}

GammaWedge& GammaWedge::operator+=(const GammaWedge& other) {
  if (n_ != other.n_ || ell_ != other.ell_) {
    throw CombinatError("mismatched GammaWedge shapes");
  }
  for (const auto& [tuple, c] : other.terms_) {
    Rat& slot = terms_[tuple];
    slot += c;
    slot.canonicalize();
    if (slot == 0) terms_.erase(tuple);
  }
  return *this;
}

GammaWedge& GammaWedge::operator-=(const GammaWedge& other) {
  return *this += -other;
}

GammaWedge& GammaWedge::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [tuple, c] : terms_) {
    c *= scalar;
    c.canonicalize();
  }
  return *this;
}

bool operator==(const GammaWedge& a, const GammaWedge& b) {
  return a.n_ == b.n_ && a.ell_ == b.ell_ && a.terms_ == b.terms_;
}

GammaWedge GammaWedge::wedge(const GammaWedge& other) const {
  if (n_ != other.n_) throw CombinatError("mismatched GammaWedge ranks");
  GammaWedge out(n_, ell_ + other.ell_);
  for (const auto& [ta, ca] : terms_) {
    for (const auto& [tb, cb] : other.terms_) {
      Tuple joined = ta;
      joined.insert(joined.end(), tb.begin(), tb.end());
      Rat c = ca * cb;
      c.canonicalize();
      out.add_term(std::move(joined), std::move(c));
    }
  }
  return out;
}

std::string GammaWedge::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [tuple, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")*";
    if (tuple.empty()) {
      os << "1";
      continue;
    }
    for (std::size_t t = 0; t < tuple.size(); ++t) {
      if (t) os << "^";
      int lbl = tuple[t];
      if (lbl < n_) {
        os << "a" << (lbl + 1);
      } else {
        os << "b" << (lbl - n_ + 1);
      }
    }
  }
  return os.str();
}

GammaWedge omega(int n, int k) {
  GammaWedge out(n, 2);
  for (int r = 1; r <= n; ++r) {
    int a = mod_rep(r - k + 1, n);
    out.add_term({a - 1, n + r - 1}, Rat(1));
  }
  return out;
}

GammaWedge abw_element(int n, const BasisIndex& idx) {
  if (idx.v0) {
    throw CombinatError("abw_element takes an index without the v0 flag");
  }
  auto check = [n](const std::vector<int>& entries, bool strict) {
    for (std::size_t t = 0; t < entries.size(); ++t) {
      if (entries[t] < 1 || entries[t] > n) {
        throw CombinatError("index entry out of range");
      }
      if (t > 0 && (strict ? entries[t - 1] >= entries[t]
                           : entries[t - 1] > entries[t])) {
        throw CombinatError("index entries out of order");
      }
    }
  };
  check(idx.I, true);
  check(idx.J, true);
  check(idx.K, false);
  GammaWedge out = GammaWedge::unit(n);
  for (int i : idx.I) out = out.wedge(GammaWedge::alpha(n, i));
  for (int j : idx.J) out = out.wedge(GammaWedge::beta(n, j));
  for (int k : idx.K) out = out.wedge(omega(n, k));
  return out;
}

// ----------------------------------------------------------------------------
// Rank and solving

namespace {

std::map<std::vector<int>, long> tuple_columns(int n, int ell) {
  std::map<std::vector<int>, long> columns;
  long next = 0;
  for (const auto& tuple : index_tuples(2 * n, ell)) columns[tuple] = next++;
  return columns;
}

std::vector<Rat> expand_row(const GammaWedge& g,
                            const std::map<std::vector<int>, long>& columns) {
  std::vector<Rat> row(columns.size(), Rat(0));
  for (const auto& [tuple, c] : g.terms()) row[columns.at(tuple)] = c;
  return row;
}

}  // namespace

SpanReport span_rank(int n, int ell) {
  if (n < 1 || ell < 0 || ell > 2 * n) {
    throw CombinatError("span_rank parameters out of range");
  }
  SpanReport report;
  report.n = n;
  report.ell = ell;
  report.dimension = binomial(2 * n, ell).get_si();
  auto columns = tuple_columns(n, ell);
  std::vector<std::vector<Rat>> rows;
  const auto indices = enumerate_basis_indices(2 * n, ell);
  rows.reserve(indices.size());
  for (const auto& idx : indices) {
    rows.push_back(expand_row(abw_element(n, idx), columns));
  }
  report.rank = linalg::rank_dense(rows);
  report.full = report.rank == report.dimension &&
                static_cast<long>(indices.size()) == report.dimension;
  return report;
}

nlohmann::json SpanReport::to_json() const {
  return nlohmann::json{{"n", n},
                        {"ell", ell},
                        {"rank", rank},
                        {"dimension", dimension},
                        {"full", full}};
}

std::optional<SpanExpansion> express_in_span(const GammaWedge& target) {
  const int n = target.n();
  const int ell = target.ell();
  auto columns = tuple_columns(n, ell);
  const auto indices = enumerate_basis_indices(2 * n, ell);
  std::vector<std::vector<Rat>> family;
  family.reserve(indices.size());
  for (const auto& idx : indices) {
    family.push_back(expand_row(abw_element(n, idx), columns));
  }
  // Equations: one per coordinate tuple, unknowns are family coefficients.
  std::vector<std::vector<Rat>> a(columns.size(),
                                  std::vector<Rat>(indices.size(), Rat(0)));
  for (std::size_t f = 0; f < family.size(); ++f) {
    for (std::size_t row = 0; row < family[f].size(); ++row) {
      a[row][f] = family[f][row];
    }
  }
  std::vector<Rat> b = expand_row(target, columns);
  auto solution = linalg::solve_dense(std::move(a), std::move(b));
  if (!solution) return std::nullopt;
  SpanExpansion out;
  out.indices = indices;
  out.coeffs = std::move(*solution);
  return out;
}

// ----------------------------------------------------------------------------
// Rewriting steps

bool Descriptor::valid() const {
  if (n < 1 || i.empty() || r.empty()) return false;
  for (std::size_t s = 0; s < i.size(); ++s) {
    if (i[s] < 1 || i[s] > n) return false;
    if (s > 0 && i[s - 1] <= i[s]) return false;
  }
  for (std::size_t s = 0; s < r.size(); ++s) {
    if (r[s] < 0 || r[s] >= l1()) return false;
    if (s > 0 && r[s - 1] >= r[s]) return false;
  }
  return true;
}

std::string Descriptor::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t s = i.size(); s-- > 0;) {
    os << i[s];
    if (s) os << ",";
  }
  os << "|";
  for (std::size_t s = r.size(); s-- > 0;) {
    os << (n - r[s]);
    if (s) os << ",";
  }
  os << ")";
  return os.str();
}

nlohmann::json Descriptor::to_json() const {
  return nlohmann::json{{"n", n}, {"i", i}, {"r", r}, {"str", str()}};
}

bool operator<(const Descriptor& a, const Descriptor& b) {
  return std::tie(a.n, a.i, a.r) < std::tie(b.n, b.i, b.r);
}

std::string StepChoice::str() const {
  std::ostringstream os;
  os << "p=(";
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (s) os << ",";
    os << p[s];
  }
  os << ") sigma=(";
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    if (s) os << ",";
    os << sigma[s];
  }
  os << ")";
  return os.str();
}

bool choice_is_admissible(const Descriptor& d, const StepChoice& c) {
  if (!well_formed_choice(d, c)) return false;
  if (c.p != d.r) return true;
  std::vector<int> values = raw_image_values(d, c);
  std::vector<int> sorted_new = values;
  std::vector<int> sorted_old = d.i;
  std::sort(sorted_new.begin(), sorted_new.end());
  std::sort(sorted_old.begin(), sorted_old.end());
  return sorted_new != sorted_old;
}

std::vector<StepChoice> valid_choices(const Descriptor& d) {
  if (!d.valid()) throw CombinatError("invalid descriptor");
  std::vector<StepChoice> out;
  const int width = d.k() + 1;
  // Ascending tuples p, lexicographic.
  std::vector<int> p(width);
  std::iota(p.begin(), p.end(), 0);
  auto advance = [&]() {
    int s = width - 1;
    while (s >= 0 && p[s] == d.l1() - width + s) --s;
    if (s < 0) return false;
    ++p[s];
    for (int t = s + 1; t < width; ++t) p[t] = p[t - 1] + 1;
    return true;
  };
  do {
    std::vector<int> sigma(width);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      StepChoice choice{p, sigma};
      if (choice_is_admissible(d, choice)) out.push_back(std::move(choice));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  } while (advance());
  return out;
}

StepResult reduce_step(const Descriptor& d, const StepChoice& c) {
  if (!d.valid()) throw CombinatError("invalid descriptor");
  if (!well_formed_choice(d, c)) {
    throw CombinatError("malformed rewriting choice");
  }
  if (!choice_is_admissible(d, c)) {
    throw CombinatError("choice produces a monomial proportional to the source");
  }

  StepResult result;
  result.h_before = d.h();

  std::vector<int> values = raw_image_values(d, c);
  // Rewritten values stay inside the original value window.
  for (int pos : d.r) {
    if (values[pos] < d.i.back() || values[pos] > d.i.front()) {
      throw std::logic_error("rewritten value escaped the alpha window");
    }
  }

  std::vector<int> sorted_desc = values;
  std::sort(sorted_desc.begin(), sorted_desc.end(), std::greater<int>());
  bool repeat = std::adjacent_find(sorted_desc.begin(), sorted_desc.end()) !=
                sorted_desc.end();
  if (repeat) {
    result.zero = true;
    result.sign = 0;
    result.h_after = result.h_before;
    result.case_tag = "zero";
    return result;
  }

  // Sign: permutation parity of sigma times the parity of the sort into
  // descending storage order.
  int sort_parity = 1;
  {
    std::vector<int> tmp = values;
    for (std::size_t a = 1; a < tmp.size(); ++a) {
      for (std::size_t b = a; b > 0 && tmp[b - 1] < tmp[b]; --b) {
        std::swap(tmp[b - 1], tmp[b]);
        sort_parity = -sort_parity;
      }
    }
  }
  result.sign = permutation_sign(c.sigma) * sort_parity;

  result.image = Descriptor{d.n, sorted_desc, c.p};
  if (!result.image.valid()) {
    throw std::logic_error("image descriptor failed validation");
  }
  result.h_after = result.image.h();
  if (result.h_after > result.h_before) {
    throw std::logic_error("h increased along a rewriting step");
  }

  const int l1 = d.l1();
  const int kk = d.k();
  const bool ends_preserved =
      sorted_desc.front() == d.i.front() && sorted_desc.back() == d.i.back();
  if ((result.h_after == result.h_before) != ends_preserved) {
    throw std::logic_error("h preservation disagrees with the ends criterion");
  }

  if (result.h_after < result.h_before) {
    result.case_tag = "drop";
    return result;
  }

  // h preserved: classify by which extreme subscripts were rewritten.
  const bool top = d.r.front() == 0;           // subscript of the max value
  const bool bottom = d.r.back() == l1 - 1;    // subscript of the min value
  auto sigma_slot = [&](int value) {
    for (int s = 0; s <= kk; ++s) {
      if (c.sigma[s] == value) return s;
    }
    throw std::logic_error("permutation misses a slot");
  };
  auto f = [&](int s) { return d.i[s] + s; };  // weakly decreasing in s

  if (!top && !bottom) {
    const bool p_low = c.p.front() == 0;
    const bool p_high = c.p.back() == l1 - 1;
    if (p_low && !p_high) {
      result.case_tag = "i-i";
    } else if (!p_low && p_high) {
      result.case_tag = "i-ii";
    } else if (!p_low && !p_high) {
      result.case_tag = "i-iii";
    } else {
      result.case_tag = "i-both-ends";
    }
    return result;
  }

  if (top && !bottom) {
    if (c.p.front() != 0) {
      throw std::logic_error("top-preserving step without a zero p-slot");
    }
    int witness = sigma_slot(0);
    if (f(d.r[witness]) != d.i.front()) {
      throw std::logic_error("missing max witness in a top-rewriting step");
    }
    result.case_tag = "ii";
    return result;
  }

  if (!top && bottom) {
    if (c.p.back() != l1 - 1) {
      throw std::logic_error("bottom-preserving step without a top p-slot");
    }
    int witness = sigma_slot(kk);
    if (f(d.r[witness]) - (l1 - 1) != d.i.back()) {
      throw std::logic_error("missing min witness in a bottom-rewriting step");
    }
    result.case_tag = "iii";
    return result;
  }

  // Both extremes rewritten and preserved.
  if (c.p.front() != 0 || c.p.back() != l1 - 1) {
    throw std::logic_error("double-end step without extreme p-slots");
  }
  int k_max = sigma_slot(0);   // position reproducing the max value
  int k_min = sigma_slot(kk);  // position reproducing the min value
  if (f(d.r[k_max]) != d.i.front()) {
    throw std::logic_error("missing max witness in a double-end step");
  }
  if (f(d.r[k_min]) - (l1 - 1) != d.i.back()) {
    throw std::logic_error("missing min witness in a double-end step");
  }
  if (k_min == kk && k_max == 0) {
    result.case_tag = "iv-a";
  } else if (k_min == kk) {
    result.case_tag = "iv-b";
  } else if (k_max == 0) {
    result.case_tag = "iv-c";
  } else {
    result.case_tag = "iv-d";
  }
  return result;
}

std::optional<std::pair<Descriptor, StepChoice>> induced_step(
    const Descriptor& d, const StepChoice& c) {
  StepResult step = reduce_step(d, c);
  const int kk = d.k();

  if (step.case_tag == "i-iii") {
    Descriptor smaller;
    smaller.n = d.n - 1;
    smaller.i.assign(d.i.begin() + 1, d.i.end() - 1);
    smaller.r = d.r;
    for (int& v : smaller.r) --v;
    StepChoice choice = c;
    for (int& v : choice.p) --v;
    return std::make_pair(std::move(smaller), std::move(choice));
  }

  if (step.case_tag.rfind("iv-", 0) != 0) return std::nullopt;
  if (kk < 2) return std::nullopt;  // nothing left after dropping both ends

  auto sigma_slot = [&](int value) {
    for (int s = 0; s <= kk; ++s) {
      if (c.sigma[s] == value) return s;
    }
    throw std::logic_error("permutation misses a slot");
  };
  int k_max = sigma_slot(0);
  int k_min = sigma_slot(kk);

  // Hand the dropped slots' p-values to the witness positions so the middle
  // positions carry exactly the middle values.
  std::vector<int> sigma_adjusted = c.sigma;
  if (k_min != kk) sigma_adjusted[k_min] = c.sigma[kk];
  if (k_max != 0) sigma_adjusted[k_max] = c.sigma[0];

  Descriptor smaller;
  smaller.n = d.n - 1;
  smaller.i.assign(d.i.begin() + 1, d.i.end() - 1);
  smaller.r.assign(d.r.begin() + 1, d.r.end() - 1);
  for (int& v : smaller.r) --v;

  StepChoice choice;
  choice.p.assign(c.p.begin() + 1, c.p.end() - 1);
  for (int& v : choice.p) --v;
  choice.sigma.assign(sigma_adjusted.begin() + 1, sigma_adjusted.end() - 1);
  for (int& v : choice.sigma) --v;
  return std::make_pair(std::move(smaller), std::move(choice));
}

bool proportional_image_check(const Descriptor& d) {
  if (!d.valid()) throw CombinatError("invalid descriptor");
  const int width = d.k() + 1;
  std::vector<int> sigma(width);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> identity = sigma;
  std::vector<int> sorted_old = d.i;
  std::sort(sorted_old.begin(), sorted_old.end());
  bool ok = true;
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    StepChoice choice{d.r, sigma};
    std::vector<int> values = raw_image_values(d, choice);
    std::vector<int> sorted_new = values;
    std::sort(sorted_new.begin(), sorted_new.end());
    if (sorted_new != sorted_old) continue;  // admissible, not proportional
    // Proportional image: the values are the original ones rearranged; the
    // normalized monomial must coincide with the source with sign +1.
    std::vector<int> tmp = values;
    int sign = 1;
    for (std::size_t a = 1; a < tmp.size(); ++a) {
      for (std::size_t b = a; b > 0 && tmp[b - 1] < tmp[b]; --b) {
        std::swap(tmp[b - 1], tmp[b]);
        sign = -sign;
      }
    }
    if (tmp != d.i) ok = false;
    if (permutation_sign(sigma) * sign != 1) ok = false;
  }
  return ok;
}

TerminationStats check_termination(const Descriptor& start) {
  TerminationStats stats;
  stats.terminated = true;
  std::set<Descriptor> completed;
  std::set<Descriptor> on_path;
  std::set<Descriptor> counted;

  std::function<bool(const Descriptor&, int)> visit = [&](const Descriptor& d,
                                                          int depth) {
    stats.max_depth = std::max(stats.max_depth, depth);
    if (completed.count(d)) return true;
    if (on_path.count(d)) return false;  // cycle: the chain never ends
    if (counted.insert(d).second) ++stats.nodes;
    on_path.insert(d);
    bool ok = true;
    for (const auto& choice : valid_choices(d)) {
      ++stats.edges;
      StepResult step = reduce_step(d, choice);
      if (step.zero) continue;
      if (!visit(step.image, depth + 1)) {
        ok = false;
        break;
      }
    }
    on_path.erase(d);
    if (ok) completed.insert(d);
    return ok;
  };

  stats.terminated = visit(start, 0);
  return stats;
}

nlohmann::json TraceStep::to_json() const {
  nlohmann::json out{{"case", case_tag}};
  if (is_zero) {
    out["descriptor"] = nullptr;
    out["h"] = nullptr;
  } else {
    out["descriptor"] = descriptor.to_json();
    out["h"] = h;
  }
  return out;
}

std::vector<TraceStep> reduce_trace(const Descriptor& start) {
  std::vector<TraceStep> trace;
  trace.push_back(TraceStep{"start", false, start, start.h()});
  Descriptor current = start;
  while (true) {
    auto choices = valid_choices(current);
    if (choices.empty()) {
      trace.push_back(TraceStep{"terminal-zero", true, {}, 0});
      return trace;
    }
    StepResult step = reduce_step(current, choices.front());
    if (step.zero) {
      trace.push_back(TraceStep{"zero", true, {}, 0});
      return trace;
    }
    trace.push_back(TraceStep{step.case_tag, false, step.image, step.h_after});
    current = step.image;
  }
}

std::vector<Descriptor> enumerate_descriptors(int n, int l1_max) {
  std::vector<Descriptor> out;
  for (int l1 = 1; l1 <= std::min(l1_max, n); ++l1) {
    for (const auto& combo : index_tuples(n, l1)) {
      std::vector<int> values;
      values.reserve(combo.size());
      for (auto it = combo.rbegin(); it != combo.rend(); ++it) {
        values.push_back(*it + 1);  // 0-based ascending -> 1-based descending
      }
      for (int subset = 1; subset < (1 << l1); ++subset) {
        std::vector<int> offsets;
        for (int bit = 0; bit < l1; ++bit) {
          if (subset & (1 << bit)) offsets.push_back(bit);
        }
        out.push_back(Descriptor{n, values, offsets});
      }
    }
  }
  return out;
}

// ----------------------------------------------------------------------------
// Specialization bridge

namespace {

Int delta_at_special(int nvars) {
  const std::vector<Int> pt = special_point(nvars);
  const int size = nvars - 1;
  std::vector<std::vector<Int>> matrix(size, std::vector<Int>(size, Int(0)));
  for (int row = 1; row <= size; ++row) {
    for (int col = 1; col <= size; ++col) {
      int k = nvars - 2 * row + col;
      if (k == 0) {
        matrix[row - 1][col - 1] = 1;
      } else if (k >= 1 && k <= nvars) {
        matrix[row - 1][col - 1] = pt[k - 1];
      }
    }
  }
  return linalg::bareiss_det_int(matrix);
}

Int sign_pow(long exponent) { return exponent % 2 == 0 ? Int(1) : Int(-1); }

XMono gamma_to_xmono_even(const GammaWedge& g, int n) {
  XMono out;
  for (const auto& [tuple, c] : g.terms()) {
    std::vector<int> exps;
    exps.reserve(tuple.size());
    for (int lbl : tuple) {
      if (lbl < n) {
        exps.push_back(2 * lbl);
      } else {
        int j = lbl - n + 1;
        exps.push_back((2 * (n - j + 1) + 1) % (2 * n));
      }
    }
    add_xmono(out, std::move(exps), rat_to_int(c));
  }
  return out;
}

XMono gamma_to_xmono_odd(const GammaWedge& g, int n, bool with_gamma) {
  XMono base;
  for (const auto& [tuple, c] : g.terms()) {
    std::vector<int> exps;
    exps.reserve(tuple.size());
    for (int lbl : tuple) {
      if (lbl < n) {
        exps.push_back(2 * (lbl + 1));
      } else {
        int j = lbl - n + 1;
        exps.push_back(2 * n + 1 - 2 * j);
      }
    }
    add_xmono(base, std::move(exps), rat_to_int(c));
  }
  if (!with_gamma) return base;
  // Wedge 1 - X^{2n} on the left.
  XMono out;
  for (const auto& [tuple, c] : base) {
    std::vector<int> low = tuple;
    low.insert(low.begin(), 0);
    add_xmono(out, std::move(low), c);
    std::vector<int> high = tuple;
    high.insert(high.begin(), 2 * n);
    add_xmono(out, std::move(high), Int(-c));
  }
  return out;
}

XMono eval_to_xmono(const WedgeElement& w, const std::vector<Int>& pt) {
  XMono out;
  for (const auto& [tuple, c] : w.eval_terms(pt)) {
    if (c != 0) out[tuple] = c;
  }
  return out;
}

bool bridge_even(int nvars, BridgeReport& report) {
  const int n = half_n(nvars);
  const std::vector<Int> pt = special_point(nvars);

  report.p_pattern_ok = true;
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= n; ++s) {
      Int expected = s == mod_rep(n - r + 2, n) ? 1 : 0;
      if (p_rs(nvars, r, s).eval(pt) != expected) report.p_pattern_ok = false;
    }
  }

  report.vw_ok = true;
  for (int idx = 1; idx <= n; ++idx) {
    XMono v_expected;
    v_expected[{(2 * (n - idx + 1)) % (2 * n)}] = 1;
    if (eval_to_xmono(gen_v(nvars, idx), pt) != v_expected) {
      report.vw_ok = false;
    }
    XMono w_expected;
    w_expected[{(2 * (n - idx + 1) + 1) % (2 * n)}] = 1;
    if (eval_to_xmono(gen_w(nvars, idx), pt) != w_expected) {
      report.vw_ok = false;
    }
  }
  {
    XMono v0_expected;
    v0_expected[{0}] = 1;
    v0_expected[{2 * n}] = -1;
    if (eval_to_xmono(gen_v0(nvars), pt) != v0_expected) report.vw_ok = false;
  }

  report.xi_ok = true;
  for (int k = 1; k <= n; ++k) {
    XMono expected;
    for (int r = 1; r <= n; ++r) {
      int a = (2 * (n + r - k) + 1) % (2 * n);
      int b = (2 * (n - r + 1)) % (2 * n);
      add_xmono(expected, {a, b}, Int(1));
    }
    if (eval_to_xmono(gen_xi(nvars, k), pt) != expected) report.xi_ok = false;
  }

  report.delta_sign_ok =
      delta_at_special(nvars) == sign_pow(static_cast<long>(n) * (n + 1) / 2 + 1);

  report.family_ok = true;
  for (int ell = 1; ell <= std::min(nvars, 3); ++ell) {
    for (const auto& idx : enumerate_basis_indices(nvars, ell)) {
      XMono lhs = eval_to_xmono(basis_element(nvars, idx), pt);
      BasisIndex mapped;
      mapped.I.reserve(idx.I.size());
      for (int i : idx.I) mapped.I.push_back(mod_rep(2 - i, n));
      std::sort(mapped.I.begin(), mapped.I.end());
      mapped.J = idx.J;
      mapped.K = idx.K;
      XMono rhs = gamma_to_xmono_even(abw_element(n, mapped), n);
      if (!equal_up_to_sign(lhs, rhs)) report.family_ok = false;
    }
  }
  return report.ok();
}

bool bridge_odd(int nvars, BridgeReport& report) {
  const int n = half_n(nvars);
  const std::vector<Int> pt = special_point(nvars);

  report.p_pattern_ok = true;
  for (int r = 1; r <= n + 1; ++r) {
    for (int s = 1; s <= n + 1; ++s) {
      Int expected = s == n + 2 - r ? 1 : 0;
      if (p_rs(nvars, r, s).eval(pt) != expected) report.p_pattern_ok = false;
    }
  }

  report.vw_ok = true;
  {
    XMono v0_expected;
    v0_expected[{0}] = 1;
    v0_expected[{2 * n}] = -1;
    if (eval_to_xmono(gen_v0(nvars), pt) != v0_expected) report.vw_ok = false;
  }
  for (int idx = 1; idx <= n; ++idx) {
    XMono v_expected;
    v_expected[{2 * (n + 1 - idx)}] = 1;
    if (eval_to_xmono(gen_v(nvars, idx), pt) != v_expected) {
      report.vw_ok = false;
    }
    XMono w_expected;
    w_expected[{2 * n + 1 - 2 * idx}] = 1;
    if (eval_to_xmono(gen_w(nvars, idx), pt) != w_expected) {
      report.vw_ok = false;
    }
  }

  report.xi_ok = true;
  for (int k = 1; k <= n; ++k) {
    XMono expected;
    for (int r = 1; r <= n; ++r) {
      int vi = mod_rep(k - r, n);
      int a = 2 * (n + 1 - vi);
      int b = 2 * n + 1 - 2 * r;
      add_xmono(expected, {a, b}, Int(-1));
    }
    if (eval_to_xmono(gen_xi(nvars, k), pt) != expected) report.xi_ok = false;
  }

  report.delta_sign_ok =
      delta_at_special(nvars) == sign_pow(static_cast<long>(n) * (n + 1) / 2);

  report.family_ok = true;
  for (int ell = 1; ell <= std::min(nvars, 3); ++ell) {
    for (const auto& idx : enumerate_basis_indices(nvars, ell)) {
      XMono lhs = eval_to_xmono(basis_element(nvars, idx), pt);
      BasisIndex mapped;
      mapped.I.reserve(idx.I.size());
      for (int i : idx.I) mapped.I.push_back(mod_rep(1 - i, n));
      std::sort(mapped.I.begin(), mapped.I.end());
      mapped.J = idx.J;
      mapped.K = idx.K;
      XMono rhs =
          gamma_to_xmono_odd(abw_element(n, mapped), n, /*with_gamma=*/idx.v0);
      if (!equal_up_to_sign(lhs, rhs)) report.family_ok = false;
    }
  }
  return report.ok();
}

}  // namespace

nlohmann::json BridgeReport::to_json() const {
  return nlohmann::json{{"n", nvars},
                        {"p_pattern", p_pattern_ok},
                        {"generators", vw_ok},
                        {"xi", xi_ok},
                        {"delta_sign", delta_sign_ok},
                        {"family", family_ok},
                        {"ok", ok()}};
}

BridgeReport specialization_bridge(int nvars) {
  if (nvars < 2) {
    throw CombinatError("specialization bridge needs at least two variables");
  }
  BridgeReport report;
  report.nvars = nvars;
  if (nvars % 2 == 0) {
    bridge_even(nvars, report);
  } else {
    bridge_odd(nvars, report);
  }
  return report;
}

}  // namespace nrs
