#include "nrs/construct.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "nrs/polyring.hpp"

namespace nrs {

int half_n(int nvars) {
  if (nvars < 1) throw PolyError("half_n: nvars must be positive");
  return nvars / 2;
}

namespace {

MPoly compute_p(int nvars, int r, int s);

// Write-once memo table for P_{r,s}; readers share the lock, a computed
// value is published once and references into the node-based map stay valid.
const MPoly& p_lookup(int nvars, int r, int s) {
  static std::shared_mutex mu;
  static std::map<std::tuple<int, int, int>, MPoly> table;
  const std::tuple<int, int, int> key{nvars, r, s};
  {
    std::shared_lock lock(mu);
    const auto it = table.find(key);
    if (it != table.end()) return it->second;
  }
  MPoly value = compute_p(nvars, r, s);  // recursion happens unlocked
  std::unique_lock lock(mu);
  return table.try_emplace(key, std::move(value)).first->second;
}

MPoly compute_p(int nvars, int r, int s) {
  const int n = half_n(nvars);
  const bool even = nvars % 2 == 0;
  const auto syms = esyms(nvars);
  if (s <= 0) return MPoly(syms);
  if (even && s >= n + 1) return MPoly(syms);
  if (!even && r >= 2 && s >= n + 1) return MPoly(syms);
  if (r == 1) return e_poly(nvars, 2 * s - 1);
  return p_lookup(nvars, r - 1, s + 1) -
         e_poly(nvars, 2 * s) * p_lookup(nvars, r - 1, 1);
}

}  // namespace

const MPoly& p_rs(int nvars, int r, int s) {
  const int n = half_n(nvars);
  const int rmax = nvars % 2 == 0 ? n : n + 1;
  if (r < 1 || r > rmax)
    throw PolyError("p_rs: r out of range 1.." + std::to_string(rmax));
  return p_lookup(nvars, r, s);
}

MPoly p_rs_ext(int nvars, int r, int s) {
  if (r <= 0) return e_poly(nvars, 2 * (s + r) - 3);
  return p_rs(nvars, r, s);
}

namespace {

// v as a polynomial in a marker symbol: sum_s P_{r,s} X^{2(s-1)} over the
// given scratch ring; `marker` is "X", "X1" or "X2".
MPoly v_as_poly(int nvars, int r, const SymbolsPtr& scratch,
                const std::string& marker) {
  const int n = half_n(nvars);
  const bool even = nvars % 2 == 0;
  const MPoly X = MPoly::variable(scratch, marker);
  MPoly out(scratch);
  const int smax = even ? n : n + 1;
  for (int s = 1; s <= smax; ++s)
    out += p_rs(nvars, r, s).with_symbols(scratch) *
           X.pow(static_cast<unsigned>(2 * (s - 1)));
  return out;
}

// v0 = sum_{j=0}^{n} e_{2j} X^{2j} (both parities; even case tops out at
// X^{2n} = X^{nvars}, the widened scaffold).
MPoly v0_as_poly(int nvars, const SymbolsPtr& scratch,
                 const std::string& marker) {
  const int n = half_n(nvars);
  const MPoly X = MPoly::variable(scratch, marker);
  MPoly out(scratch);
  for (int j = 0; j <= n; ++j)
    out += e_poly(nvars, 2 * j).with_symbols(scratch) *
           X.pow(static_cast<unsigned>(2 * j));
  return out;
}

// Collect a polynomial in one marker symbol into a degree-1 wedge element.
WedgeElement wedge1_from_poly(int nvars, const MPoly& f,
                              const std::string& marker, bool widened) {
  const auto scratch = f.symbols();
  const auto mi = scratch->index(marker);
  if (!mi) throw PolyError("wedge1_from_poly: marker not in scratch ring");
  const auto target = esyms(nvars);
  WedgeElement out(nvars, 1, target, widened);
  std::map<int, MPoly> parts;
  for (const auto& [e, c] : f.terms()) {
    const int power = static_cast<int>(e[*mi]);
    Exponents stripped = e;
    stripped[*mi] = 0;
    auto [it, fresh] = parts.try_emplace(power, MPoly(scratch));
    it->second += MPoly::monomial(scratch, std::move(stripped), c);
  }
  for (auto& [power, coeff] : parts)
    out.add_term({power}, coeff.with_symbols(target));
  return out;
}

// Collect an antisymmetric polynomial in (X1, X2) into a degree-2 wedge
// element; verifies antisymmetry and in-range exponents.
WedgeElement wedge2_from_poly(int nvars, const MPoly& f) {
  const auto scratch = f.symbols();
  const auto i1 = scratch->index("X1");
  const auto i2 = scratch->index("X2");
  if (!i1 || !i2) throw PolyError("wedge2_from_poly: scratch ring lacks X1/X2");
  {
    // Antisymmetry under X1 <-> X2.
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < scratch->size(); ++i) {
      std::size_t j = i;
      if (i == *i1) j = *i2;
      else if (i == *i2) j = *i1;
      images.push_back(MPoly::variable(scratch, scratch->name(j)));
    }
    if (!(f.substitute(scratch, images) + f).is_zero())
      throw PolyError("wedge2_from_poly: polynomial is not antisymmetric");
  }
  const auto target = esyms(nvars);
  WedgeElement out(nvars, 2, target);
  std::map<std::pair<int, int>, MPoly> parts;
  for (const auto& [e, c] : f.terms()) {
    const int a = static_cast<int>(e[*i1]);
    const int b = static_cast<int>(e[*i2]);
    if (a >= b) continue;  // mirror term; antisymmetry already checked
    Exponents stripped = e;
    stripped[*i1] = stripped[*i2] = 0;
    auto [it, fresh] = parts.try_emplace(std::make_pair(a, b), MPoly(scratch));
    it->second += MPoly::monomial(scratch, std::move(stripped), c);
  }
  for (auto& [ab, coeff] : parts)
    out.add_term({ab.first, ab.second}, coeff.with_symbols(target));
  return out;
}

// Odd-case scaffold w_0 = sum_{j=1}^{n+1} e_{2j-1} X^{2j-1}; its top term
// X^{2n+1} leaves the module, hence widened.
MPoly w0_as_poly_odd(int nvars, const SymbolsPtr& scratch,
                     const std::string& marker) {
  const int n = half_n(nvars);
  const MPoly X = MPoly::variable(scratch, marker);
  MPoly out(scratch);
  for (int j = 1; j <= n + 1; ++j)
    out += e_poly(nvars, 2 * j - 1).with_symbols(scratch) *
           X.pow(static_cast<unsigned>(2 * j - 1));
  return out;
}

MPoly theta_poly(int nvars, int sign, const SymbolsPtr& scratch,
                 const std::string& marker) {
  const MPoly X = MPoly::variable(scratch, marker);
  MPoly out(scratch);
  Int unit = 1;
  for (int k = 0; k <= nvars; ++k) {
    out += e_poly(nvars, k).with_symbols(scratch) * unit *
           X.pow(static_cast<unsigned>(k));
    unit *= sign;
  }
  return out;
}

void check_gen_range(int index, int lo, int hi, const char* what) {
  if (index < lo || index > hi)
    throw PolyError(std::string(what) + ": index " + std::to_string(index) +
                    " outside " + std::to_string(lo) + ".." +
                    std::to_string(hi));
}

}  // namespace

WedgeElement gen_v(int nvars, int i) {
  check_gen_range(i, 1, half_n(nvars), "gen_v");
  const auto scratch = esyms_X(nvars);
  return wedge1_from_poly(nvars, v_as_poly(nvars, i, scratch, "X"), "X",
                          /*widened=*/false);
}

WedgeElement gen_w(int nvars, int j) {
  check_gen_range(j, 1, half_n(nvars), "gen_w");
  const auto scratch = esyms_X(nvars);
  const MPoly X = MPoly::variable(scratch, "X");
  if (nvars % 2 == 0)
    return wedge1_from_poly(nvars, X * v_as_poly(nvars, j, scratch, "X"), "X",
                            false);
  // Odd: w_j = sum_s P_{j+1,s} X^{2s-1}; the top coefficient vanishes for
  // j >= 1, so the element stays inside the module.
  return wedge1_from_poly(nvars, X * v_as_poly(nvars, j + 1, scratch, "X"),
                          "X", false);
}

WedgeElement gen_v0(int nvars) {
  const auto scratch = esyms_X(nvars);
  // Even: the scaffold reaches X^{2n} one past the module rank.
  const bool widened = nvars % 2 == 0;
  return wedge1_from_poly(nvars, v0_as_poly(nvars, scratch, "X"), "X",
                          widened);
}

WedgeElement gen_xi(int nvars, int k) {
  const int n = half_n(nvars);
  check_gen_range(k, 1, n, "gen_xi");
  const auto scratch = esyms_xx(nvars);
  const MPoly X1 = MPoly::variable(scratch, "X1");
  const MPoly X2 = MPoly::variable(scratch, "X2");
  MPoly numerator(scratch);
  if (nvars % 2 == 0) {
    // xi_k = (g(X1) v0(X2) - g(X2) v0(X1)) / (X1 + X2), g = X^2 v_k.
    const MPoly g1 = X1.pow(2) * v_as_poly(nvars, k, scratch, "X1");
    const MPoly g2 = X2.pow(2) * v_as_poly(nvars, k, scratch, "X2");
    const MPoly v01 = v0_as_poly(nvars, scratch, "X1");
    const MPoly v02 = v0_as_poly(nvars, scratch, "X2");
    numerator = g1 * v02 - g2 * v01;
  } else {
    // xi_k = (h(X1) w_{k-1}(X2) - h(X2) w_{k-1}(X1)) / (X1 + X2), h = X v0;
    // w_0 is the widened scaffold, used here only inside the combination.
    const MPoly h1 = X1 * v0_as_poly(nvars, scratch, "X1");
    const MPoly h2 = X2 * v0_as_poly(nvars, scratch, "X2");
    const MPoly w1p = k == 1 ? w0_as_poly_odd(nvars, scratch, "X1")
                             : X1 * v_as_poly(nvars, k, scratch, "X1");
    const MPoly w2p = k == 1 ? w0_as_poly_odd(nvars, scratch, "X2")
                             : X2 * v_as_poly(nvars, k, scratch, "X2");
    numerator = h1 * w2p - h2 * w1p;
  }
  return wedge2_from_poly(nvars, numerator.exact_div(X1 + X2));
}

WedgeElement gen_Xi1(int nvars) {
  const auto scratch = esyms_X(nvars);
  const MPoly tp = theta_poly(nvars, +1, scratch, "X");
  const MPoly tm = theta_poly(nvars, -1, scratch, "X");
  const MPoly two_xi1 = (nvars % 2 == 0) ? tp - tm : tp + tm;
  return wedge1_from_poly(nvars, two_xi1.exact_div(Int(2)), "X", false);
}

WedgeElement gen_Xi2(int nvars) {
  const auto scratch = esyms_xx(nvars);
  const MPoly X1 = MPoly::variable(scratch, "X1");
  const MPoly X2 = MPoly::variable(scratch, "X2");
  const MPoly tp1 = theta_poly(nvars, +1, scratch, "X1");
  const MPoly tp2 = theta_poly(nvars, +1, scratch, "X2");
  const MPoly tm1 = theta_poly(nvars, -1, scratch, "X1");
  const MPoly tm2 = theta_poly(nvars, -1, scratch, "X2");
  const MPoly skew = ((tp1 * tp2 - tm1 * tm2) * (X1 - X2)).exact_div(X1 + X2);
  const MPoly cross = tp1 * tm2 - tp2 * tm1;
  const MPoly four_xi2 =
      (nvars % 2 == 0) ? skew + cross : skew - cross;  // (-1)^N cross
  return wedge2_from_poly(nvars, four_xi2.exact_div(Int(4)));
}

WedgeElement generator(int nvars, std::string_view kind, int index) {
  if (kind == "v") {
    if (index == 0) return gen_v0(nvars);
    return gen_v(nvars, index);
  }
  if (kind == "v0") return gen_v0(nvars);
  if (kind == "w") return gen_w(nvars, index);
  if (kind == "xi") return gen_xi(nvars, index);
  if (kind == "Xi1") return gen_Xi1(nvars);
  if (kind == "Xi2") return gen_Xi2(nvars);
  throw PolyError("generator: unknown kind '" + std::string(kind) + "'");
}

MPoly xi_expansion_coeff(int nvars, int k, int i, int j) {
  if (nvars % 2 != 0)
    throw PolyError("xi_expansion_coeff: defined for even variable counts");
  const int n = half_n(nvars);
  if (k < 1 || k > n) throw PolyError("xi_expansion_coeff: k out of range");
  if (i < 0 || i > n - 1 || j < 0 || j > n - 1)
    throw PolyError("xi_expansion_coeff: i,j out of range");
  const auto syms = esyms(nvars);
  MPoly acc(syms);
  if (i <= n - k) {
    const int total = i + j + 2;
    for (int r = 0; r <= i; ++r)
      acc += e_poly(nvars, 2 * r) * p_rs_ext(nvars, k - 1, total - r);
    for (int r = j + 1; r <= total; ++r)
      acc -= e_poly(nvars, 2 * r) * p_rs_ext(nvars, k - 1, total - r);
  } else {
    const int total = i + j + 1;
    for (int r = 0; r <= j; ++r)
      acc += e_poly(nvars, 2 * r) * p_rs_ext(nvars, k, total - r);
    for (int r = i + 1; r <= total; ++r)
      acc -= e_poly(nvars, 2 * r) * p_rs_ext(nvars, k, total - r);
  }
  return acc;
}

long BasisIndex::deg1(int nvars) const {
  const bool even = nvars % 2 == 0;
  long d = 0;  // v0 contributes 0 in the odd case
  for (const int i : I) d += 2L * i - 1;
  for (const int j : J) d += even ? 2L * j - 2 : 2L * j;
  for (const int k : K) d += 2L * k - 2;
  return d;
}

std::string BasisIndex::str() const {
  std::ostringstream os;
  bool first = true;
  const auto emit = [&](const char* stem, const std::vector<int>& xs) {
    if (xs.empty()) return;
    if (!first) os << "^";
    first = false;
    os << stem << "(";
    for (std::size_t t = 0; t < xs.size(); ++t) os << (t ? "," : "") << xs[t];
    os << ")";
  };
  if (v0) {
    os << "v0";
    first = false;
  }
  emit("v", I);
  emit("w", J);
  emit("xi", K);
  if (first) os << "1";
  return os.str();
}

nlohmann::json BasisIndex::to_json() const {
  return {{"v0", v0}, {"I", I}, {"J", J}, {"K", K}};
}

namespace {

// All strictly increasing tuples of the given length from 1..hi.
std::vector<std::vector<int>> strict_tuples(int hi, int len) {
  std::vector<std::vector<int>> out;
  if (len == 0) {
    out.push_back({});
    return out;
  }
  if (hi < len) return out;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= hi; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// All weakly increasing tuples of the given length from 1..hi.
std::vector<std::vector<int>> weak_tuples(int hi, int len) {
  std::vector<std::vector<int>> out;
  if (len == 0) {
    out.push_back({});
    return out;
  }
  if (hi < 1) return out;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= hi; ++x) {
      cur.push_back(x);
      self(self, x);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Even-style enumeration (also the odd Bas^{o-} family): shapes descending
// lexicographically, I/J/K ascending.
std::vector<BasisIndex> enumerate_plain(int n, int ell) {
  std::vector<std::array<int, 3>> shapes;
  for (int l1 = ell; l1 >= 0; --l1)
    for (int l2 = ell - l1; l2 >= 0; --l2) {
      const int rest = ell - l1 - l2;
      if (rest >= 0 && rest % 2 == 0) shapes.push_back({l1, l2, rest / 2});
    }
  std::sort(shapes.begin(), shapes.end(),
            [](const auto& a, const auto& b) { return a > b; });
  std::vector<BasisIndex> out;
  for (const auto& [l1, l2, l3] : shapes) {
    const int jk_hi = n - l1 - l3;
    for (const auto& I : strict_tuples(n, l1))
      for (const auto& J : strict_tuples(jk_hi, l2))
        for (const auto& K : weak_tuples(jk_hi + 1, l3))
          out.push_back(BasisIndex{false, I, J, K});
  }
  return out;
}

}  // namespace

std::vector<BasisIndex> enumerate_basis_indices(int nvars, int ell) {
  const int n = half_n(nvars);
  const bool even = nvars % 2 == 0;
  if (ell < 0 || ell > nvars)
    throw PolyError("enumerate_basis_indices: ell outside 0..nvars");
  if (even) return enumerate_plain(n, ell);
  std::vector<BasisIndex> out;
  if (ell >= 1)
    for (BasisIndex idx : enumerate_plain(n, ell - 1)) {
      idx.v0 = true;
      out.push_back(std::move(idx));
    }
  for (BasisIndex idx : enumerate_plain(n, ell)) out.push_back(std::move(idx));
  return out;
}

WedgeElement basis_element(int nvars, const BasisIndex& idx) {
  if (idx.v0 && nvars % 2 == 0)
    throw PolyError("basis_element: v0 flag is odd-case only");
  WedgeElement acc(nvars, 0, esyms(nvars));
  acc.set_coeff({}, MPoly(esyms(nvars), 1));
  if (idx.v0) acc = acc.wedge(gen_v0(nvars));
  for (const int i : idx.I) acc = acc.wedge(gen_v(nvars, i));
  for (const int j : idx.J) acc = acc.wedge(gen_w(nvars, j));
  for (const int k : idx.K) acc = acc.wedge(gen_xi(nvars, k));
  return acc;
}

std::vector<std::pair<BasisIndex, WedgeElement>> enumerate_basis(int nvars,
                                                                 int ell) {
  std::vector<std::pair<BasisIndex, WedgeElement>> out;
  for (const auto& idx : enumerate_basis_indices(nvars, ell))
    out.emplace_back(idx, basis_element(nvars, idx));
  return out;
}

}  // namespace nrs
