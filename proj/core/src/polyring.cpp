#include "nrs/polyring.hpp"

#include <map>
#include <mutex>
#include <string>

#include "nrs/linalg.hpp"

namespace nrs {

namespace {

// Memoized symbol-set factory; keyed by a small tag + variable count so the
// same shared_ptr is handed out process-wide (cheap pointer-equality checks).
SymbolsPtr cached_set(char tag, int nvars) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, SymbolsPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{tag, nvars}];
  if (slot) return slot;
  std::vector<std::string> names;
  const auto push_range = [&](const char* stem, int count) {
    for (int k = 1; k <= count; ++k)
      names.push_back(stem + std::to_string(k));
  };
  switch (tag) {
    case 'e':
      push_range("e", nvars);
      break;
    case 'b':  // bar target: e_1..e_N, x
      push_range("e", nvars);
      names.push_back("x");
      break;
    case 'x':
      push_range("x", nvars);
      break;
    case 'y':  // X-REP bar target: x_1..x_{N-2}, x
      push_range("x", nvars - 2);
      names.push_back("x");
      break;
    case '2':  // e_1..e_N, X1, X2
      push_range("e", nvars);
      names.push_back("X1");
      names.push_back("X2");
      break;
    case '1':  // e_1..e_N, X
      push_range("e", nvars);
      names.push_back("X");
      break;
  }
  slot = SymbolSet::make(std::move(names));
  return slot;
}

}  // namespace

SymbolsPtr esyms(int nvars) { return cached_set('e', nvars); }
SymbolsPtr esyms_with_x(int nvars) { return cached_set('b', nvars); }
SymbolsPtr xsyms(int nvars) { return cached_set('x', nvars); }
SymbolsPtr xsyms_bar(int nvars) { return cached_set('y', nvars); }
SymbolsPtr esyms_xx(int nvars) { return cached_set('2', nvars); }
SymbolsPtr esyms_X(int nvars) { return cached_set('1', nvars); }

MPoly e_poly(int nvars, int k) {
  const auto syms = esyms(nvars);
  if (k == 0) return MPoly(syms, 1);
  if (k < 0 || k > nvars) return MPoly(syms);
  Exponents e(syms->size(), 0);
  e[static_cast<std::size_t>(k - 1)] = 1;
  return MPoly::monomial(syms, std::move(e), 1);
}

MPoly e_in_x(int nvars, int k) {
  const auto syms = xsyms(nvars);
  if (k == 0) return MPoly(syms, 1);
  if (k < 0 || k > nvars) return MPoly(syms);
  // Row DP on prod_i (1 + x_i t): E[j] accumulates e_j of the vars seen so far.
  std::vector<MPoly> E(static_cast<std::size_t>(k) + 1, MPoly(syms));
  E[0] = MPoly(syms, 1);
  for (int i = 1; i <= nvars; ++i) {
    const MPoly xi = MPoly::variable(syms, "x" + std::to_string(i));
    for (int j = std::min(i, k); j >= 1; --j)
      E[static_cast<std::size_t>(j)] += E[static_cast<std::size_t>(j - 1)] * xi;
  }
  return E[static_cast<std::size_t>(k)];
}

MPoly to_xrep(const MPoly& f, int nvars) {
  if (!same_symbols(f.symbols(), esyms(nvars)))
    throw PolyError("to_xrep: input must be E-REP over esyms(nvars)");
  const auto target = xsyms(nvars);
  std::vector<MPoly> images;
  images.reserve(static_cast<std::size_t>(nvars));
  for (int k = 1; k <= nvars; ++k) images.push_back(e_in_x(nvars, k));
  return f.substitute(target, images);
}

MPoly bar_e(const MPoly& f, int nvars) {
  if (nvars < 2) throw PolyError("bar_e: need at least two variables");
  if (!same_symbols(f.symbols(), esyms(nvars)))
    throw PolyError("bar_e: input must be E-REP over esyms(nvars)");
  const auto target = esyms_with_x(nvars - 2);
  const auto eprime = [&](int k) -> MPoly {
    if (k == 0) return MPoly(target, 1);
    if (k < 0 || k > nvars - 2) return MPoly(target);
    return MPoly::variable(target, "e" + std::to_string(k));
  };
  const MPoly x2 = MPoly::variable(target, "x").pow(2);
  std::vector<MPoly> images;
  images.reserve(static_cast<std::size_t>(nvars));
  for (int k = 1; k <= nvars; ++k)
    images.push_back(eprime(k) - x2 * eprime(k - 2));
  return f.substitute(target, images);
}

MPoly bar_x(const MPoly& f, int nvars) {
  if (nvars < 2) throw PolyError("bar_x: need at least two variables");
  if (!same_symbols(f.symbols(), xsyms(nvars)))
    throw PolyError("bar_x: input must be X-REP over xsyms(nvars)");
  const auto target = xsyms_bar(nvars);
  const MPoly x = MPoly::variable(target, "x");
  std::vector<MPoly> images;
  for (int i = 1; i <= nvars - 2; ++i)
    images.push_back(MPoly::variable(target, "x" + std::to_string(i)));
  images.push_back(x);
  images.push_back(-x);
  return f.substitute(target, images);
}

MPoly delta_plus(int nvars) {
  if (nvars < 1) throw PolyError("delta_plus: nvars must be positive");
  const auto syms = esyms(nvars);
  if (nvars == 1) return MPoly(syms, 1);  // empty product
  const std::size_t dim = static_cast<std::size_t>(nvars - 1);
  std::vector<std::vector<MPoly>> m(dim, std::vector<MPoly>(dim, MPoly(syms)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m[i][j] = e_poly(nvars, nvars - 2 * static_cast<int>(i + 1) +
                                  static_cast<int>(j + 1));
  return linalg::bareiss_det_poly(syms, std::move(m));
}

MPoly delta_plus_x(int nvars) {
  const auto syms = xsyms(nvars);
  MPoly prod(syms, 1);
  for (int i = 1; i <= nvars; ++i)
    for (int j = i + 1; j <= nvars; ++j)
      prod *= MPoly::variable(syms, "x" + std::to_string(i)) +
              MPoly::variable(syms, "x" + std::to_string(j));
  return prod;
}

std::vector<Int> elementary_values(const std::vector<Int>& xpoint) {
  const std::size_t n = xpoint.size();
  std::vector<Int> e(n + 1, Int(0));
  e[0] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = std::min(i + 1, n); j >= 1; --j)
      e[j] += e[j - 1] * xpoint[i];
  return std::vector<Int>(e.begin() + 1, e.end());
}

Int delta_plus_at(const std::vector<Int>& xpoint) {
  Int prod = 1;
  for (std::size_t i = 0; i < xpoint.size(); ++i)
    for (std::size_t j = i + 1; j < xpoint.size(); ++j)
      prod *= xpoint[i] + xpoint[j];
  return prod;
}

std::vector<long> xdeg_weights(const SymbolSet& syms) {
  std::vector<long> w(syms.size(), 0);
  for (std::size_t i = 0; i < syms.size(); ++i) {
    const std::string& name = syms.name(i);
    if (name.empty()) throw PolyError("xdeg_weights: empty symbol name");
    if (name[0] == 'e') {
      w[i] = std::stol(name.substr(1));
    } else if (name[0] == 'x') {
      w[i] = 1;  // x or x_k: a single underlying variable
    } else if (name[0] == 'X') {
      w[i] = 0;  // generating-function markers carry no x-degree
    } else {
      throw PolyError("xdeg_weights: unknown symbol '" + name + "'");
    }
  }
  return w;
}

std::vector<Int> special_point(int nvars) {
  std::vector<Int> e(static_cast<std::size_t>(nvars), Int(0));
  if (nvars % 2 == 0) {
    e[0] = 1;
    e[static_cast<std::size_t>(nvars - 1)] = -1;
  } else {
    e[static_cast<std::size_t>(nvars - 1)] = 1;
    if (nvars >= 2) e[static_cast<std::size_t>(nvars - 2)] = -1;
  }
  return e;
}

}  // namespace nrs
