#include "nrs/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nrs {

SymbolSet::SymbolSet(std::vector<std::string> names) : names_(std::move(names)) {}

std::shared_ptr<const SymbolSet> SymbolSet::make(std::vector<std::string> names) {
  std::set<std::string> distinct(names.begin(), names.end());
  if (distinct.size() != names.size())
    throw PolyError("SymbolSet: duplicate symbol name");
  return std::shared_ptr<const SymbolSet>(new SymbolSet(std::move(names)));
}

std::optional<std::size_t> SymbolSet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_symbols(const SymbolsPtr& a, const SymbolsPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto deg = [](const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  };
  const std::uint64_t da = deg(a), db = deg(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly::MPoly() : syms_(SymbolSet::make({})) {}

MPoly::MPoly(SymbolsPtr syms) : syms_(std::move(syms)) {
  if (!syms_) throw PolyError("MPoly: null symbol set");
}

MPoly::MPoly(SymbolsPtr syms, Int value) : MPoly(std::move(syms)) {
  if (value != 0) terms_.emplace(Exponents(syms_->size(), 0), std::move(value));
}

MPoly MPoly::variable(const SymbolsPtr& syms, std::string_view name) {
  const auto idx = syms->index(name);
  if (!idx) throw PolyError("MPoly::variable: unknown symbol '" +
                            std::string(name) + "'");
  Exponents e(syms->size(), 0);
  e[*idx] = 1;
  return monomial(syms, std::move(e), 1);
}

MPoly MPoly::monomial(const SymbolsPtr& syms, Exponents exps, Int coeff) {
  if (exps.size() != syms->size())
    throw PolyError("MPoly::monomial: exponent arity mismatch");
  MPoly p(syms);
  if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Int MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw PolyError("constant_value: polynomial not constant");
  return terms_.begin()->second;
}

Int MPoly::coeff(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

void MPoly::insert_term(const Exponents& exps, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exps, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(syms_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (!same_symbols(syms_, other.syms_))
    throw PolyError("MPoly +=: symbol sets differ");
  for (const auto& [e, c] : other.terms_) insert_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (!same_symbols(syms_, other.syms_))
    throw PolyError("MPoly -=: symbol sets differ");
  for (const auto& [e, c] : other.terms_) insert_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (!same_symbols(a.syms_, b.syms_))
    throw PolyError("MPoly *: symbol sets differ");
  MPoly r(a.syms_);
  Exponents e(a.syms_->size());
  Int c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      r.insert_term(e, c);
    }
  }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly& MPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return same_symbols(a.syms_, b.syms_) && a.terms_ == b.terms_;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(syms_, 1);
  MPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    base = (n >>= 1) ? base * base : std::move(base);
  }
  return result;
}

MPoly MPoly::exact_div(const MPoly& divisor) const {
  if (!same_symbols(syms_, divisor.syms_))
    throw PolyError("exact_div: symbol sets differ");
  if (divisor.is_zero()) throw PolyError("exact_div: division by zero");
  MPoly q(syms_);
  MPoly r = *this;
  const auto& [de, dc] = *divisor.terms_.rbegin();  // leading term
  Exponents qe(syms_->size());
  while (!r.terms_.empty()) {
    const auto& [re, rc] = *r.terms_.rbegin();
    for (std::size_t i = 0; i < qe.size(); ++i) {
      if (re[i] < de[i]) throw PolyError("exact_div: division not exact");
      qe[i] = re[i] - de[i];
    }
    Int qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
    if (rem != 0) throw PolyError("exact_div: division not exact");
    const MPoly t = monomial(syms_, qe, qc);
    q += t;
    r -= t * divisor;
  }
  return q;
}

MPoly MPoly::exact_div(const Int& scalar) const {
  if (scalar == 0) throw PolyError("exact_div: division by zero");
  MPoly r(syms_);
  for (const auto& [e, c] : terms_) {
    Int qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(),
                scalar.get_mpz_t());
    if (rem != 0) throw PolyError("exact_div: scalar does not divide");
    r.terms_.emplace(e, std::move(qc));
  }
  return r;
}

long MPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;  // graded order: last term is max
  return static_cast<long>(
      std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

long MPoly::degree_in(std::size_t sym_index) const {
  long d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<long>(e.at(sym_index)));
  return d;
}

long MPoly::weighted_degree(const std::vector<long>& weights) const {
  if (weights.size() != syms_->size())
    throw PolyError("weighted_degree: weight arity mismatch");
  long best = -1;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      d += weights[i] * static_cast<long>(e[i]);
    if (first || d > best) best = d, first = false;
  }
  return best;
}

bool MPoly::is_homogeneous(const std::vector<long>& weights,
                           long* deg_out) const {
  if (weights.size() != syms_->size())
    throw PolyError("is_homogeneous: weight arity mismatch");
  bool first = true;
  long common = 0;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      d += weights[i] * static_cast<long>(e[i]);
    if (first) common = d, first = false;
    else if (d != common) return false;
  }
  if (deg_out) *deg_out = common;
  return true;
}

template <typename T>
T MPoly::eval(const std::vector<T>& point) const {
  if (point.size() != syms_->size())
    throw PolyError("eval: point arity mismatch");
  // Memoize powers per symbol; exponents stay small in practice.
  std::vector<std::vector<T>> powers(point.size());
  const auto power = [&](std::size_t i, std::uint32_t k) -> const T& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= k) cache.emplace_back(cache.back() * point[i]);
    return cache[k];
  };
  T total(0);
  for (const auto& [e, c] : terms_) {
    T term(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power(i, e[i]);
    total += term;
  }
  return total;
}

template Int MPoly::eval<Int>(const std::vector<Int>&) const;
template Rat MPoly::eval<Rat>(const std::vector<Rat>&) const;

MPoly MPoly::substitute(const SymbolsPtr& target,
                        const std::vector<MPoly>& images) const {
  if (images.size() != syms_->size())
    throw PolyError("substitute: image arity mismatch");
  for (const auto& img : images)
    if (!same_symbols(img.symbols(), target))
      throw PolyError("substitute: image over wrong symbol set");
  std::vector<std::vector<MPoly>> powers(images.size());
  const auto power = [&](std::size_t i, std::uint32_t k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(MPoly(target, 1));
    while (cache.size() <= k) cache.emplace_back(cache.back() * images[i]);
    return cache[k];
  };
  MPoly total(target);
  for (const auto& [e, c] : terms_) {
    MPoly term(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power(i, e[i]);
    total += term;
  }
  return total;
}

MPoly MPoly::with_symbols(const SymbolsPtr& target) const {
  // Map each source symbol to its position in target (or require unused).
  std::vector<std::optional<std::size_t>> where(syms_->size());
  for (std::size_t i = 0; i < syms_->size(); ++i)
    where[i] = target->index(syms_->name(i));
  MPoly r(target);
  Exponents e2(target->size());
  for (const auto& [e, c] : terms_) {
    std::fill(e2.begin(), e2.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!where[i])
        throw PolyError("with_symbols: symbol '" + syms_->name(i) +
                        "' in use but absent from target set");
      e2[*where[i]] = e[i];
    }
    r.insert_term(e2, c);
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (first) {
      if (a < 0) out << "-", a = -a;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = syms_->name(i);
      if (e[i] > 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out << a.get_str();
      continue;
    }
    if (a != 1) out << a.get_str() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i)
      out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

nlohmann::json MPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    terms.push_back({it->second.get_str(), it->first});
  return {{"symbols", syms_->names()}, {"terms", std::move(terms)}};
}

MPoly MPoly::from_json(const nlohmann::json& j) {
  try {
    auto syms = SymbolSet::make(j.at("symbols").get<std::vector<std::string>>());
    MPoly p(syms);
    for (const auto& t : j.at("terms")) {
      Int c(t.at(0).get<std::string>());
      Exponents e = t.at(1).get<Exponents>();
      if (e.size() != syms->size())
        throw PolyError("MPoly::from_json: exponent arity mismatch");
      p.insert_term(e, c);
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw PolyError(std::string("MPoly::from_json: ") + ex.what());
  }
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace nrs
