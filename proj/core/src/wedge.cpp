#include "nrs/wedge.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nrs/polyring.hpp"

namespace nrs {

WedgeElement::WedgeElement(int nvars, int ell, SymbolsPtr coeff_syms,
                           bool widened)
    : nvars_(nvars), ell_(ell), widened_(widened),
      coeff_syms_(std::move(coeff_syms)) {
  if (nvars_ < 1) throw WedgeError("WedgeElement: nvars must be positive");
  if (ell_ < 0) throw WedgeError("WedgeElement: negative wedge degree");
  if (!coeff_syms_) throw WedgeError("WedgeElement: null coefficient symbols");
}

void WedgeElement::check_tuple(const Tuple& tuple) const {
  if (static_cast<int>(tuple.size()) != ell_)
    throw WedgeError("WedgeElement: tuple arity != ell");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0) throw WedgeError("WedgeElement: negative index");
    if (!widened_ && tuple[i] >= nvars_)
      throw WedgeError("WedgeElement: index out of module range");
    if (i + 1 < tuple.size() && tuple[i] >= tuple[i + 1])
      throw WedgeError("WedgeElement: tuple not strictly increasing");
  }
}

void WedgeElement::set_coeff(Tuple tuple, MPoly coeff) {
  check_tuple(tuple);
  if (!same_symbols(coeff.symbols(), coeff_syms_))
    throw WedgeError("WedgeElement: coefficient over wrong symbol set");
  if (coeff.is_zero())
    terms_.erase(tuple);
  else
    terms_.insert_or_assign(std::move(tuple), std::move(coeff));
}

MPoly WedgeElement::coeff(const Tuple& tuple) const {
  const auto it = terms_.find(tuple);
  return it == terms_.end() ? MPoly(coeff_syms_) : it->second;
}

MPoly WedgeElement::coeff_signed(Tuple tuple) const {
  // Insertion-sort sign; quadratic is fine at these arities.
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return MPoly(coeff_syms_);
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  MPoly c = coeff(tuple);
  return sign == 1 ? c : -c;
}

void WedgeElement::add_term(Tuple tuple, MPoly coeff) {
  if (coeff.is_zero()) return;
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return;  // repeated factor
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  check_tuple(tuple);
  if (!same_symbols(coeff.symbols(), coeff_syms_))
    throw WedgeError("WedgeElement: coefficient over wrong symbol set");
  if (sign == -1) coeff = -coeff;
  auto [it, fresh] = terms_.emplace(std::move(tuple), coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WedgeElement WedgeElement::operator-() const {
  WedgeElement r = *this;
  for (auto& [t, c] : r.terms_) c = -c;
  return r;
}

WedgeElement& WedgeElement::operator+=(const WedgeElement& other) {
  if (nvars_ != other.nvars_ || ell_ != other.ell_ ||
      !same_symbols(coeff_syms_, other.coeff_syms_))
    throw WedgeError("WedgeElement +=: incompatible elements");
  widened_ = widened_ || other.widened_;
  for (const auto& [t, c] : other.terms_) {
    auto [it, fresh] = terms_.emplace(t, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

WedgeElement& WedgeElement::operator-=(const WedgeElement& other) {
  return *this += -other;
}

WedgeElement& WedgeElement::operator*=(const MPoly& scalar) {
  if (!same_symbols(scalar.symbols(), coeff_syms_))
    throw WedgeError("WedgeElement *=: scalar over wrong symbol set");
  TermMap out;
  for (auto& [t, c] : terms_) {
    MPoly p = c * scalar;
    if (!p.is_zero()) out.emplace(t, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

WedgeElement& WedgeElement::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const WedgeElement& a, const WedgeElement& b) {
  return a.nvars_ == b.nvars_ && a.ell_ == b.ell_ &&
         same_symbols(a.coeff_syms_, b.coeff_syms_) && a.terms_ == b.terms_;
}

WedgeElement WedgeElement::wedge(const WedgeElement& other) const {
  if (nvars_ != other.nvars_ || !same_symbols(coeff_syms_, other.coeff_syms_))
    throw WedgeError("wedge: incompatible elements");
  WedgeElement r(nvars_, ell_ + other.ell_, coeff_syms_,
                 widened_ || other.widened_);
  Tuple t;
  for (const auto& [ta, ca] : terms_) {
    for (const auto& [tb, cb] : other.terms_) {
      t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      r.add_term(std::move(t), ca * cb);
      t.clear();
    }
  }
  return r;
}

bool WedgeElement::is_deg1_homogeneous(long* deg_out) const {
  const auto weights = xdeg_weights(*coeff_syms_);
  bool first = true;
  long common = 0;
  for (const auto& [t, c] : terms_) {
    long cdeg = 0;
    if (!c.is_homogeneous(weights, &cdeg)) return false;
    const long d = cdeg - std::accumulate(t.begin(), t.end(), 0L);
    if (first) common = d, first = false;
    else if (d != common) return false;
  }
  if (deg_out && !first) *deg_out = common;
  return true;
}

long WedgeElement::deg1() const {
  if (is_zero()) throw WedgeError("deg1: zero element has no degree");
  long d = 0;
  if (!is_deg1_homogeneous(&d))
    throw WedgeError("deg1: element is not deg1-homogeneous");
  return d;
}

Rat WedgeElement::deg2() const {
  Rat r(static_cast<long>(nvars_) * nvars_, 4);
  r.canonicalize();
  return r + deg1();
}

std::map<long, WedgeElement> WedgeElement::deg1_components() const {
  const auto weights = xdeg_weights(*coeff_syms_);
  std::map<long, WedgeElement> out;
  for (const auto& [t, c] : terms_) {
    const long tsum = std::accumulate(t.begin(), t.end(), 0L);
    // Coefficients may mix x-degrees; split them monomial-by-monomial.
    std::map<long, MPoly> pieces;
    for (const auto& [e, coeffval] : c.terms()) {
      long cdeg = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        cdeg += weights[i] * static_cast<long>(e[i]);
      auto [it, fresh] = pieces.try_emplace(cdeg, MPoly(coeff_syms_));
      it->second += MPoly::monomial(coeff_syms_, e, coeffval);
    }
    for (auto& [cdeg, piece] : pieces) {
      const long d = cdeg - tsum;
      auto [it, fresh] = out.try_emplace(
          d, WedgeElement(nvars_, ell_, coeff_syms_, widened_));
      it->second.add_term(t, std::move(piece));
    }
  }
  return out;
}

std::map<WedgeElement::Tuple, Int> WedgeElement::eval_terms(
    const std::vector<Int>& point) const {
  std::map<Tuple, Int> out;
  for (const auto& [t, c] : terms_) {
    Int v = c.eval(point);
    if (v != 0) out.emplace(t, std::move(v));
  }
  return out;
}

std::string WedgeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*X[";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << "]";
  }
  return os.str();
}

nlohmann::json WedgeElement::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, c] : terms_) terms.push_back({t, c.to_json()});
  nlohmann::json j{{"n", nvars_}, {"ell", ell_}, {"terms", std::move(terms)}};
  if (widened_) j["widened"] = true;
  return j;
}

WedgeElement WedgeElement::from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int ell = j.at("ell").get<int>();
    const bool widened = j.value("widened", false);
    SymbolsPtr syms;
    std::vector<std::pair<Tuple, MPoly>> parsed;
    for (const auto& item : j.at("terms")) {
      Tuple t = item.at(0).get<Tuple>();
      MPoly c = MPoly::from_json(item.at(1));
      if (!syms) syms = c.symbols();
      else if (!same_symbols(syms, c.symbols()))
        throw PolyError("WedgeElement::from_json: mixed coefficient rings");
      parsed.emplace_back(std::move(t), std::move(c));
    }
    if (!syms) syms = esyms(n);
    WedgeElement w(n, ell, syms, widened);
    for (auto& [t, c] : parsed) w.add_term(std::move(t), std::move(c));
    return w;
  } catch (const nlohmann::json::exception& ex) {
    throw PolyError(std::string("WedgeElement::from_json: ") + ex.what());
  }
}

}  // namespace nrs
