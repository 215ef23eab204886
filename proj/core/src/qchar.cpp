#include "nrs/qchar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <utility>

#include <nlohmann/json.hpp>

namespace nrs {

namespace {

/// Signed integer gap hi - lo; throws when the gap is not an integer.
long offset_gap(const Rat& lo, const Rat& hi) {
  Rat d = hi - lo;
  if (d.get_den() != 1)
    throw PolyError("q-series offsets differ by a non-integer");
  const Int num = d.get_num();
  if (!num.fits_slong_p()) throw PolyError("q-series offset gap too large");
  return num.get_si();
}

Rat quarter(long k) {
  Rat r(Int(k), Int(4));
  r.canonicalize();
  return r;
}

void require_window(long cutoff) {
  if (cutoff < 0) throw PolyError("q-series cutoff must be non-negative");
}

}  // namespace

QSeries QSeries::zero(long cutoff, Rat offset) {
  require_window(cutoff);
  QSeries s;
  s.offset = std::move(offset);
  s.cutoff = cutoff;
  s.coeffs.assign(static_cast<std::size_t>(cutoff) + 1, Int(0));
  return s;
}

QSeries QSeries::one(long cutoff) {
  QSeries s = zero(cutoff);
  s.coeffs[0] = 1;
  return s;
}

QSeries QSeries::monomial(const Rat& exponent, long cutoff, Int c) {
  QSeries s = zero(cutoff, exponent);
  s.coeffs[0] = std::move(c);
  return s;
}

bool QSeries::is_zero() const {
  for (const Int& c : coeffs)
    if (c != 0) return false;
  return true;
}

Int QSeries::coeff_at(const Rat& exponent) const {
  Rat d = exponent - offset;
  if (d.get_den() != 1) return 0;
  const Int num = d.get_num();
  if (num < 0) return 0;
  if (num > cutoff) throw PolyError("q-series coefficient beyond the cutoff");
  return coeffs[static_cast<std::size_t>(num.get_si())];
}

QSeries QSeries::truncated(long new_cutoff) const {
  require_window(new_cutoff);
  if (new_cutoff > cutoff)
    throw PolyError("truncated() cannot widen a q-series window");
  QSeries s = *this;
  s.cutoff = new_cutoff;
  s.coeffs.resize(static_cast<std::size_t>(new_cutoff) + 1);
  return s;
}

QSeries QSeries::padded(long new_cutoff) const {
  if (new_cutoff < cutoff)
    throw PolyError("padded() cannot shrink a q-series window");
  QSeries s = *this;
  s.cutoff = new_cutoff;
  s.coeffs.resize(static_cast<std::size_t>(new_cutoff) + 1, Int(0));
  return s;
}

QSeries QSeries::shifted(const Rat& delta) const {
  QSeries s = *this;
  s.offset += delta;
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (Int& c : s.coeffs) c = -c;
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const Rat lo = std::min(a.offset, b.offset);
  const Rat end = std::min(a.offset + a.cutoff, b.offset + b.cutoff);
  const long new_cutoff = offset_gap(lo, end);
  if (new_cutoff < 0) throw PolyError("q-series windows do not overlap");
  QSeries s = QSeries::zero(new_cutoff, lo);
  const long ga = offset_gap(lo, a.offset);
  const long gb = offset_gap(lo, b.offset);
  for (long k = 0; k + ga <= new_cutoff && k <= a.cutoff; ++k)
    s.coeffs[static_cast<std::size_t>(k + ga)] +=
        a.coeffs[static_cast<std::size_t>(k)];
  for (long k = 0; k + gb <= new_cutoff && k <= b.cutoff; ++k)
    s.coeffs[static_cast<std::size_t>(k + gb)] +=
        b.coeffs[static_cast<std::size_t>(k)];
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries s = QSeries::zero(std::min(a.cutoff, b.cutoff), a.offset + b.offset);
  for (long i = 0; i <= std::min(a.cutoff, s.cutoff); ++i) {
    const Int& ca = a.coeffs[static_cast<std::size_t>(i)];
    if (ca == 0) continue;
    for (long j = 0; i + j <= s.cutoff && j <= b.cutoff; ++j) {
      const Int& cb = b.coeffs[static_cast<std::size_t>(j)];
      if (cb == 0) continue;
      s.coeffs[static_cast<std::size_t>(i + j)] += ca * cb;
    }
  }
  return s;
}

QSeries operator*(const QSeries& a, const Int& scalar) {
  QSeries s = a;
  for (Int& c : s.coeffs) c *= scalar;
  return s;
}

QSeries QSeries::exact_div(const QSeries& divisor) const {
  long k0 = -1;
  for (long k = 0; k <= divisor.cutoff; ++k)
    if (divisor.coeffs[static_cast<std::size_t>(k)] != 0) {
      k0 = k;
      break;
    }
  if (k0 < 0) throw PolyError("q-series division by zero");
  const Int& unit = divisor.coeffs[static_cast<std::size_t>(k0)];
  if (unit != 1 && unit != -1)
    throw PolyError("q-series division needs a +-1 lowest coefficient");
  const long qc = std::min(cutoff, divisor.cutoff - k0);
  if (qc < 0) throw PolyError("q-series division window is empty");

  QSeries q = zero(qc, offset - divisor.offset - k0);
  for (long j = 0; j <= qc; ++j) {
    Int acc = coeffs[static_cast<std::size_t>(j)];
    for (long t = 0; t < j; ++t) {
      const Int& qt = q.coeffs[static_cast<std::size_t>(t)];
      if (qt == 0) continue;
      acc -= qt * divisor.coeffs[static_cast<std::size_t>(k0 + j - t)];
    }
    q.coeffs[static_cast<std::size_t>(j)] = unit == 1 ? acc : -acc;
  }
  return q;
}

bool operator==(const QSeries& a, const QSeries& b) {
  if (a.is_zero() && b.is_zero()) return true;
  Rat d = b.offset - a.offset;
  if (d.get_den() != 1) return false;
  const Rat lo = std::min(a.offset, b.offset);
  const Rat end = std::min(a.offset + a.cutoff, b.offset + b.cutoff);
  const long span = offset_gap(lo, end);
  if (span < 0) return false;  // disjoint windows cannot be certified equal
  const long ga = offset_gap(lo, a.offset);
  const long gb = offset_gap(lo, b.offset);
  for (long k = 0; k <= span; ++k) {
    const Int va =
        k >= ga ? a.coeffs[static_cast<std::size_t>(k - ga)] : Int(0);
    const Int vb =
        k >= gb ? b.coeffs[static_cast<std::size_t>(k - gb)] : Int(0);
    if (va != vb) return false;
  }
  return true;
}

std::string QSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (long k = 0; k <= cutoff; ++k) {
    const Int& c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) out << " + ";
    Rat e = offset + k;
    out << c.get_str() << "*q^(" << e.get_str() << ")";
    first = false;
  }
  if (first) out << "0";
  Rat end = offset + cutoff + 1;
  out << " + O(q^(" << end.get_str() << "))";
  return out.str();
}

nlohmann::json QSeries::to_json() const {
  nlohmann::json j;
  j["offset"] = offset.get_str();
  j["cutoff"] = cutoff;
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& c : coeffs) arr.push_back(c.get_str());
  j["coeffs"] = std::move(arr);
  return j;
}

QSeries QSeries::from_json(const nlohmann::json& j) {
  QSeries s;
  s.offset = Rat(j.at("offset").get<std::string>());
  s.offset.canonicalize();
  s.cutoff = j.at("cutoff").get<long>();
  require_window(s.cutoff);
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() ||
      arr.size() != static_cast<std::size_t>(s.cutoff) + 1)
    throw PolyError("q-series JSON: coeffs must have cutoff + 1 entries");
  s.coeffs.reserve(arr.size());
  for (const auto& c : arr) s.coeffs.emplace_back(c.get<std::string>());
  return s;
}

void ZLaurent::add(long zexp, const QSeries& s) {
  auto it = terms.find(zexp);
  if (it == terms.end())
    terms.emplace(zexp, s);
  else
    it->second = it->second + s;
}

bool operator==(const ZLaurent& a, const ZLaurent& b) {
  for (const auto& [zexp, s] : a.terms) {
    auto it = b.terms.find(zexp);
    if (it == b.terms.end()) {
      if (!s.is_zero()) return false;
    } else if (!(s == it->second)) {
      return false;
    }
  }
  for (const auto& [zexp, s] : b.terms)
    if (a.terms.find(zexp) == a.terms.end() && !s.is_zero()) return false;
  return true;
}

namespace {

using Coeffs = std::vector<Int>;

Coeffs pascal_rec(int m, int r, bool first_form) {
  // t[i] holds [j; i]_p along the growing rows j = 0..m, i <= min(j, r).
  std::vector<Coeffs> t(static_cast<std::size_t>(r) + 1);
  t[0] = {Int(1)};
  for (int j = 1; j <= m; ++j) {
    for (int i = std::min(j, r); i >= 1; --i) {
      if (i > j) continue;
      if (i == j) {
        t[static_cast<std::size_t>(i)] = {Int(1)};
        continue;
      }
      const Coeffs& keep = t[static_cast<std::size_t>(i)];
      const Coeffs& carry = t[static_cast<std::size_t>(i) - 1];
      // rec1: [j;i] = [j-1;i] + p^(j-i) [j-1;i-1]
      // rec2: [j;i] = p^i [j-1;i] + [j-1;i-1]
      const int shift_keep = first_form ? 0 : i;
      const int shift_carry = first_form ? j - i : 0;
      Coeffs out(static_cast<std::size_t>(i) * (j - i) + 1, Int(0));
      for (std::size_t k = 0; k < keep.size(); ++k)
        out[k + static_cast<std::size_t>(shift_keep)] += keep[k];
      for (std::size_t k = 0; k < carry.size(); ++k)
        out[k + static_cast<std::size_t>(shift_carry)] += carry[k];
      t[static_cast<std::size_t>(i)] = std::move(out);
    }
  }
  return t[static_cast<std::size_t>(r)];
}

/// 1 - q^(k * base_power) as an exact polynomial.
QSeries q_bracket(int k, int base_power) {
  if (k < 0) throw PolyError("q-bracket of a negative integer");
  const long deg = static_cast<long>(k) * base_power;
  QSeries s = QSeries::one(deg);
  if (deg > 0) s.coeffs[static_cast<std::size_t>(deg)] -= 1;
  if (k == 0) s.coeffs[0] = 0;  // [0]_p = 1 - p^0 = 0
  return s;
}

/// Exact full polynomial for the right-hand side of the tetranomial
/// expansion of [2n; ell].
QSeries tetra_sum(int n, int ell) {
  std::vector<QSeries> summands;
  long maxdeg = 0;
  for (int l3 = 0; 2 * l3 <= ell; ++l3) {
    for (int l1 = 0; l1 + 2 * l3 <= ell; ++l1) {
      const int l2 = ell - l1 - 2 * l3;
      QSeries t = qtetra(n, l1, l2, l3);
      if (t.is_zero()) continue;
      const long e = static_cast<long>(l1) * l1 +
                     static_cast<long>(l2) * (l2 - 1);
      summands.push_back(t.shifted(Rat(e)));
      maxdeg = std::max(maxdeg, e + t.cutoff);
    }
  }
  QSeries acc = QSeries::zero(maxdeg);
  for (const QSeries& s : summands) {
    const long gap = offset_gap(Rat(0), s.offset);
    acc = acc + s.padded(maxdeg - gap);
  }
  return acc;
}

/// Checks f(n, ell) against the three-term recursion in n, where
/// f(n, ell) = fn(n, ell) is an exact polynomial (zero outside range).
bool satisfies_a_rec(int n, int ell, const QSeries& lhs,
                     const std::function<QSeries(int, int)>& fn) {
  std::vector<QSeries> parts;
  long maxdeg = lhs.cutoff;
  auto push = [&](QSeries s, long shift) {
    if (s.is_zero()) return;
    QSeries moved = s.shifted(Rat(shift));
    maxdeg = std::max(maxdeg, shift + s.cutoff);
    parts.push_back(std::move(moved));
  };
  push(fn(n - 1, ell), 0);
  QSeries prev1 = fn(n - 1, ell - 1);
  push(prev1, 2 * n - ell - 1);
  push(prev1, 2 * n - 1);
  push(fn(n - 1, ell - 2), 2 * n - ell);

  QSeries rhs = QSeries::zero(maxdeg);
  for (const QSeries& s : parts) {
    const long gap = offset_gap(Rat(0), s.offset);
    rhs = rhs + s.padded(maxdeg - gap);
  }
  return lhs.padded(maxdeg) == rhs;
}

}  // namespace

QSeries qbinom(int m, int r, int base_power, long cutoff) {
  if (base_power < 1) throw PolyError("qbinom base power must be >= 1");
  if (m < 0 || r < 0 || r > m) return QSeries::zero(std::max(cutoff, 0L));

  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, QSeries> cache;
  QSeries s;
  {
    const std::scoped_lock lock(mutex);
    auto it = cache.find({m, r, base_power});
    if (it == cache.end()) {
      const Coeffs via1 = pascal_rec(m, r, true);
      const Coeffs via2 = pascal_rec(m, r, false);
      if (via1 != via2)
        throw PolyError("Pascal recursions disagree for a Gaussian binomial");
      const long deg = static_cast<long>(r) * (m - r) * base_power;
      QSeries fresh = QSeries::zero(deg);
      for (std::size_t k = 0; k < via1.size(); ++k)
        fresh.coeffs[k * static_cast<std::size_t>(base_power)] = via1[k];
      it = cache.emplace(std::make_tuple(m, r, base_power), std::move(fresh))
               .first;
    }
    s = it->second;
  }
  if (cutoff < 0) return s;
  return cutoff >= s.cutoff ? s.padded(cutoff) : s.truncated(cutoff);
}

QSeries qtetra(int n, int l1, int l2, int l3, long cutoff) {
  const long out_cutoff = std::max(cutoff, 0L);
  if (l1 <= -1 || l2 <= -1 || l3 <= -1 || n < 0)
    return QSeries::zero(out_cutoff);

  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, QSeries> cache;
  QSeries s;
  {
    const std::scoped_lock lock(mutex);
    auto it = cache.find({n, l1, l2, l3});
    if (it == cache.end()) {
      const QSeries f1 = qbinom(n, l1, 2);
      const QSeries f2 = qbinom(n - l1, l3, 2);
      const QSeries f3 = qbinom(n - l1 - l3, l2, 2);
      QSeries fresh = QSeries::zero(0);
      if (!f1.is_zero() && !f2.is_zero() && !f3.is_zero()) {
        const long deg = f1.cutoff + f2.cutoff + f3.cutoff;
        fresh = f1.padded(deg) * f2.padded(deg) * f3.padded(deg);
      }
      it = cache.emplace(std::make_tuple(n, l1, l2, l3), std::move(fresh))
               .first;
    }
    s = it->second;
  }
  if (s.is_zero()) return QSeries::zero(out_cutoff);
  if (cutoff < 0) return s;
  return cutoff >= s.cutoff ? s.padded(cutoff) : s.truncated(cutoff);
}

bool qtetra_pivot(int n, int l1, int l2, int l3) {
  const QSeries t_lhs = qtetra(n, l1, l2, l3);
  const QSeries t_rhs = qtetra(n, l1 + 1, l2, l3 - 1);
  QSeries lhs = t_lhs.is_zero() || l3 < 0
                    ? QSeries::zero(0)
                    : q_bracket(l3, 2).padded(t_lhs.cutoff + 2 * l3) *
                          t_lhs.padded(t_lhs.cutoff + 2 * l3);
  QSeries rhs = t_rhs.is_zero()
                    ? QSeries::zero(0)
                    : q_bracket(l1 + 1, 2).padded(t_rhs.cutoff + 2 * (l1 + 1)) *
                          t_rhs.padded(t_rhs.cutoff + 2 * (l1 + 1));
  if (lhs.is_zero() || rhs.is_zero()) return lhs.is_zero() && rhs.is_zero();
  const long deg = std::max(lhs.cutoff, rhs.cutoff);
  return lhs.padded(deg) == rhs.padded(deg);
}

bool verify_tetranomial(int n) {
  if (n < 0) return false;
  for (int ell = 0; ell <= 2 * n; ++ell) {
    const QSeries lhs = qbinom(2 * n, ell);
    const QSeries rhs = tetra_sum(n, ell);
    const long deg = std::max(lhs.cutoff, rhs.cutoff);
    if (!(lhs.padded(deg) == rhs.padded(deg))) return false;
    if (n >= 1) {
      const auto qb = [](int m, int l) { return qbinom(2 * m, l); };
      const auto ts = [](int m, int l) {
        return l < 0 ? QSeries::zero(0) : tetra_sum(m, l);
      };
      if (!satisfies_a_rec(n, ell, lhs, qb)) return false;
      if (!satisfies_a_rec(n, ell, rhs, ts)) return false;
    }
  }
  return true;
}

QSeries poly_pochhammer(int n, long cutoff) {
  if (n < 0) throw PolyError("pochhammer length must be >= 0");
  require_window(cutoff);
  QSeries acc = QSeries::one(cutoff);
  for (int j = 1; j <= n && j <= cutoff; ++j) {
    QSeries factor = QSeries::one(cutoff);
    factor.coeffs[static_cast<std::size_t>(j)] -= 1;
    acc = acc * factor;
  }
  return acc;
}

QSeries euler_product(long cutoff) {
  require_window(cutoff);
  QSeries acc = QSeries::one(cutoff);
  for (long j = 1; j <= cutoff; ++j) {
    QSeries factor = QSeries::one(cutoff);
    factor.coeffs[static_cast<std::size_t>(j)] += 1;
    acc = acc * factor;
  }
  return acc;
}

QSeries ch_U(int nvars, int ell, long cutoff) {
  if (nvars < 0) throw PolyError("ch_U needs nvars >= 0");
  require_window(cutoff);
  const QSeries num = qbinom(nvars, ell, 1, cutoff);
  const QSeries s = num.exact_div(poly_pochhammer(nvars, cutoff));
  return s.shifted(quarter(static_cast<long>(nvars) * nvars));
}

QSeries ch_M(int nvars, int ell, long cutoff) {
  if (nvars < 0) throw PolyError("ch_M needs nvars >= 0");
  require_window(cutoff);
  const QSeries num =
      qbinom(nvars, ell, 1, cutoff) - qbinom(nvars, ell - 1, 1, cutoff);
  const QSeries s = num.exact_div(poly_pochhammer(nvars, cutoff));
  return s.shifted(quarter(static_cast<long>(nvars) * nvars));
}

QSeries branching(int i, int lambda, long cutoff) {
  if (i != 0 && i != 1) throw PolyError("branching parity must be 0 or 1");
  if (lambda < 0 || lambda % 2 != i)
    throw PolyError("branching needs lambda >= 0 with lambda == i (mod 2)");
  require_window(cutoff);
  const Rat base = quarter(static_cast<long>(lambda) * lambda);
  QSeries acc = QSeries::zero(cutoff, base);
  for (long n = lambda;; n += 2) {
    const Rat off = quarter(n * n);
    const long gap = offset_gap(base, off);
    if (gap > cutoff) break;
    acc = acc + ch_M(static_cast<int>(n), static_cast<int>((n - lambda) / 2),
                     cutoff - gap);
  }
  return acc;
}

QSeries virasoro_product(int lambda, long cutoff) {
  if (lambda < 0) throw PolyError("virasoro weight must be >= 0");
  require_window(cutoff);
  QSeries num = QSeries::one(cutoff);
  if (lambda + 1 <= cutoff)
    num.coeffs[static_cast<std::size_t>(lambda) + 1] -= 1;
  const QSeries s = num.exact_div(
      poly_pochhammer(static_cast<int>(cutoff), cutoff));
  return s.shifted(quarter(static_cast<long>(lambda) * lambda));
}

ZLaurent fermionic_branching_side(int i, long cutoff, int z_range) {
  if (i != 0 && i != 1) throw PolyError("parity must be 0 or 1");
  require_window(cutoff);
  const Rat base = quarter(i);
  ZLaurent out;
  for (long lambda = i;; lambda += 2) {
    const Rat off = quarter(lambda * lambda);
    const long gap = offset_gap(base, off);
    if (gap > cutoff) break;
    const QSeries bf =
        branching(i, static_cast<int>(lambda), cutoff - gap);
    for (long m = -lambda; m <= lambda; m += 2)
      if (m >= -z_range && m <= z_range) out.add(m, bf);
  }
  return out;
}

ZLaurent fermionic_sum_side(int i, long cutoff, int z_range) {
  if (i != 0 && i != 1) throw PolyError("parity must be 0 or 1");
  require_window(cutoff);
  const Rat base = quarter(i);
  ZLaurent out;
  for (long n = i;; n += 2) {
    const Rat off = quarter(n * n);
    const long gap = offset_gap(base, off);
    if (gap > cutoff) break;
    const long window = cutoff - gap;
    for (long ell = 0; ell <= n; ++ell) {
      const long m = n - 2 * ell;
      if (m < -z_range || m > z_range) continue;
      const QSeries den =
          poly_pochhammer(static_cast<int>(ell), window) *
          poly_pochhammer(static_cast<int>(n - ell), window);
      out.add(m, QSeries::one(window).exact_div(den).shifted(off));
    }
  }
  return out;
}

bool fermionic_identity(int i, long cutoff, int z_range) {
  return fermionic_branching_side(i, cutoff, z_range) ==
         fermionic_sum_side(i, cutoff, z_range);
}

QSeries ising_char(int i, long cutoff) {
  if (i != 0 && i != 1) throw PolyError("parity must be 0 or 1");
  require_window(cutoff);
  QSeries acc = QSeries::zero(cutoff);
  for (long n = i;; n += 2) {
    const long lead = n * (n - 1) / 2;
    if (lead > cutoff) break;
    const long window = cutoff - lead;
    const QSeries term = QSeries::one(window)
                             .exact_div(poly_pochhammer(static_cast<int>(n),
                                                        window))
                             .shifted(Rat(static_cast<long>(lead)));
    acc = acc + term;
  }
  return acc;
}

bool ising_identity(int i, long cutoff) {
  return ising_char(i, cutoff) == euler_product(cutoff);
}

}  // namespace nrs
