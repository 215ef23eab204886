#include "nrs/nullres.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "nrs/graded.hpp"
#include "nrs/linalg.hpp"
#include "nrs/polyring.hpp"

namespace nrs {

namespace {

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw PolyError("count does not fit a long");
  return v.get_si();
}

Int int_pow(const Int& base, long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

/// det X = c (Delta+)^E uses E = binom(N-1, ell-1) + binom(N-2, ell-1) in
/// both parities.
long det_exponent(int nvars, int ell) {
  return to_long(binomial(nvars - 1, ell - 1) + binomial(nvars - 2, ell - 1));
}

/// The n x n matrix (P_{i,j})_{i,j=1..n}, whose determinant is Delta+ with
/// constant exactly 1.
std::vector<std::vector<MPoly>> v_block(int nvars) {
  const int n = half_n(nvars);
  std::vector<std::vector<MPoly>> m(n);
  for (int i = 1; i <= n; ++i) {
    m[i - 1].reserve(n);
    for (int j = 1; j <= n; ++j) m[i - 1].push_back(p_rs(nvars, i, j));
  }
  return m;
}

std::vector<Int> sample_point(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Int> pt;
    pt.reserve(nvars);
    for (int i = 0; i < nvars; ++i) pt.emplace_back(dist(rng));
    if (delta_plus_at(pt) != 0) return pt;
  }
  throw PolyError("could not sample a point with Delta+ != 0");
}

std::vector<std::vector<Int>> eval_matrix(
    const std::vector<std::vector<MPoly>>& entries,
    const std::vector<Int>& evalues) {
  std::vector<std::vector<Int>> m(entries.size());
  for (std::size_t r = 0; r < entries.size(); ++r) {
    m[r].reserve(entries[r].size());
    for (const MPoly& f : entries[r]) m[r].push_back(f.eval<Int>(evalues));
  }
  return m;
}

}  // namespace

bool ResidueComponents::all_zero() const {
  for (const auto& [prefix, f] : even_part) {
    (void)prefix;
    if (!f.is_zero()) return false;
  }
  for (const auto& [prefix, f] : odd_part) {
    (void)prefix;
    if (!f.is_zero()) return false;
  }
  return true;
}

ResidueComponents residue_components(const WedgeElement& p) {
  if (p.widened())
    throw WedgeError("residue components are defined for in-range elements");
  const int nvars = p.nvars();
  const int ell = p.ell();
  if (nvars < 2) throw WedgeError("residue components need nvars >= 2");

  ResidueComponents rc;
  rc.nvars = nvars;
  rc.ell = ell;
  if (ell == 0) return rc;

  const SymbolsPtr target = esyms_with_x(nvars - 2);
  const MPoly x = MPoly::variable(target, "x");
  for (const std::vector<int>& prefix : index_tuples(nvars, ell - 1)) {
    MPoly even_comp(target);
    MPoly odd_comp(target);
    for (int i = 0; i < nvars; ++i) {
      WedgeElement::Tuple tuple = prefix;
      tuple.push_back(i);
      const MPoly c = p.coeff_signed(std::move(tuple));
      if (c.is_zero()) continue;
      // Clearing by x^(2*nvars - 1) turns the x^(-i) ladder into honest
      // polynomial exponents 2*nvars - 1 - i >= nvars.
      const MPoly term =
          bar_e(c, nvars) * x.pow(static_cast<unsigned>(2 * nvars - 1 - i));
      if (i % 2 == 0)
        even_comp += term;
      else
        odd_comp += term;
    }
    rc.even_part.emplace(prefix, std::move(even_comp));
    rc.odd_part.emplace(prefix, std::move(odd_comp));
  }
  return rc;
}

bool in_U(const WedgeElement& p) { return residue_components(p).all_zero(); }

BasisMatrix basis_matrix(int nvars, int ell) {
  BasisMatrix bm;
  bm.nvars = nvars;
  bm.ell = ell;
  bm.cols = index_tuples(nvars, ell);
  for (auto& [idx, elem] : enumerate_basis(nvars, ell)) {
    bm.rows.push_back(idx);
    std::vector<MPoly> row;
    row.reserve(bm.cols.size());
    for (const std::vector<int>& t : bm.cols) row.push_back(elem.coeff(t));
    bm.entries.push_back(std::move(row));
  }
  return bm;
}

DetReport det_identity_check(int nvars, int ell, DetMode mode, int trials,
                             std::uint64_t seed) {
  if (ell < 1 || ell > nvars)
    throw PolyError("det identity needs 1 <= ell <= nvars");

  DetReport rep;
  rep.nvars = nvars;
  rep.ell = ell;
  rep.mode = mode;
  rep.seed = seed;
  rep.exponent = det_exponent(nvars, ell);

  const BasisMatrix bm = basis_matrix(nvars, ell);
  if (Int(static_cast<long>(bm.rows.size())) != binomial(nvars, ell) ||
      bm.rows.size() != bm.cols.size())
    throw PolyError("candidate family is not square against the tuple count");
  const long expected_deg = to_long(binomial(nvars, 2)) * rep.exponent;
  const bool even_rank_one = (nvars % 2 == 0) && ell == 1;

  if (mode == DetMode::Symbolic) {
    rep.trials = 0;
    const SymbolsPtr syms = esyms(nvars);
    const MPoly det = linalg::bareiss_det_poly(syms, bm.entries);
    if (det.is_zero()) return rep;
    if (det.weighted_degree(xdeg_weights(*syms)) != expected_deg) return rep;
    const MPoly denom = delta_plus(nvars).pow(static_cast<unsigned>(rep.exponent));
    MPoly quotient(syms);
    try {
      quotient = det.exact_div(denom);
    } catch (const PolyError&) {
      return rep;
    }
    if (!quotient.is_constant()) return rep;
    rep.c = Rat(quotient.constant_value());
    bool ok = rep.c != 0;
    if (even_rank_one)
      ok = ok && linalg::bareiss_det_poly(syms, v_block(nvars)) == delta_plus(nvars);
    rep.matches = ok;
    return rep;
  }

  rep.trials = std::max(trials, 8);
  std::mt19937_64 rng(seed);
  bool ok = true;
  for (int t = 0; t < rep.trials && ok; ++t) {
    const std::vector<Int> pt = sample_point(rng, nvars);
    const std::vector<Int> ev = elementary_values(pt);
    const Int dv = delta_plus_at(pt);
    const Int detv = linalg::bareiss_det_int(eval_matrix(bm.entries, ev));
    Rat value(detv, int_pow(dv, rep.exponent));
    value.canonicalize();
    if (t == 0) {
      rep.c = value;
      ok = rep.c != 0;
      // Degree cross-check: the determinant must scale as the predicted
      // homogeneous degree under x -> 2x.
      std::vector<Int> pt2;
      pt2.reserve(pt.size());
      for (const Int& v : pt) pt2.push_back(2 * v);
      const Int detv2 =
          linalg::bareiss_det_int(eval_matrix(bm.entries, elementary_values(pt2)));
      ok = ok && detv2 == detv * int_pow(2, expected_deg);
    } else {
      ok = ok && value == rep.c;
    }
    if (even_rank_one && ok) {
      std::vector<std::vector<Int>> vb = eval_matrix(v_block(nvars), ev);
      ok = linalg::bareiss_det_int(std::move(vb)) == dv;
    }
  }
  rep.matches = ok;
  return rep;
}

nlohmann::json DetReport::to_json() const {
  nlohmann::json j;
  j["n"] = nvars;
  j["ell"] = ell;
  j["mode"] = mode == DetMode::Symbolic ? "symbolic" : "randomized";
  j["matches"] = matches;
  j["c"] = c.get_str();
  j["exponent"] = exponent;
  j["trials"] = trials;
  j["seed"] = seed;
  return j;
}

std::optional<std::vector<MPoly>> coordinates(const WedgeElement& p) {
  if (p.widened()) throw WedgeError("coordinates need an in-range element");
  const int nvars = p.nvars();
  const int ell = p.ell();
  const SymbolsPtr syms = esyms(nvars);
  if (!same_symbols(p.coeff_symbols(), syms))
    throw WedgeError("coordinates expect coefficients over e_1..e_N");

  const auto basis = enumerate_basis(nvars, ell);
  const std::size_t nrows = basis.size();
  const std::vector<std::vector<int>> cols = index_tuples(nvars, ell);
  std::vector<MPoly> coords(nrows, MPoly(syms));

  if (nrows <= 8) {
    // Cramer route: S_r = det(X with row r replaced by p's coefficients)
    // divided by det X, both exact.
    std::vector<std::vector<MPoly>> entries;
    entries.reserve(nrows);
    for (const auto& [idx, elem] : basis) {
      (void)idx;
      std::vector<MPoly> row;
      row.reserve(cols.size());
      for (const std::vector<int>& t : cols) row.push_back(elem.coeff(t));
      entries.push_back(std::move(row));
    }
    std::vector<MPoly> target_row;
    target_row.reserve(cols.size());
    for (const std::vector<int>& t : cols) target_row.push_back(p.coeff(t));

    const MPoly det = linalg::bareiss_det_poly(syms, entries);
    if (det.is_zero()) throw PolyError("candidate family is degenerate");
    for (std::size_t r = 0; r < nrows; ++r) {
      std::vector<std::vector<MPoly>> replaced = entries;
      replaced[r] = target_row;
      const MPoly detr = linalg::bareiss_det_poly(syms, replaced);
      if (detr.is_zero()) continue;
      try {
        coords[r] = detr.exact_div(det);
      } catch (const PolyError&) {
        return std::nullopt;
      }
    }
  } else {
    // Graded route: solve one exact linear system per deg1-homogeneous
    // component of p, with unknowns the monomial multiples of each basis
    // element landing in that slice.
    std::vector<long> basis_deg(nrows, 0);
    for (std::size_t r = 0; r < nrows; ++r) basis_deg[r] = basis[r].second.deg1();

    for (const auto& [d, comp] : p.deg1_components()) {
      const Slice slice = make_slice(nvars, ell, d);
      std::vector<std::pair<std::size_t, Exponents>> unknowns;
      std::vector<linalg::SparseRow> columns;
      for (std::size_t r = 0; r < nrows; ++r) {
        for (Exponents& mon : weighted_monomials(nvars, d - basis_deg[r])) {
          const WedgeElement w =
              basis[r].second * MPoly::monomial(syms, mon, 1);
          columns.push_back(slice_vector(slice, w));
          unknowns.emplace_back(r, std::move(mon));
        }
      }
      const linalg::SparseRow rhs = slice_vector(slice, comp);

      std::vector<std::vector<Rat>> a(
          static_cast<std::size_t>(slice.dim()),
          std::vector<Rat>(unknowns.size(), Rat(0)));
      for (std::size_t cidx = 0; cidx < columns.size(); ++cidx)
        for (const auto& [row, value] : columns[cidx])
          a[static_cast<std::size_t>(row)][cidx] = Rat(value);
      std::vector<Rat> b(static_cast<std::size_t>(slice.dim()), Rat(0));
      for (const auto& [row, value] : rhs)
        b[static_cast<std::size_t>(row)] = Rat(value);

      const auto sol = linalg::solve_dense(std::move(a), std::move(b));
      if (!sol) return std::nullopt;
      for (std::size_t cidx = 0; cidx < unknowns.size(); ++cidx) {
        const Rat& value = (*sol)[cidx];
        if (value == 0) continue;
        if (value.get_den() != 1)
          throw PolyError("coordinates are not integral");
        coords[unknowns[cidx].first] +=
            MPoly::monomial(syms, unknowns[cidx].second, value.get_num());
      }
    }
  }

  // Resubstitution is the final word in either route.
  WedgeElement rebuilt(nvars, ell, syms);
  for (std::size_t r = 0; r < nrows; ++r)
    rebuilt += basis[r].second * coords[r];
  if (rebuilt != p) return std::nullopt;
  return coords;
}

bool degree_sum_check(int nvars, int ell) {
  Int direct = 0;
  for (const BasisIndex& idx : enumerate_basis_indices(nvars, ell))
    direct += Int(idx.deg1(nvars));
  for (const std::vector<int>& t : index_tuples(nvars, ell))
    for (int i : t) direct += Int(i);
  const Int closed = binomial(nvars, 2) * Int(det_exponent(nvars, ell));
  return direct == closed;
}

bool column_operation_check(int nvars, int ell) {
  if (ell < 1) return true;
  const SymbolsPtr xs = xsyms(nvars);
  const MPoly xlast = MPoly::variable(xs, "x" + std::to_string(nvars - 1));
  std::vector<MPoly> images;
  images.reserve(xs->size());
  for (std::size_t i = 0; i < xs->size(); ++i)
    images.push_back(MPoly::variable(xs, xs->name(i)));
  images.back() = -xlast;

  const auto prefixes = index_tuples(nvars, ell - 1);
  for (const auto& [idx, elem] : enumerate_basis(nvars, ell)) {
    (void)idx;
    for (const std::vector<int>& prefix : prefixes) {
      for (int parity = 0; parity < 2; ++parity) {
        MPoly combined(xs);
        for (int i = parity; i < nvars; i += 2) {
          WedgeElement::Tuple tuple = prefix;
          tuple.push_back(i);
          const MPoly c = elem.coeff_signed(std::move(tuple));
          if (c.is_zero()) continue;
          combined += to_xrep(c, nvars) *
                      xlast.pow(static_cast<unsigned>(2 * nvars - 1 - i));
        }
        if (!combined.substitute(xs, images).is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace nrs
