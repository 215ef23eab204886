#include "nrs/graded.hpp"

#include <algorithm>
#include <numeric>

#include "nrs/polyring.hpp"

namespace nrs {

std::vector<std::vector<int>> index_tuples(int limit, int len) {
  std::vector<std::vector<int>> out;
  if (len == 0) {
    out.push_back({});
    return out;
  }
  if (limit < len) return out;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x < limit; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Exponents> weighted_monomials(int nvars, long d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents cur(static_cast<std::size_t>(nvars), 0);
  // Distribute remaining degree over e_k for k = nvars down to 1; e_1 soaks
  // up whatever remains, so recursion depth is nvars.
  const auto rec = [&](auto&& self, int k, long rest) -> void {
    if (k == 1) {
      cur[0] = static_cast<std::uint32_t>(rest);
      out.push_back(cur);
      cur[0] = 0;
      return;
    }
    for (long c = 0; c * k <= rest; ++c) {
      cur[static_cast<std::size_t>(k - 1)] = static_cast<std::uint32_t>(c);
      self(self, k - 1, rest - c * k);
    }
    cur[static_cast<std::size_t>(k - 1)] = 0;
  };
  rec(rec, nvars, d);
  return out;
}

long partition_count(int nvars, long d) {
  if (d < 0) return 0;
  // Classic table: p(j) with parts <= k, built k = 1..nvars.
  std::vector<long> p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= nvars; ++k)
    for (long j = k; j <= d; ++j)
      p[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(j - k)];
  return p[static_cast<std::size_t>(d)];
}

long Slice::index_of(const std::vector<int>& tuple, const Exponents& mon) const {
  const auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple);
  if (it == tuples.end() || *it != tuple) return -1;
  const std::size_t ti = static_cast<std::size_t>(it - tuples.begin());
  const auto mit = lookup[ti].find(mon);
  if (mit == lookup[ti].end()) return -1;
  return mit->second;
}

Slice make_slice(int nvars, int ell, long d) {
  Slice s;
  s.nvars = nvars;
  s.ell = ell;
  s.d = d;
  s.tuples = index_tuples(nvars, ell);
  long col = 0;
  for (const auto& t : s.tuples) {
    const long tsum = std::accumulate(t.begin(), t.end(), 0L);
    auto mons = weighted_monomials(nvars, d + tsum);
    std::map<Exponents, long, GradedLexLess> lk;
    for (const auto& m : mons) lk.emplace(m, col++);
    s.mons.push_back(std::move(mons));
    s.lookup.push_back(std::move(lk));
    s.offsets.push_back(col);
  }
  return s;
}

linalg::SparseRow slice_vector(const Slice& slice, const WedgeElement& w) {
  if (w.nvars() != slice.nvars || w.ell() != slice.ell)
    throw PolyError("slice_vector: element does not match slice shape");
  if (!same_symbols(w.coeff_symbols(), esyms(slice.nvars)))
    throw PolyError("slice_vector: coefficients must be E-REP");
  std::map<long, Int> acc;
  for (const auto& [t, c] : w.terms()) {
    for (const auto& [e, val] : c.terms()) {
      const long col = slice.index_of(t, e);
      if (col < 0)
        throw PolyError("slice_vector: term outside the deg1 = d slice");
      acc[col] += val;
    }
  }
  linalg::SparseRow row;
  row.reserve(acc.size());
  for (auto& [col, val] : acc)
    if (val != 0) row.emplace_back(col, std::move(val));
  return row;
}

}  // namespace nrs
