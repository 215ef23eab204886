#include "nrs/linalg.hpp"

#include <map>

namespace nrs::linalg {

long rank_dense(std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    const Rat inv = 1 / rows[pivot_row][col];
    for (std::size_t j = col; j < ncols; ++j) rows[pivot_row][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][col] == 0) continue;
      const Rat f = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[i][j] -= f * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  return static_cast<long>(pivot_row);
}

std::optional<std::vector<Rat>> solve_dense(std::vector<std::vector<Rat>> a,
                                            std::vector<Rat> b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw PolyError("solve_dense: rhs size mismatch");
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<long> pivot_col_of_row;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
    std::size_t sel = pivot_row;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[pivot_row], a[sel]);
    std::swap(b[pivot_row], b[sel]);
    const Rat inv = 1 / a[pivot_row][col];
    for (std::size_t j = col; j < n; ++j) a[pivot_row][j] *= inv;
    b[pivot_row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pivot_row || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[pivot_row][j];
      b[i] -= f * b[pivot_row];
    }
    pivot_col_of_row.push_back(static_cast<long>(col));
    ++pivot_row;
  }
  for (std::size_t i = pivot_row; i < m; ++i)
    if (b[i] != 0) return std::nullopt;  // inconsistent
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < pivot_row; ++i)
    x[static_cast<std::size_t>(pivot_col_of_row[i])] = b[i];
  return x;
}

namespace detail {

SparseRow row_combine(const Int& a, const SparseRow& ra, const Int& b,
                      const SparseRow& rb) {
  SparseRow out;
  out.reserve(ra.size() + rb.size());
  std::size_t i = 0, j = 0;
  while (i < ra.size() || j < rb.size()) {
    if (j == rb.size() || (i < ra.size() && ra[i].first < rb[j].first)) {
      out.emplace_back(ra[i].first, a * ra[i].second);
      ++i;
    } else if (i == ra.size() || rb[j].first < ra[i].first) {
      out.emplace_back(rb[j].first, -(b * rb[j].second));
      ++j;
    } else {
      Int v = a * ra[i].second - b * rb[j].second;
      if (v != 0) out.emplace_back(ra[i].first, std::move(v));
      ++i, ++j;
    }
  }
  // Content reduction keeps entries small across long eliminations.
  if (!out.empty()) {
    Int g = 0;
    for (const auto& [c, v] : out) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (g > 1)
      for (auto& [c, v] : out)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

}  // namespace detail

long rank_sparse(std::vector<SparseRow> rows) {
  std::map<long, SparseRow> pivots;  // leading column -> reduced row
  for (auto& row : rows) {
    while (!row.empty()) {
      const long lead = row.front().first;
      const auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = detail::row_combine(it->second.front().second, row,
                                row.front().second, it->second);
    }
  }
  return static_cast<long>(pivots.size());
}

}  // namespace nrs::linalg
