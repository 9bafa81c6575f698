#include "eulerlab/linalg.hpp"

#include <algorithm>

namespace eulerlab::linalg {

std::vector<F2Vec> f2_rref(std::vector<F2Vec> rows) {
  std::vector<F2Vec> basis;
  for (F2Vec r : rows) {
    for (F2Vec b : basis) {
      const F2Vec pivot = b & -b;
      if (r & pivot) r ^= b;
    }
    if (r == 0) continue;
    const F2Vec pivot = r & -r;
    for (F2Vec& b : basis) {
      if (b & pivot) b ^= r;
    }
    basis.push_back(r);
  }
  std::sort(basis.begin(), basis.end(), [](F2Vec a, F2Vec b) { return (a & -a) < (b & -b); });
  return basis;
}

int f2_rank(const std::vector<F2Vec>& rows) { return static_cast<int>(f2_rref(rows).size()); }

bool f2_in_span(const std::vector<F2Vec>& rref_basis, F2Vec v) {
  for (F2Vec b : rref_basis) {
    if (v & (b & -b)) v ^= b;
  }
  return v == 0;
}

std::vector<F2Vec> f2_annihilator(const std::vector<F2Vec>& rows, int n) {
  const auto basis = f2_rref(rows);
  F2Vec pivots = 0;
  for (F2Vec b : basis) pivots |= b & -b;
  std::vector<F2Vec> out;
  for (int free = 0; free < n; ++free) {
    const F2Vec fbit = F2Vec{1} << free;
    if (pivots & fbit) continue;
    // x_free = 1; each pivot variable equals the row's entry in the free column.
    F2Vec x = fbit;
    for (F2Vec b : basis) {
      if (b & fbit) x |= b & -b;
    }
    out.push_back(x);
  }
  return f2_rref(out);
}

std::optional<F2Vec> f2_coordinates(const std::vector<F2Vec>& basis, F2Vec v) {
  // Track which original vectors make up each reduced row.
  struct Row {
    F2Vec value;
    F2Vec combo;
  };
  std::vector<Row> reduced;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Row r{basis[k], F2Vec{1} << k};
    for (const Row& b : reduced) {
      if (r.value & (b.value & -b.value)) {
        r.value ^= b.value;
        r.combo ^= b.combo;
      }
    }
    if (r.value == 0) return std::nullopt;  // dependent basis
    reduced.push_back(r);
  }
  F2Vec combo = 0;
  for (const Row& b : reduced) {
    if (v & (b.value & -b.value)) {
      v ^= b.value;
      combo ^= b.combo;
    }
  }
  if (v != 0) return std::nullopt;
  return combo;
}

std::vector<F2Vec> f2_span_elements(const std::vector<F2Vec>& basis) {
  std::vector<F2Vec> out(std::size_t{1} << basis.size(), 0);
  for (std::size_t mask = 1; mask < out.size(); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_ctzll(mask));
    out[mask] = out[mask & (mask - 1)] ^ basis[k];
  }
  return out;
}

QMat q_rref(QMat rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const mpq_class inv = 1 / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const mpq_class f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

int q_rank(const QMat& rows) { return static_cast<int>(q_rref(rows).size()); }

bool q_in_span(const QMat& rref_basis, const QVec& v) {
  QVec r = v;
  for (const auto& b : rref_basis) {
    std::size_t col = 0;
    while (col < b.size() && b[col] == 0) ++col;
    if (col == b.size() || r[col] == 0) continue;
    const mpq_class f = r[col];
    for (std::size_t c = col; c < r.size(); ++c) r[c] -= f * b[c];
  }
  return std::all_of(r.begin(), r.end(), [](const mpq_class& x) { return x == 0; });
}

std::optional<QMat> q_inverse(const QMat& m) {
  const std::size_t n = m.size();
  QMat aug(n, QVec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto red = q_rref(aug);
  if (red.size() != n) return std::nullopt;
  QMat inv(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (red[i][i] != 1) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = red[i][n + j];
  }
  return inv;
}

}  // namespace eulerlab::linalg
