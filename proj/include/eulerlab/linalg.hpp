#pragma once

// Small dense linear algebra over F2 (bit-packed rows) and Q (exact rationals).

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace eulerlab::linalg {

// F2 vectors pack coordinate j+1 into bit j.
using F2Vec = std::uint64_t;

inline int parity(F2Vec v) { return __builtin_parityll(v); }
inline int pairing(F2Vec alpha, F2Vec v) { return parity(alpha & v); }

/// Canonical reduced row-echelon basis of span(rows): pivots are the lowest set
/// bit of each row, pivot columns cleared elsewhere, rows sorted by pivot.
std::vector<F2Vec> f2_rref(std::vector<F2Vec> rows);
int f2_rank(const std::vector<F2Vec>& rows);
bool f2_in_span(const std::vector<F2Vec>& rref_basis, F2Vec v);
/// Basis (canonical rref) of {x : pairing(x, r) = 0 for every row r}, x in F2^n.
std::vector<F2Vec> f2_annihilator(const std::vector<F2Vec>& rows, int n);
/// Coefficients c (bit k = coefficient of basis[k]) with v = sum c_k basis[k];
/// basis must be linearly independent. Empty optional if v is not in the span.
std::optional<F2Vec> f2_coordinates(const std::vector<F2Vec>& basis, F2Vec v);
/// All 2^k elements of span(basis), enumerated by coefficient bits.
std::vector<F2Vec> f2_span_elements(const std::vector<F2Vec>& basis);

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

QMat q_rref(QMat rows);
int q_rank(const QMat& rows);
bool q_in_span(const QMat& rref_basis, const QVec& v);
/// Inverse of a square matrix; empty optional if singular.
std::optional<QMat> q_inverse(const QMat& m);

}  // namespace eulerlab::linalg
