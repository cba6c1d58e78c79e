#pragma once

#include <vector>

#include "satake/rational.hpp"

namespace satake {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

QVec qvec_zero(std::size_t n);
QMat qmat_identity(std::size_t n);
QMat qmat_zero(std::size_t rows, std::size_t cols);

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rational& c, const QVec& v);
bool is_zero(const QVec& v);

QVec mat_vec(const QMat& m, const QVec& v);
QMat mat_mul(const QMat& a, const QMat& b);
QMat transpose(const QMat& m);

/// Row echelon form in place; returns the rank. Column-pivot order is left
/// to right, so the result is canonical for a fixed row span.
std::size_t row_reduce(QMat& m);

std::size_t rank(QMat m);

/// Basis of { x : m x = 0 }.
std::vector<QVec> kernel_basis(const QMat& m);

/// Basis of the intersection of two row-span subspaces.
std::vector<QVec> intersect_spans(const std::vector<QVec>& a, const std::vector<QVec>& b,
                                  std::size_t dim);

/// Does v lie in the row span of basis?
bool in_span(const std::vector<QVec>& basis, const QVec& v);

/// One solution x of m x = rhs; throws if inconsistent.
QVec solve(QMat m, QVec rhs);

}  // namespace satake
