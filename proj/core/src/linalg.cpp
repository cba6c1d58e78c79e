#include "satake/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace satake {

QVec qvec_zero(std::size_t n) { return QVec(n, Rational(0)); }

QMat qmat_identity(std::size_t n) {
  QMat m(n, qvec_zero(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

QMat qmat_zero(std::size_t rows, std::size_t cols) { return QMat(rows, qvec_zero(cols)); }

QVec operator+(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec operator*(const Rational& c, const QVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

QVec mat_vec(const QMat& m, const QVec& v) {
  QVec r(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    assert(m[i].size() == v.size());
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  }
  return r;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMat r = qmat_zero(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    assert(a[i].size() == k);
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

QMat transpose(const QMat& m) {
  if (m.empty()) return {};
  QMat r = qmat_zero(m[0].size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
  return r;
}

std::size_t row_reduce(QMat& m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return r;
}

std::size_t rank(QMat m) { return row_reduce(m); }

std::vector<QVec> kernel_basis(const QMat& m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  QMat red = m;
  row_reduce(red);
  std::vector<int> pivot_col(red.size(), -1);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < red.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!red[i][j].is_zero()) {
        pivot_col[i] = static_cast<int>(j);
        is_pivot[j] = true;
        break;
      }
    }
  }
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v = qvec_zero(cols);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < red.size(); ++i) {
      if (pivot_col[i] >= 0) v[pivot_col[i]] = -red[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVec> intersect_spans(const std::vector<QVec>& a, const std::vector<QVec>& b,
                                  std::size_t dim) {
  // Zassenhaus: row reduce [A A; B 0]; rows with zero left block give the
  // intersection in the right block.
  std::size_t n = dim;
  QMat big;
  for (const auto& v : a) {
    QVec row(2 * n);
    for (std::size_t i = 0; i < n; ++i) { row[i] = v[i]; row[n + i] = v[i]; }
    big.push_back(std::move(row));
  }
  for (const auto& v : b) {
    QVec row(2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) row[i] = v[i];
    big.push_back(std::move(row));
  }
  row_reduce(big);
  std::vector<QVec> result;
  for (const auto& row : big) {
    bool left_zero = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!row[i].is_zero()) { left_zero = false; break; }
    if (!left_zero) continue;
    QVec v(row.begin() + n, row.end());
    if (!is_zero(v)) result.push_back(std::move(v));
  }
  return result;
}

bool in_span(const std::vector<QVec>& basis, const QVec& v) {
  QMat m = basis.empty() ? QMat{} : QMat(basis.begin(), basis.end());
  std::size_t r0 = m.empty() ? 0 : rank(m);
  m = basis.empty() ? QMat{} : QMat(basis.begin(), basis.end());
  m.push_back(v);
  return rank(m) == r0;
}

QVec solve(QMat m, QVec rhs) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  QMat aug = m;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(rhs[i]);
  row_reduce(aug);
  // RREF with free variables set to zero: each pivot variable reads off the
  // augmented column directly.
  QVec x = qvec_zero(cols);
  for (const auto& row : aug) {
    int piv = -1;
    for (std::size_t j = 0; j < cols; ++j)
      if (!row[j].is_zero()) { piv = static_cast<int>(j); break; }
    if (piv < 0) {
      if (!row[cols].is_zero()) throw std::domain_error("solve: inconsistent system");
      continue;
    }
    x[piv] = row[cols];
  }
  for (std::size_t i = 0; i < rows; ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < cols; ++j) acc += m[i][j] * x[j];
    if (acc != rhs[i]) throw std::domain_error("solve: inconsistent system");
  }
  return x;
}

}  // namespace satake
