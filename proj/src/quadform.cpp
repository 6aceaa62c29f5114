#include "qinv/quadform.hpp"

#include <gmpxx.h>

#include "qinv/errors.hpp"

namespace qinv {

IntSymMatrix::IntSymMatrix(const std::vector<std::vector<long>>& rows) : IntSymMatrix(static_cast<int>(rows.size())) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[i].size()) != n_) throw UsageError("matrix is not square");
    for (int j = 0; j < n_; ++j) {
      if (rows[i][j] != rows[j][i]) throw UsageError("matrix is not symmetric");
      entries_[i * n_ + j] = rows[i][j];
    }
  }
}

void IntSymMatrix::set(int i, int j, long v) {
  entries_[i * n_ + j] = v;
  entries_[j * n_ + i] = v;
}

std::vector<std::vector<long>> IntSymMatrix::rows() const {
  std::vector<std::vector<long>> out(n_, std::vector<long>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntSymMatrix IntSymMatrix::direct_sum(const IntSymMatrix& other) const {
  IntSymMatrix out(n_ + other.n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.set(i, j, (*this)(i, j));
  for (int i = 0; i < other.n_; ++i)
    for (int j = 0; j < other.n_; ++j) out.set(n_ + i, n_ + j, other(i, j));
  return out;
}

IntSymMatrix IntSymMatrix::congruent(const std::vector<std::vector<long>>& u) const {
  if (static_cast<int>(u.size()) != n_) throw UsageError("congruence matrix has wrong dimension");
  IntSymMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      long s = 0;
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) s += u[a][i] * (*this)(a, b) * u[b][j];
      out.set(i, j, s);
    }
  return out;
}

IntSymMatrix linking_matrix(const FramedLinkDiagram& d) {
  const int n = d.component_count();
  IntSymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, d.framings()[i]);
    for (int j = i + 1; j < n; ++j) m.set(i, j, d.linking_number(i, j));
  }
  return m;
}

Inertia inertia(const IntSymMatrix& m) {
  const int n = m.dimension();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

  std::vector<bool> done(n, false);
  Inertia result;
  int remaining = n;
  while (remaining > 0) {
    int pivot = -1;
    for (int i = 0; i < n && pivot < 0; ++i)
      if (!done[i] && a[i][i] != 0) pivot = i;
    if (pivot >= 0) {
      // Schur complement of a nonzero diagonal pivot.
      const int p = pivot;
      for (int r = 0; r < n; ++r) {
        if (done[r] || r == p || a[r][p] == 0) continue;
        const mpq_class f = a[r][p] / a[p][p];
        for (int c = 0; c < n; ++c)
          if (!done[c] && c != p) a[r][c] -= f * a[p][c];
      }
      (a[p][p] > 0 ? result.b_plus : result.b_minus)++;
      done[p] = true;
      --remaining;
      continue;
    }
    // Every live diagonal entry vanishes: split off a hyperbolic block
    // [[0,b],[b,0]], whose inverse is [[0,1/b],[1/b,0]].
    int p = -1, q = -1;
    for (int i = 0; i < n && p < 0; ++i) {
      if (done[i]) continue;
      for (int j = i + 1; j < n; ++j)
        if (!done[j] && a[i][j] != 0) {
          p = i;
          q = j;
          break;
        }
    }
    if (p < 0) {
      result.nullity += remaining;
      break;
    }
    const mpq_class b = a[p][q];
    std::vector<std::vector<mpq_class>> next = a;
    for (int r = 0; r < n; ++r) {
      if (done[r] || r == p || r == q) continue;
      for (int c = 0; c < n; ++c) {
        if (done[c] || c == p || c == q) continue;
        next[r][c] -= (a[r][p] * a[q][c] + a[r][q] * a[p][c]) / b;
      }
    }
    a = std::move(next);
    done[p] = done[q] = true;
    remaining -= 2;
    result.b_plus++;
    result.b_minus++;
  }
  return result;
}

}  // namespace qinv
