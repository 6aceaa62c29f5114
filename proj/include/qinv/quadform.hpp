#pragma once

#include <vector>

#include "qinv/diagram.hpp"

namespace qinv {

/// Symmetric integer matrix, row-major.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  explicit IntSymMatrix(int dimension) : n_(dimension), entries_(dimension * dimension, 0) {}
  /// Throws UsageError unless rows form a symmetric square matrix.
  explicit IntSymMatrix(const std::vector<std::vector<long>>& rows);

  int dimension() const { return n_; }
  long operator()(int i, int j) const { return entries_[i * n_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, long v);
  std::vector<std::vector<long>> rows() const;

  /// Block sum with `other` placed after this matrix.
  IntSymMatrix direct_sum(const IntSymMatrix& other) const;
  /// U^T M U for a square integer matrix U of the same dimension.
  IntSymMatrix congruent(const std::vector<std::vector<long>>& u) const;

  friend bool operator==(const IntSymMatrix&, const IntSymMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<long> entries_;
};

struct Inertia {
  int b_plus = 0;
  int b_minus = 0;
  int nullity = 0;
  int dimension() const { return b_plus + b_minus + nullity; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Framings on the diagonal, pairwise linking numbers off it.
IntSymMatrix linking_matrix(const FramedLinkDiagram& d);

/// Exact congruence diagonalization over the rationals.
Inertia inertia(const IntSymMatrix& m);

}  // namespace qinv
