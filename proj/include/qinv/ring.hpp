#pragma once

// Exact arithmetic for bracket values.
//
// LaurentPoly is Z[A, A^-1].  CyclotomicNumber is an element of Z[zeta] with
// zeta = exp(i*pi/(2k)) a primitive 4k-th root of unity, stored in the power
// basis 1, zeta, ..., zeta^(phi(4k)-1).  Specializing A -> zeta sends
// q = A^4 to exp(2*pi*i/k).

#include <gmpxx.h>

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qinv {

using Integer = mpz_class;

/// Integer polynomial, coefficient of x^i at index i, no trailing zeros.
using IntPoly = std::vector<Integer>;

/// m-th cyclotomic polynomial, by exact division of x^m - 1 by the
/// cyclotomic polynomials of the proper divisors of m.
IntPoly cyclotomic_polynomial(int m);

int euler_phi(int m);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integers embed as constants
  static LaurentPoly monomial(int exponent, Integer coefficient = 1);
  static LaurentPoly from_terms(const std::map<int, Integer>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int exponent) const;
  std::map<int, Integer> terms() const;

  /// Multiplication by A^j.
  LaurentPoly shifted(int j) const;
  /// A -> A^-1.
  LaurentPoly conj() const;
  LaurentPoly pow(unsigned e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::complex<double> evaluate(std::complex<double> a) const;
  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

/// The loop value -A^2 - A^-2.
LaurentPoly loop_value();

class Level {
 public:
  explicit Level(int k);
  int k() const { return k_; }
  /// Order of zeta, 4k.
  int order() const { return 4 * k_; }
  /// Degree of the power basis, phi(4k).
  int degree() const;
  friend bool operator==(Level a, Level b) { return a.k_ == b.k_; }

 private:
  int k_;
};

namespace detail {
struct LevelTables;
}

class CyclicPoly;

class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(Level level);
  CyclotomicNumber(Level level, long c);
  /// Coordinates in the power basis; reduced if longer than the degree.
  CyclotomicNumber(Level level, std::vector<Integer> coeffs);

  static CyclotomicNumber zeta_power(Level level, long j);

  Level level() const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  CyclotomicNumber operator-() const;
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  CyclotomicNumber pow(unsigned e) const;
  /// zeta -> zeta^-1, i.e. complex conjugation.
  CyclotomicNumber conj() const;
  std::complex<double> complex_approx() const;
  std::string to_string() const;

 private:
  friend class CyclicPoly;
  CyclotomicNumber(std::shared_ptr<const detail::LevelTables> tables, std::vector<Integer> coeffs);
  void require_same_level(const CyclotomicNumber& o) const;

  std::shared_ptr<const detail::LevelTables> tables_;
  std::vector<Integer> coeffs_;
};

/// Element of Z[x]/(x^{4k} - 1).  Multiplication by a power of x is a
/// rotation, which makes this the cheap accumulator for sweep evaluation;
/// reduce() maps it onto the canonical CyclotomicNumber.
class CyclicPoly {
 public:
  explicit CyclicPoly(Level level);
  static CyclicPoly monomial(Level level, long j, Integer c = 1);

  int order() const { return static_cast<int>(coeffs_.size()); }
  CyclicPoly shifted(long j) const;
  CyclicPoly& operator+=(const CyclicPoly& o);
  CyclicPoly& operator-=(const CyclicPoly& o);
  CyclicPoly operator-() const;
  CyclotomicNumber reduce() const;

 private:
  Level level_;
  std::vector<Integer> coeffs_;
};

/// A -> zeta at level k.
CyclotomicNumber specialize(const LaurentPoly& p, Level level);

/// exp(i*pi/(2k)).
std::complex<double> root_of_unity(Level level);

}  // namespace qinv
