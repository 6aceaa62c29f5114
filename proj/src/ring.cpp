#include "qinv/ring.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "qinv/errors.hpp"

namespace qinv {

namespace {

// Exact division of a by a monic polynomial b; the remainder must vanish.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

long mod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw UsageError("cyclotomic_polynomial: m must be >= 1");
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  return p;
}

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coefficient) {
  LaurentPoly p;
  if (coefficient != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(std::move(coefficient));
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Integer>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[exponent - low_];
}

std::map<int, Integer> LaurentPoly::terms() const {
  std::map<int, Integer> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::shifted(int j) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += j;
  return p;
}

LaurentPoly LaurentPoly::conj() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.low_ = -high_degree();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[o.low_ - low_ + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentPoly();
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  low_ += o.low_;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> a) const {
  std::complex<double> acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * a + coeffs_[i].get_d();
  return acc * std::pow(a, low_);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Integer c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "A";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly loop_value() { return -LaurentPoly::monomial(2) - LaurentPoly::monomial(-2); }

// ---------------------------------------------------------------- Level

Level::Level(int k) : k_(k) {
  if (k < 2) throw UsageError("level k must be >= 2, got " + std::to_string(k));
}

int Level::degree() const { return euler_phi(order()); }

namespace detail {

struct LevelTables {
  int k = 0;
  int order = 0;
  int degree = 0;
  // reduction[i] = x^i mod Phi_{4k} in the power basis, i < 4k.
  std::vector<std::vector<long>> reduction;
};

namespace {

std::shared_ptr<const LevelTables> build_tables(int k) {
  auto t = std::make_shared<LevelTables>();
  t->k = k;
  t->order = 4 * k;
  const IntPoly phi = cyclotomic_polynomial(t->order);
  t->degree = static_cast<int>(phi.size()) - 1;
  std::vector<Integer> cur(t->degree, 0);
  cur[0] = 1;
  for (int i = 0; i < t->order; ++i) {
    std::vector<long> row(t->degree);
    for (int j = 0; j < t->degree; ++j) row[j] = cur[j].get_si();
    t->reduction.push_back(std::move(row));
    // multiply by x and fold the overflow using the monic relation
    const Integer top = cur.back();
    for (int j = t->degree - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < t->degree; ++j) cur[j] -= top * phi[j];
  }
  return t;
}

}  // namespace

std::shared_ptr<const LevelTables> tables_for(Level level) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const LevelTables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[level.k()];
  if (!slot) slot = build_tables(level.k());
  return slot;
}

}  // namespace detail

// ---------------------------------------------------------------- CyclotomicNumber

namespace {

// Folds a coefficient vector of any length (indices taken mod 4k) into the
// canonical power basis.
std::vector<Integer> reduce_cyclic(const detail::LevelTables& t, const std::vector<Integer>& raw) {
  std::vector<Integer> folded(t.order, 0);
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (raw[i] != 0) folded[i % t.order] += raw[i];
  std::vector<Integer> out(folded.begin(), folded.begin() + t.degree);
  for (int i = t.degree; i < t.order; ++i) {
    if (folded[i] == 0) continue;
    const auto& row = t.reduction[i];
    for (int j = 0; j < t.degree; ++j)
      if (row[j] != 0) out[j] += folded[i] * row[j];
  }
  return out;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const detail::LevelTables> tables,
                                   std::vector<Integer> coeffs)
    : tables_(std::move(tables)), coeffs_(std::move(coeffs)) {}

CyclotomicNumber::CyclotomicNumber(Level level)
    : tables_(detail::tables_for(level)), coeffs_(tables_->degree, 0) {}

CyclotomicNumber::CyclotomicNumber(Level level, long c) : CyclotomicNumber(level) { coeffs_[0] = c; }

CyclotomicNumber::CyclotomicNumber(Level level, std::vector<Integer> coeffs)
    : tables_(detail::tables_for(level)) {
  coeffs_ = reduce_cyclic(*tables_, coeffs);
}

CyclotomicNumber CyclotomicNumber::zeta_power(Level level, long j) {
  auto t = detail::tables_for(level);
  const auto& row = t->reduction[mod(j, t->order)];
  return CyclotomicNumber(t, std::vector<Integer>(row.begin(), row.end()));
}

Level CyclotomicNumber::level() const { return Level(tables_->k); }

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

void CyclotomicNumber::require_same_level(const CyclotomicNumber& o) const {
  if (tables_->k != o.tables_->k)
    throw UsageError("cyclotomic level mismatch: " + std::to_string(tables_->k) + " vs " +
                     std::to_string(o.tables_->k));
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  require_same_level(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  require_same_level(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  require_same_level(o);
  std::vector<Integer> prod(2 * coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = reduce_cyclic(*tables_, prod);
  return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.require_same_level(b);
  return a.coeffs_ == b.coeffs_;
}

CyclotomicNumber CyclotomicNumber::pow(unsigned e) const {
  CyclotomicNumber result(level(), 1), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::conj() const {
  std::vector<Integer> raw(tables_->order, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    raw[mod(-static_cast<long>(i), tables_->order)] = coeffs_[i];
  return CyclotomicNumber(tables_, reduce_cyclic(*tables_, raw));
}

std::complex<double> CyclotomicNumber::complex_approx() const {
  const long double angle = std::numbers::pi_v<long double> / (2.0L * tables_->k);
  long double re = 0, im = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const long double c = coeffs_[i].get_d();
    re += c * std::cos(angle * static_cast<long double>(i));
    im += c * std::sin(angle * static_cast<long double>(i));
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Integer c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "z";
    if (i != 1) os << "^" << i;
  }
  if (first) os << "0";
  os << " (z = exp(i*pi/" << 2 * tables_->k << "))";
  return os.str();
}

// ---------------------------------------------------------------- CyclicPoly

CyclicPoly::CyclicPoly(Level level) : level_(level), coeffs_(level.order(), 0) {}

CyclicPoly CyclicPoly::monomial(Level level, long j, Integer c) {
  CyclicPoly p(level);
  p.coeffs_[mod(j, level.order())] = std::move(c);
  return p;
}

CyclicPoly CyclicPoly::shifted(long j) const {
  CyclicPoly p(level_);
  const long n = order();
  const long s = mod(j, n);
  for (long i = 0; i < n; ++i) p.coeffs_[(i + s) % n] = coeffs_[i];
  return p;
}

CyclicPoly& CyclicPoly::operator+=(const CyclicPoly& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclicPoly& CyclicPoly::operator-=(const CyclicPoly& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclicPoly CyclicPoly::operator-() const {
  CyclicPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

CyclotomicNumber CyclicPoly::reduce() const { return CyclotomicNumber(level_, coeffs_); }

CyclotomicNumber specialize(const LaurentPoly& p, Level level) {
  CyclicPoly acc(level);
  for (const auto& [e, c] : p.terms()) acc += CyclicPoly::monomial(level, e, c);
  return acc.reduce();
}

std::complex<double> root_of_unity(Level level) {
  return std::polar(1.0, std::numbers::pi / (2.0 * level.k()));
}

}  // namespace qinv
