#include "qinv/colored.hpp"

#include <cmath>
#include <numbers>

#include "qinv/errors.hpp"

namespace qinv {

ChebyshevTable chebyshev_table(int max_degree) {
  if (max_degree < 0) throw UsageError("chebyshev_table: negative degree");
  ChebyshevTable t;
  t.rows.push_back({1});
  if (max_degree >= 1) t.rows.push_back({0, 1});
  for (int n = 2; n <= max_degree; ++n) {
    std::vector<Integer> row(n + 1, 0);
    const auto& prev = t.rows[n - 1];
    const auto& prev2 = t.rows[n - 2];
    for (std::size_t m = 0; m < prev.size(); ++m) row[m + 1] += prev[m];
    for (std::size_t m = 0; m < prev2.size(); ++m) row[m] -= prev2[m];
    t.rows.push_back(std::move(row));
  }
  return t;
}

LaurentPoly quantum_dim_generic(int n) {
  LaurentPoly sum;
  for (int j = 0; j <= n; ++j) sum += LaurentPoly::monomial(2 * n - 4 * j);
  return n % 2 == 0 ? sum : -sum;
}

CyclotomicNumber quantum_dim(int n, Level level) {
  if (n < 0 || n > level.k() - 1)
    throw UsageError("quantum_dim: color " + std::to_string(n) + " outside 0..k-1 at k=" +
                     std::to_string(level.k()));
  return specialize(quantum_dim_generic(n), level);
}

const char* to_string(Parity p) {
  switch (p) {
    case Parity::All:
      return "all";
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
  }
  return "?";
}

namespace {

bool admits(Parity p, int n) {
  return p == Parity::All || (p == Parity::Even) == (n % 2 == 0);
}

}  // namespace

OmegaElement omega(Level level, Parity parity) {
  OmegaElement w{level, parity, {}};
  for (int n = 0; n <= level.k() - 2; ++n)
    w.coefficients.push_back(admits(parity, n) ? quantum_dim(n, level) : CyclotomicNumber(level));
  return w;
}

namespace {

// Color-basis weights of a label; index n is the weight of W_n.
std::vector<CyclotomicNumber> color_weights(const SkeinLabel& label, Level level) {
  return std::visit(
      [&](const auto& l) -> std::vector<CyclotomicNumber> {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, ColorLabel>) {
          if (l.n < 0 || l.n > level.k() - 1)
            throw UsageError("color " + std::to_string(l.n) + " outside 0..k-1 at k=" + std::to_string(level.k()));
          std::vector<CyclotomicNumber> w(l.n + 1, CyclotomicNumber(level));
          w[l.n] = CyclotomicNumber(level, 1);
          return w;
        } else if constexpr (std::is_same_v<L, OmegaLabel>) {
          return omega(level, l.parity).coefficients;
        } else {
          if (static_cast<int>(l.weights.size()) > level.k())
            throw UsageError("combination label uses colors above k-1");
          return l.weights;
        }
      },
      label);
}

std::vector<double> color_weights_approx(const SkeinLabel& label, Level level) {
  const int k = level.k();
  auto dim = [k](int n) {
    const double s = std::sin((n + 1) * std::numbers::pi / k) / std::sin(std::numbers::pi / k);
    return n % 2 == 0 ? s : -s;
  };
  if (const auto* o = std::get_if<OmegaLabel>(&label)) {
    std::vector<double> w;
    for (int n = 0; n <= k - 2; ++n) w.push_back(admits(o->parity, n) ? dim(n) : 0.0);
    return w;
  }
  if (const auto* c = std::get_if<ColorLabel>(&label)) {
    std::vector<double> w(c->n + 1, 0.0);
    w.at(c->n) = 1.0;
    return w;
  }
  throw UsageError("floating-point evaluation supports color and omega labels only");
}

// Converts color-basis weights to coefficients of x^m.
template <class T>
std::vector<T> power_basis(const std::vector<T>& weights, const ChebyshevTable& cheb, const T& zero) {
  std::vector<T> out(weights.size(), zero);
  for (std::size_t n = 0; n < weights.size(); ++n)
    for (std::size_t m = 0; m <= n; ++m) {
      const Integer& c = cheb.row(static_cast<int>(n))[m];
      if (c == 0) continue;
      if constexpr (std::is_same_v<T, double>) {
        out[m] += c.get_d() * weights[n];
      } else {
        out[m] += weights[n] * T(weights[n].level(), c.get_si());
      }
    }
  return out;
}

template <class T>
bool is_zero_value(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return v == 0.0;
  } else {
    return v.is_zero();
  }
}

// Sum over multiplicity vectors of prod_c coeffs[c][m_c] * bracket(cable(d, m)).
template <class T, class Acc, class BracketFn>
Acc expand_cables(const FramedLinkDiagram& framed, const std::vector<std::vector<T>>& coeffs, Acc total,
                  BracketFn bracket_of) {
  const std::size_t n = coeffs.size();
  std::vector<std::vector<int>> support(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t m = 0; m < coeffs[c].size(); ++m)
      if (!is_zero_value(coeffs[c][m])) support[c].push_back(static_cast<int>(m));
    if (support[c].empty()) return total;
  }
  if (n == 0) {
    total += bracket_of(framed, nullptr);
    return total;
  }
  std::vector<std::size_t> odometer(n, 0);
  std::vector<int> mult(n);
  while (true) {
    for (std::size_t c = 0; c < n; ++c) mult[c] = support[c][odometer[c]];
    T weight = coeffs[0][mult[0]];
    for (std::size_t c = 1; c < n; ++c) weight = weight * coeffs[c][mult[c]];
    total += bracket_of(cable(framed, mult), &weight);
    std::size_t c = 0;
    while (c < n && ++odometer[c] == support[c].size()) odometer[c++] = 0;
    if (c == n) break;
  }
  return total;
}

void check_label_count(const FramedLinkDiagram& d, std::size_t labels) {
  if (static_cast<int>(labels) != d.component_count())
    throw UsageError(std::to_string(labels) + " labels for " + std::to_string(d.component_count()) +
                     " components");
}

}  // namespace

CyclotomicNumber evaluate_labeled_link(const FramedLinkDiagram& d, const std::vector<SkeinLabel>& labels,
                                       Level level, const ColoredOptions& options) {
  check_label_count(d, labels.size());
  const ChebyshevTable cheb = chebyshev_table(level.k());
  std::vector<std::vector<CyclotomicNumber>> coeffs;
  for (const auto& l : labels) coeffs.push_back(power_basis(color_weights(l, level), cheb, CyclotomicNumber(level)));

  auto bracket_of = [&](const FramedLinkDiagram& cabled, const CyclotomicNumber* weight) {
    CyclotomicNumber value =
        options.engine == Engine::Sweep
            ? sweep_evaluate(cabled.word(), LevelScalars{level}, options.limits).reduce()
            : specialize(bracket_statesum(cabled.word(), options.limits).generic, level);
    return weight ? value * *weight : value;
  };
  return expand_cables(blackboard_framed(d), coeffs, CyclotomicNumber(level), bracket_of);
}

std::complex<double> evaluate_labeled_link_approx(const FramedLinkDiagram& d,
                                                  const std::vector<SkeinLabel>& labels, Level level,
                                                  const ColoredOptions& options) {
  check_label_count(d, labels.size());
  const ChebyshevTable cheb = chebyshev_table(level.k());
  std::vector<std::vector<double>> coeffs;
  for (const auto& l : labels) coeffs.push_back(power_basis(color_weights_approx(l, level), cheb, 0.0));
  const ComplexScalars scalars{root_of_unity(level)};
  auto bracket_of = [&](const FramedLinkDiagram& cabled, const double* weight) {
    const std::complex<double> value = sweep_evaluate(cabled.word(), scalars, options.limits);
    return weight ? value * *weight : value;
  };
  return expand_cables(blackboard_framed(d), coeffs, std::complex<double>(0.0), bracket_of);
}

LaurentPoly evaluate_colored_generic(const FramedLinkDiagram& d, const std::vector<int>& colors,
                                     const ColoredOptions& options) {
  check_label_count(d, colors.size());
  int top = 0;
  for (int n : colors) {
    if (n < 0) throw UsageError("negative color");
    top = std::max(top, n);
  }
  const ChebyshevTable cheb = chebyshev_table(top);
  const FramedLinkDiagram framed = blackboard_framed(d);
  const int comps = d.component_count();
  LaurentPoly total;
  std::vector<int> mult(comps, 0);
  // Odometer over m_c in 0..colors[c] with matching parity.
  for (int c = 0; c < comps; ++c) mult[c] = colors[c] % 2;
  while (true) {
    Integer weight = 1;
    for (int c = 0; c < comps; ++c) weight *= cheb.row(colors[c])[mult[c]];
    if (weight != 0) {
      const FramedLinkDiagram cabled = cable(framed, mult);
      LaurentPoly value = options.engine == Engine::Sweep ? bracket_sweep(cabled.word(), options.limits).generic
                                                          : bracket_statesum(cabled.word(), options.limits).generic;
      total += value * LaurentPoly::monomial(0, weight);
    }
    int c = 0;
    while (c < comps) {
      mult[c] += 2;
      if (mult[c] <= colors[c]) break;
      mult[c] = colors[c] % 2;
      ++c;
    }
    if (c == comps) break;
  }
  return total;
}

TwistCheck twist_eigen_check(int n, Level level) {
  if (n < 0 || n > level.k() - 2) throw UsageError("twist_eigen_check: color must lie in 0..k-2");
  TwistCheck check{n, level.k(), LaurentPoly::monomial(n * n + 2 * n, n % 2 == 0 ? 1 : -1)};
  const LaurentPoly framed = evaluate_colored_generic(unknot(1), {n});
  const LaurentPoly plain = evaluate_colored_generic(unknot(0), {n});
  check.generic_holds = framed == check.expected_ratio * plain;
  const CyclotomicNumber framed_k = evaluate_labeled_link(unknot(1), {ColorLabel{n}}, level);
  const CyclotomicNumber plain_k = evaluate_labeled_link(unknot(0), {ColorLabel{n}}, level);
  check.specialized_holds = framed_k == specialize(check.expected_ratio, level) * plain_k;
  return check;
}

}  // namespace qinv
