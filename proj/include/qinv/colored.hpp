#pragma once

// Colored evaluation by cabling.  A component colored n carries S_n(x),
// where x^m is the blackboard m-parallel of the component; omega labels are
// the combinations sum_n <W_n> S_n over n = 0..k-2.

#include <complex>
#include <variant>
#include <vector>

#include "qinv/diagram.hpp"
#include "qinv/ring.hpp"
#include "qinv/skein.hpp"

namespace qinv {

/// rows[n][m] is the coefficient of x^m in S_n(x); S_0 = 1, S_1 = x,
/// S_{n+2} = x S_{n+1} - S_n.
struct ChebyshevTable {
  std::vector<std::vector<Integer>> rows;
  const std::vector<Integer>& row(int n) const { return rows.at(n); }
};
ChebyshevTable chebyshev_table(int max_degree);

/// <W_n at the unknot> = (-1)^n sum_{j=0..n} q^{n/2-j}, q^{1/2} = A^2.
CyclotomicNumber quantum_dim(int n, Level level);
LaurentPoly quantum_dim_generic(int n);

enum class Parity { All, Even, Odd };
const char* to_string(Parity p);

struct OmegaElement {
  Level level;
  Parity parity;
  std::vector<CyclotomicNumber> coefficients;  // colors 0..k-2
};
OmegaElement omega(Level level, Parity parity);

struct ColorLabel {
  int n;
};
struct OmegaLabel {
  Parity parity;
};
/// Formal combination sum_n weights[n] * W_n.
struct CombinationLabel {
  std::vector<CyclotomicNumber> weights;
};
using SkeinLabel = std::variant<ColorLabel, OmegaLabel, CombinationLabel>;

struct ColoredOptions {
  Engine engine = Engine::Sweep;
  EvalLimits limits = EvalLimits::from_env();
};

/// Kink-adjusts every component to its framing, then sums, over
/// multiplicity vectors m, the label coefficients times <cable(d, m)> at
/// the level's root of unity.
CyclotomicNumber evaluate_labeled_link(const FramedLinkDiagram& d, const std::vector<SkeinLabel>& labels,
                                       Level level, const ColoredOptions& options = {});

/// Same expansion carried out entirely in double precision.
std::complex<double> evaluate_labeled_link_approx(const FramedLinkDiagram& d,
                                                  const std::vector<SkeinLabel>& labels, Level level,
                                                  const ColoredOptions& options = {});

/// Generic (unspecialized) evaluation with a color on every component.
LaurentPoly evaluate_colored_generic(const FramedLinkDiagram& d, const std::vector<int>& colors,
                                     const ColoredOptions& options = {});

struct TwistCheck {
  int n;
  int k;
  LaurentPoly expected_ratio;      // (-1)^n A^{n^2 + 2n}
  bool generic_holds = false;      // as Laurent polynomials
  bool specialized_holds = false;  // at the level's root of unity
};
/// Compares the colored unknot with framing +1 against framing 0 by
/// cross-multiplication, both generically and at level k.
TwistCheck twist_eigen_check(int n, Level level);

}  // namespace qinv
