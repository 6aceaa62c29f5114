#pragma once

// Normalized 3- and 4-manifold invariants from surgery presentations.
//
//   rtw:   <prod omega_K> / (<omega at U+1>^{b+} <omega at U-1>^{b-})
//   broda: <prod omega+_K prod omega_Kdot>
//            / (<omega+ at U0>^nu <omega+_H omega_Hdot>^{(N + Ndot - nu)/2})
//
// Values stay exact: a numerator in Z[zeta] over a product of named bases
// raised to half-integer powers.  Equality is decided by cross-multiplying.

#include <complex>
#include <string>
#include <vector>

#include "qinv/colored.hpp"
#include "qinv/diagram.hpp"
#include "qinv/quadform.hpp"
#include "qinv/ring.hpp"

namespace qinv {

/// Ordinary components carry 2-handles, special ones 1-handles.
struct SpecialFramedLink {
  FramedLinkDiagram diagram;
  std::vector<bool> special;  // per component

  SpecialFramedLink() = default;
  explicit SpecialFramedLink(FramedLinkDiagram d) : diagram(std::move(d)), special(diagram.component_count(), false) {}
  SpecialFramedLink(FramedLinkDiagram d, std::vector<bool> s) : diagram(std::move(d)), special(std::move(s)) {}

  int ordinary_count() const;
  int special_count() const;
  /// Throws ValidationError: wrong flag count, special framing != 0, or
  /// two special components with nonzero linking number.
  void validate() const;
};

struct DenominatorFactor {
  std::string name;
  CyclotomicNumber base;
  int twice_exponent;  // exponent = twice_exponent / 2
};

struct InvariantValue {
  Level level;
  CyclotomicNumber numerator;
  std::vector<DenominatorFactor> denominator;
  std::complex<double> approx;
  Inertia inertia;
  int ordinary = 0;  // N
  int special = 0;   // Ndot

  /// True when some factor carries a half-integer exponent; approx then
  /// uses the principal square root of that base.
  bool half_integral() const;
};

/// numerator / prod base^{exponent}, principal branch for half powers.
std::complex<double> approximate(const CyclotomicNumber& numerator, const std::vector<DenominatorFactor>& denominator);

InvariantValue rtw(const FramedLinkDiagram& d, Level level, const ColoredOptions& options = {});
InvariantValue broda(const SpecialFramedLink& link, Level level, const ColoredOptions& options = {});

/// Floating-point re-evaluation of the same quotients.
std::complex<double> rtw_approx(const FramedLinkDiagram& d, Level level, const ColoredOptions& options = {});
std::complex<double> broda_approx(const SpecialFramedLink& link, Level level, const ColoredOptions& options = {});

/// Product of invariants (exponents add); distant union of presentations.
InvariantValue product(const InvariantValue& a, const InvariantValue& b);
/// Complex conjugate: numerator and every base conjugated.
InvariantValue conj(const InvariantValue& v);

struct Comparison {
  bool equal = false;
  /// Half-exponent parities differed, so only the squares were compared.
  bool sign_ambiguous = false;
};
Comparison compare(const InvariantValue& a, const InvariantValue& b);

/// The normalization bases, exposed for tests and the CLI.
CyclotomicNumber omega_unknot(Level level, int framing, Parity parity, const ColoredOptions& options = {});
CyclotomicNumber special_hopf_pairing(Level level, const ColoredOptions& options = {});

}  // namespace qinv
