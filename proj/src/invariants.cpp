#include "qinv/invariants.hpp"

#include <algorithm>

#include "qinv/errors.hpp"

namespace qinv {

int SpecialFramedLink::ordinary_count() const {
  return static_cast<int>(std::count(special.begin(), special.end(), false));
}

int SpecialFramedLink::special_count() const {
  return static_cast<int>(std::count(special.begin(), special.end(), true));
}

void SpecialFramedLink::validate() const {
  const int n = diagram.component_count();
  if (static_cast<int>(special.size()) != n)
    throw ValidationError("special flags given for " + std::to_string(special.size()) + " of " +
                          std::to_string(n) + " components");
  for (int i = 0; i < n; ++i) {
    if (!special[i]) continue;
    if (diagram.framings()[i] != 0)
      throw ValidationError("special component " + std::to_string(i) + " has framing " +
                            std::to_string(diagram.framings()[i]) + ", expected 0");
    for (int j = i + 1; j < n; ++j)
      if (special[j] && diagram.linking_number(i, j) != 0)
        throw ValidationError("special components " + std::to_string(i) + " and " + std::to_string(j) +
                              " have linking number " + std::to_string(diagram.linking_number(i, j)));
  }
}

bool InvariantValue::half_integral() const {
  return std::any_of(denominator.begin(), denominator.end(),
                     [](const DenominatorFactor& f) { return f.twice_exponent % 2 != 0; });
}

namespace {

std::complex<double> power(std::complex<double> base, int twice_exponent) {
  std::complex<double> out = 1.0;
  const int whole = std::abs(twice_exponent) / 2;
  for (int i = 0; i < whole; ++i) out *= base;
  if (std::abs(twice_exponent) % 2 == 1) out *= std::sqrt(base);
  return twice_exponent < 0 ? 1.0 / out : out;
}

std::complex<double> divide_out(std::complex<double> numerator,
                                const std::vector<std::pair<std::complex<double>, int>>& factors) {
  for (const auto& [base, e] : factors) numerator /= power(base, e);
  return numerator;
}

void require_nondegenerate(const DenominatorFactor& f, Level level) {
  if (f.twice_exponent != 0 && f.base.is_zero())
    throw DegenerateLevelError("normalization base " + f.name + " vanishes at k=" + std::to_string(level.k()));
}

}  // namespace

std::complex<double> approximate(const CyclotomicNumber& numerator, const std::vector<DenominatorFactor>& denominator) {
  std::vector<std::pair<std::complex<double>, int>> factors;
  for (const auto& f : denominator) factors.emplace_back(f.base.complex_approx(), f.twice_exponent);
  return divide_out(numerator.complex_approx(), factors);
}

CyclotomicNumber omega_unknot(Level level, int framing, Parity parity, const ColoredOptions& options) {
  return evaluate_labeled_link(unknot(framing), {OmegaLabel{parity}}, level, options);
}

CyclotomicNumber special_hopf_pairing(Level level, const ColoredOptions& options) {
  return evaluate_labeled_link(hopf_link(0, 0), {OmegaLabel{Parity::Even}, OmegaLabel{Parity::All}}, level, options);
}

InvariantValue rtw(const FramedLinkDiagram& d, Level level, const ColoredOptions& options) {
  const Inertia form = inertia(linking_matrix(d));
  std::vector<SkeinLabel> labels(d.component_count(), OmegaLabel{Parity::All});
  InvariantValue v{level, evaluate_labeled_link(d, labels, level, options), {}, {}, form, d.component_count(), 0};
  v.denominator.push_back({"<omega at U+1>", omega_unknot(level, 1, Parity::All, options), 2 * form.b_plus});
  v.denominator.push_back({"<omega at U-1>", omega_unknot(level, -1, Parity::All, options), 2 * form.b_minus});
  for (const auto& f : v.denominator) require_nondegenerate(f, level);
  v.approx = approximate(v.numerator, v.denominator);
  return v;
}

namespace {

std::vector<SkeinLabel> broda_labels(const SpecialFramedLink& link) {
  std::vector<SkeinLabel> labels;
  for (bool s : link.special) labels.push_back(OmegaLabel{s ? Parity::All : Parity::Even});
  return labels;
}

}  // namespace

InvariantValue broda(const SpecialFramedLink& link, Level level, const ColoredOptions& options) {
  link.validate();
  const Inertia form = inertia(linking_matrix(link.diagram));
  const int n = link.ordinary_count();
  const int ndot = link.special_count();
  InvariantValue v{level, evaluate_labeled_link(link.diagram, broda_labels(link), level, options), {}, {}, form, n,
                   ndot};
  v.denominator.push_back({"<omega+ at U0>", omega_unknot(level, 0, Parity::Even, options), 2 * form.nullity});
  v.denominator.push_back({"<omega+_H omega_Hdot>", special_hopf_pairing(level, options), n + ndot - form.nullity});
  for (const auto& f : v.denominator) require_nondegenerate(f, level);
  v.approx = approximate(v.numerator, v.denominator);
  return v;
}

std::complex<double> rtw_approx(const FramedLinkDiagram& d, Level level, const ColoredOptions& options) {
  const Inertia form = inertia(linking_matrix(d));
  std::vector<SkeinLabel> labels(d.component_count(), OmegaLabel{Parity::All});
  const SkeinLabel w = OmegaLabel{Parity::All};
  return divide_out(evaluate_labeled_link_approx(d, labels, level, options),
                    {{evaluate_labeled_link_approx(unknot(1), {w}, level, options), 2 * form.b_plus},
                     {evaluate_labeled_link_approx(unknot(-1), {w}, level, options), 2 * form.b_minus}});
}

std::complex<double> broda_approx(const SpecialFramedLink& link, Level level, const ColoredOptions& options) {
  link.validate();
  const Inertia form = inertia(linking_matrix(link.diagram));
  const int exponent = link.ordinary_count() + link.special_count() - form.nullity;
  const SkeinLabel even = OmegaLabel{Parity::Even}, all = OmegaLabel{Parity::All};
  return divide_out(evaluate_labeled_link_approx(link.diagram, broda_labels(link), level, options),
                    {{evaluate_labeled_link_approx(unknot(0), {even}, level, options), 2 * form.nullity},
                     {evaluate_labeled_link_approx(hopf_link(0, 0), {even, all}, level, options), exponent}});
}

namespace {

// Adds factors of `from` into `into`, merging bases that are exactly equal.
void merge_factors(std::vector<DenominatorFactor>& into, const std::vector<DenominatorFactor>& from, int sign) {
  for (const auto& f : from) {
    auto it = std::find_if(into.begin(), into.end(), [&](const DenominatorFactor& g) { return g.base == f.base; });
    if (it != into.end()) {
      it->twice_exponent += sign * f.twice_exponent;
    } else {
      into.push_back({f.name, f.base, sign * f.twice_exponent});
    }
  }
}

void require_same_level(const InvariantValue& a, const InvariantValue& b) {
  if (!(a.level == b.level))
    throw UsageError("invariants at different levels (k=" + std::to_string(a.level.k()) + " and k=" +
                     std::to_string(b.level.k()) + ") are incomparable");
}

}  // namespace

InvariantValue product(const InvariantValue& a, const InvariantValue& b) {
  require_same_level(a, b);
  InvariantValue out = a;
  out.numerator = a.numerator * b.numerator;
  merge_factors(out.denominator, b.denominator, 1);
  out.inertia = {a.inertia.b_plus + b.inertia.b_plus, a.inertia.b_minus + b.inertia.b_minus,
                 a.inertia.nullity + b.inertia.nullity};
  out.ordinary = a.ordinary + b.ordinary;
  out.special = a.special + b.special;
  out.approx = approximate(out.numerator, out.denominator);
  return out;
}

InvariantValue conj(const InvariantValue& v) {
  InvariantValue out = v;
  out.numerator = v.numerator.conj();
  for (auto& f : out.denominator) f.base = f.base.conj();
  out.approx = std::conj(v.approx);
  return out;
}

Comparison compare(const InvariantValue& a, const InvariantValue& b) {
  require_same_level(a, b);
  // a = b  <=>  a.num * prod base^{e_b} = b.num * prod base^{e_a}; the
  // common part of each exponent cancels.
  std::vector<DenominatorFactor> net;
  merge_factors(net, b.denominator, 1);
  merge_factors(net, a.denominator, -1);
  const bool odd = std::any_of(net.begin(), net.end(), [](const auto& f) { return f.twice_exponent % 2 != 0; });
  const unsigned scale = odd ? 2 : 1;  // compare squares when half powers survive
  CyclotomicNumber lhs = a.numerator.pow(scale);
  CyclotomicNumber rhs = b.numerator.pow(scale);
  for (const auto& f : net) {
    const unsigned e = static_cast<unsigned>(std::abs(f.twice_exponent)) * scale / 2;
    if (f.twice_exponent > 0) lhs *= f.base.pow(e);
    if (f.twice_exponent < 0) rhs *= f.base.pow(e);
  }
  return {lhs == rhs, odd};
}

}  // namespace qinv
