#pragma once

// Kauffman bracket of Morse diagrams.
//
//   <x+> = A <id> + A^-1 <E>,   <x-> = A^-1 <id> + A <E>,
//   <O D> = delta <D>,  delta = -A^2 - A^-2,   <empty> = 1,
//
// where id keeps the two strands vertical and E = cup(p) after cap(p).
// Two engines: a state sum over all 2^c smoothings, and a left-to-right
// sweep over non-crossing matchings (the Temperley-Lieb basis).

#include <algorithm>
#include <array>
#include <complex>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "qinv/diagram.hpp"
#include "qinv/errors.hpp"
#include "qinv/ring.hpp"

namespace qinv {

struct EvalLimits {
  int max_crossings = 22;  // state sum
  int max_width = 16;      // sweep

  /// Defaults overridden by QINV_MAX_CROSSINGS / QINV_MAX_WIDTH.
  static EvalLimits from_env();
};

enum class Engine { StateSum, Sweep };

struct BracketValue {
  LaurentPoly generic;
  std::optional<CyclotomicNumber> specialized;
};

BracketValue bracket_statesum(const MorseWord& word, const EvalLimits& limits = {});
BracketValue bracket_sweep(const MorseWord& word, const EvalLimits& limits = {});
BracketValue bracket(const MorseWord& word, Engine engine, const EvalLimits& limits = {});

// ---------------------------------------------------------------- sweep engine

/// Scalar ring for the sweep: one() and multiplication by A^j.
template <class S>
concept SweepScalars = requires(const S& s, const typename S::value_type& x) {
  { s.one() } -> std::convertible_to<typename S::value_type>;
  { s.shift(x, 1) } -> std::convertible_to<typename S::value_type>;
};

struct GenericScalars {
  using value_type = LaurentPoly;
  value_type one() const { return LaurentPoly(1); }
  value_type shift(const value_type& x, int j) const { return x.shifted(j); }
};

/// A -> zeta at a fixed level, accumulating in Z[x]/(x^{4k}-1).
struct LevelScalars {
  Level level;
  using value_type = CyclicPoly;
  value_type one() const { return CyclicPoly::monomial(level, 0); }
  value_type shift(const value_type& x, int j) const { return x.shifted(j); }
};

/// Floating point A.
struct ComplexScalars {
  std::complex<double> a;
  using value_type = std::complex<double>;
  value_type one() const { return 1.0; }
  value_type shift(const value_type& x, int j) const { return x * std::pow(a, j); }
};

namespace detail {

// Non-crossing matching of the open strand ends, bit i set when strand i is
// matched to a strand on its right.
using MatchKey = std::uint64_t;
constexpr int kMaxKeyWidth = 64;
using Partners = std::array<std::int8_t, kMaxKeyWidth>;

void decode(MatchKey key, int width, Partners& partner);
MatchKey encode(const Partners& partner, int width);
MatchKey cup_key(MatchKey key, int p);
/// Cap at p: returns the new key and whether a closed loop was removed.
MatchKey cap_key(MatchKey key, int width, int p, bool& loop);

}  // namespace detail

/// Sweep evaluation over any SweepScalars ring.
template <SweepScalars S>
typename S::value_type sweep_evaluate(const MorseWord& word, const S& scalars, const EvalLimits& limits = {}) {
  using V = typename S::value_type;
  using detail::MatchKey;
  const int cap = std::min(limits.max_width, detail::kMaxKeyWidth);
  if (word.max_width() > cap)
    throw CapacityError("sweep engine: diagram width " + std::to_string(word.max_width()) +
                        " exceeds the cap of " + std::to_string(cap) + " strands (QINV_MAX_WIDTH)");

  auto times_delta = [&](const V& v) {
    V out = scalars.shift(v, 2);
    out += scalars.shift(v, -2);
    return -out;
  };
  auto accumulate = [](std::unordered_map<MatchKey, V>& m, MatchKey k, V v) {
    auto [it, fresh] = m.try_emplace(k, std::move(v));
    if (!fresh) it->second += v;
  };

  std::unordered_map<MatchKey, V> states;
  states.emplace(MatchKey{0}, scalars.one());
  int width = 0;
  for (const auto& e : word.events()) {
    std::unordered_map<MatchKey, V> next;
    next.reserve(states.size() * 2);
    switch (e.kind) {
      case EventKind::Cup:
        for (auto& [key, v] : states) accumulate(next, detail::cup_key(key, e.position), std::move(v));
        width += 2;
        break;
      case EventKind::Cap:
        for (auto& [key, v] : states) {
          bool loop = false;
          const MatchKey k = detail::cap_key(key, width, e.position, loop);
          accumulate(next, k, loop ? times_delta(v) : std::move(v));
        }
        width -= 2;
        break;
      case EventKind::CrossPos:
      case EventKind::CrossNeg: {
        const int s = e.kind == EventKind::CrossPos ? 1 : -1;
        for (auto& [key, v] : states) {
          bool loop = false;
          const MatchKey ek = detail::cup_key(detail::cap_key(key, width, e.position, loop), e.position);
          V smoothed = scalars.shift(v, -s);
          accumulate(next, ek, loop ? times_delta(smoothed) : std::move(smoothed));
          accumulate(next, key, scalars.shift(v, s));
        }
        break;
      }
    }
    states = std::move(next);
  }
  auto it = states.find(MatchKey{0});
  if (it != states.end()) return it->second;
  V zero = scalars.one();
  zero -= scalars.one();
  return zero;
}

}  // namespace qinv
