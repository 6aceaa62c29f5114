#pragma once

// Independent reference computations for the test suites.  Nothing here
// calls the engines under test.

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "qinv/diagram.hpp"
#include "qinv/ring.hpp"

namespace oracle {

/// Phi_m from its complex roots, coefficients rounded.
inline std::vector<long> cyclotomic(int m) {
  std::vector<std::complex<double>> p{1.0};  // ascending powers
  for (int j = 1; j <= m; ++j) {
    if (std::gcd(j, m) != 1) continue;
    const std::complex<double> r = std::polar(1.0, 2 * M_PI * j / m);
    std::vector<std::complex<double>> q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= r * p[i];
    }
    p = q;
  }
  std::vector<long> out;
  for (auto c : p) out.push_back(std::lround(c.real()));
  return out;
}

/// (-1)^n sin((n+1) pi / k) / sin(pi / k).
inline double quantum_dim(int n, int k) {
  return (n % 2 ? -1.0 : 1.0) * std::sin((n + 1) * M_PI / k) / std::sin(M_PI / k);
}

/// Brute-force bracket: every smoothing, loops counted by union-find on
/// segment ends.  x+ = A id + A^-1 E, x- = A^-1 id + A E.
inline qinv::LaurentPoly bracket(const qinv::MorseWord& w) {
  using qinv::EventKind;
  // Label segments by walking the word.
  std::vector<int> strands;
  int next = 0;
  struct Ev {
    EventKind kind;
    int below[2] = {-1, -1}, above[2] = {-1, -1};
  };
  std::vector<Ev> evs;
  for (const auto& e : w.events()) {
    Ev v{e.kind};
    const int p = e.position;
    if (e.kind == EventKind::Cup) {
      v.above[0] = next++;
      v.above[1] = next++;
      strands.insert(strands.begin() + p, {v.above[0], v.above[1]});
    } else if (e.kind == EventKind::Cap) {
      v.below[0] = strands[p];
      v.below[1] = strands[p + 1];
      strands.erase(strands.begin() + p, strands.begin() + p + 2);
    } else {
      v.below[0] = strands[p];
      v.below[1] = strands[p + 1];
      // after the crossing the strand at p continues at p+1 and vice versa
      v.above[0] = next++;  // at p
      v.above[1] = next++;  // at p+1
      strands[p] = v.above[0];
      strands[p + 1] = v.above[1];
    }
    evs.push_back(v);
  }
  std::vector<int> crossings;
  for (std::size_t i = 0; i < evs.size(); ++i)
    if (evs[i].kind == EventKind::CrossPos || evs[i].kind == EventKind::CrossNeg) crossings.push_back(int(i));
  const int c = static_cast<int>(crossings.size());
  const qinv::LaurentPoly delta = qinv::LaurentPoly::monomial(2, -1) + qinv::LaurentPoly::monomial(-2, -1);
  qinv::LaurentPoly total;
  for (long s = 0; s < (1L << c); ++s) {
    std::vector<int> parent(next);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    int exponent = 0, ci = 0;
    for (const auto& v : evs) {
      if (v.kind == EventKind::Cup) {
        join(v.above[0], v.above[1]);
        continue;
      }
      if (v.kind == EventKind::Cap) {
        join(v.below[0], v.below[1]);
        continue;
      }
      const bool identity = (s >> ci++) & 1;
      const bool pos = v.kind == EventKind::CrossPos;
      if (identity) {
        join(v.below[0], v.above[0]);
        join(v.below[1], v.above[1]);
        exponent += pos ? 1 : -1;
      } else {
        join(v.below[0], v.below[1]);
        join(v.above[0], v.above[1]);
        exponent += pos ? -1 : 1;
      }
    }
    int loops = 0;
    for (int i = 0; i < next; ++i) loops += find(i) == i;
    total += qinv::LaurentPoly::monomial(exponent) * delta.pow(loops);
  }
  return total;
}

}  // namespace oracle
