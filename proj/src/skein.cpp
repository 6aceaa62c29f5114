#include "qinv/skein.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace qinv {

EvalLimits EvalLimits::from_env() {
  EvalLimits limits;
  auto read = [](const char* name, int& out) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      const long x = std::strtol(v, &end, 10);
      if (end != v && *end == '\0' && x > 0) out = static_cast<int>(x);
    }
  };
  read("QINV_MAX_CROSSINGS", limits.max_crossings);
  read("QINV_MAX_WIDTH", limits.max_width);
  return limits;
}

namespace detail {

void decode(MatchKey key, int width, Partners& partner) {
  std::array<std::int8_t, kMaxKeyWidth> stack{};
  int top = 0;
  for (int i = 0; i < width; ++i) {
    if ((key >> i) & 1u) {
      stack[top++] = static_cast<std::int8_t>(i);
    } else {
      const int j = stack[--top];
      partner[i] = static_cast<std::int8_t>(j);
      partner[j] = static_cast<std::int8_t>(i);
    }
  }
}

MatchKey encode(const Partners& partner, int width) {
  MatchKey key = 0;
  for (int i = 0; i < width; ++i)
    if (partner[i] > i) key |= MatchKey{1} << i;
  return key;
}

namespace {

MatchKey low_bits(MatchKey key, int n) { return n >= 64 ? key : key & ((MatchKey{1} << n) - 1); }
MatchKey high_bits(MatchKey key, int n) { return n >= 64 ? 0 : key >> n; }
MatchKey shift_up(MatchKey key, int n) { return n >= 64 ? 0 : key << n; }

}  // namespace

MatchKey cup_key(MatchKey key, int p) {
  return low_bits(key, p) | (MatchKey{1} << p) | shift_up(high_bits(key, p), p + 2);
}

MatchKey cap_key(MatchKey key, int width, int p, bool& loop) {
  Partners partner{};
  decode(key, width, partner);
  loop = partner[p] == p + 1;
  if (!loop) {
    const int a = partner[p], b = partner[p + 1];
    const int lo = std::min(a, b), hi = std::max(a, b);
    key |= MatchKey{1} << lo;
    key &= ~(MatchKey{1} << hi);
  }
  return low_bits(key, p) | shift_up(high_bits(key, p + 2), p);
}

}  // namespace detail

namespace {

struct UnionFind {
  std::vector<int> parent;
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

BracketValue bracket_statesum(const MorseWord& word, const EvalLimits& limits) {
  const int c = word.crossing_count();
  if (c > limits.max_crossings)
    throw CapacityError("state-sum engine: " + std::to_string(c) + " crossings exceed the cap of " +
                        std::to_string(limits.max_crossings) +
                        " (QINV_MAX_CROSSINGS); use the sweep engine for larger diagrams");

  const ArcTable arcs = build_arcs(word);
  const int segs = arcs.segment_count;

  // Cups and caps are shared by every state; their unions seed each state.
  UnionFind base{std::vector<int>(segs)};
  for (int i = 0; i < segs; ++i) base.parent[i] = i;
  int base_loops = segs;
  struct Crossing {
    int below0, below1, above0, above1, type;
  };
  std::vector<Crossing> crossings;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto& e = word.events()[i];
    const auto& s = arcs.slots[i];
    if (e.kind == EventKind::Cup) {
      base_loops -= base.unite(s.above[0], s.above[1]);
    } else if (e.kind == EventKind::Cap) {
      base_loops -= base.unite(s.below[0], s.below[1]);
    } else {
      crossings.push_back(
          {s.below[0], s.below[1], s.above[0], s.above[1], e.kind == EventKind::CrossPos ? 1 : -1});
    }
  }

  // histogram[(exponent + c) * (segs + 1) + loops]
  const std::size_t rows = static_cast<std::size_t>(2 * c + 1);
  const std::size_t cols = static_cast<std::size_t>(segs + 1);
  const std::uint64_t states = std::uint64_t{1} << c;
  const unsigned workers =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::thread::hardware_concurrency(),
                                                                               states / 4096 + 1)));
  std::vector<std::vector<std::uint64_t>> histograms(workers, std::vector<std::uint64_t>(rows * cols, 0));

  auto run = [&](unsigned worker) {
    auto& hist = histograms[worker];
    UnionFind uf{base.parent};
    for (std::uint64_t state = worker; state < states; state += workers) {
      uf.parent = base.parent;
      int loops = base_loops;
      int exponent = 0;
      for (int j = 0; j < c; ++j) {
        const auto& x = crossings[j];
        if ((state >> j) & 1u) {  // E smoothing
          exponent -= x.type;
          loops -= uf.unite(x.below0, x.below1);
          loops -= uf.unite(x.above0, x.above1);
        } else {
          exponent += x.type;
          loops -= uf.unite(x.below0, x.above0);
          loops -= uf.unite(x.below1, x.above1);
        }
      }
      ++hist[static_cast<std::size_t>(exponent + c) * cols + static_cast<std::size_t>(loops)];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  for (std::size_t l = 1; l < cols; ++l) delta_pow.push_back(delta_pow.back() * loop_value());
  LaurentPoly result;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t l = 0; l < cols; ++l) {
      std::uint64_t total = 0;
      for (const auto& h : histograms) total += h[r * cols + l];
      if (total == 0) continue;
      Integer count;
      mpz_import(count.get_mpz_t(), 1, 1, sizeof(total), 0, 0, &total);
      result += delta_pow[l].shifted(static_cast<int>(r) - c) * LaurentPoly::monomial(0, count);
    }
  }
  return {std::move(result), std::nullopt};
}

BracketValue bracket_sweep(const MorseWord& word, const EvalLimits& limits) {
  return {sweep_evaluate(word, GenericScalars{}, limits), std::nullopt};
}

BracketValue bracket(const MorseWord& word, Engine engine, const EvalLimits& limits) {
  return engine == Engine::StateSum ? bracket_statesum(word, limits) : bracket_sweep(word, limits);
}

}  // namespace qinv
