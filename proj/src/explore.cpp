#include "dtwist/explore.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "dtwist/twist.hpp"

namespace dtwist {

namespace {

struct CodesHash {
  std::size_t operator()(const std::vector<std::uint8_t>& c) const noexcept {
    return static_cast<std::size_t>(hash_codes(c));
  }
};

using CodeIndex = std::unordered_map<std::vector<std::uint8_t>, std::size_t, CodesHash>;

// Runs f(i) for i in [0, n) on up to `threads` workers, in contiguous chunks.
template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::uint64_t enumerate(const Region& region, const std::function<bool(const Tiling&)>& sink) {
  if (region.size() % 2 != 0 || region.black_count() != region.white_count()) return 0;
  auto shared = std::make_shared<const Region>(region);
  const int n = static_cast<int>(region.size());
  std::vector<std::uint8_t> codes(region.size(), 0xFF);
  std::uint64_t count = 0;
  bool stop = false;

  auto rec = [&](auto&& self, int first) -> void {
    while (first < n && codes[static_cast<std::size_t>(first)] != 0xFF) ++first;
    if (first == n) {
      ++count;
      if (!sink(make_tiling_unchecked(shared, codes))) stop = true;
      return;
    }
    for (Dir d : kAxisDirs) {
      const int j = region.neighbor(first, d);
      if (j == Region::kNoCube || codes[static_cast<std::size_t>(j)] != 0xFF) continue;
      codes[static_cast<std::size_t>(first)] = static_cast<std::uint8_t>(d.index());
      codes[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((-d).index());
      self(self, first + 1);
      codes[static_cast<std::size_t>(first)] = 0xFF;
      codes[static_cast<std::size_t>(j)] = 0xFF;
      if (stop) return;
    }
  };
  if (n > 0) rec(rec, 0);
  return count;
}

std::vector<Tiling> enumerate_all(const Region& region, std::size_t limit) {
  std::vector<Tiling> out;
  enumerate(region, [&](const Tiling& t) {
    if (out.size() == limit) fail(ErrorCode::ResourceLimit, "region has more than " + std::to_string(limit) + " tilings");
    out.push_back(t);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------- counting

namespace {

// One transfer step at face cell f: bit i of a state marks face cell i as
// covered, meaning the current layer for i >= f and the next layer for i < f.
template <class Emit>
void step_cell(std::uint64_t s, int f, int width, int height, bool last_layer, Emit&& emit) {
  const std::uint64_t bit = 1ull << f;
  if (s & bit) {
    emit(s & ~bit);
    return;
  }
  if (!last_layer) emit(s | bit);
  const int a = f % width, b = f / width;
  if (a + 1 < width && !(s & (bit << 1))) emit(s | (bit << 1));
  if (b + 1 < height && !(s & (bit << width))) emit(s | (bit << width));
}

}  // namespace

BigInt count_box(int L, int M, int N, const CountOptions& opts) {
  if (L < 1 || M < 1 || N < 1) fail(ErrorCode::InvalidArgument, "box dimensions must be positive");
  if ((1LL * L * M * N) % 2 != 0) return 0;
  std::array<int, 3> dims{L, M, N};
  std::sort(dims.begin(), dims.end());
  const int width = dims[0], height = dims[1], layers = dims[2];
  const int face = width * height;
  if (face > opts.max_face || face > 63)
    fail(ErrorCode::ResourceLimit, "transfer face of " + std::to_string(face) + " cells exceeds the limit of " + std::to_string(opts.max_face));

  if (face <= 20) {
    const std::size_t nstates = std::size_t{1} << face;
    std::vector<BigInt> cur(nstates), nxt(nstates);
    cur[0] = 1;
    const int threads = std::max(1, opts.threads);
    std::vector<std::vector<BigInt>> partial(static_cast<std::size_t>(threads > 1 ? threads : 0), std::vector<BigInt>(threads > 1 ? nstates : 0));
    for (int layer = 0; layer < layers; ++layer) {
      const bool last = layer + 1 == layers;
      for (int f = 0; f < face; ++f) {
        if (threads == 1) {
          std::fill(nxt.begin(), nxt.end(), BigInt(0));
          for (std::size_t s = 0; s < nstates; ++s) {
            if (cur[s].is_zero()) continue;
            step_cell(s, f, width, height, last, [&](std::uint64_t t) { nxt[t] += cur[s]; });
          }
        } else {
          parallel_for(static_cast<std::size_t>(threads), threads, [&](std::size_t w) {
            auto& out = partial[w];
            std::fill(out.begin(), out.end(), BigInt(0));
            const std::size_t chunk = (nstates + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
            const std::size_t lo = w * chunk, hi = std::min(nstates, lo + chunk);
            for (std::size_t s = lo; s < hi; ++s) {
              if (cur[s].is_zero()) continue;
              step_cell(s, f, width, height, last, [&](std::uint64_t t) { out[t] += cur[s]; });
            }
          });
          parallel_for(nstates, threads, [&](std::size_t t) {
            BigInt sum = 0;
            for (const auto& out : partial) sum += out[t];
            nxt[t] = std::move(sum);
          });
        }
        std::swap(cur, nxt);
      }
    }
    return cur[0];
  }

  std::unordered_map<std::uint64_t, BigInt> cur{{0, 1}}, nxt;
  for (int layer = 0; layer < layers; ++layer) {
    const bool last = layer + 1 == layers;
    for (int f = 0; f < face; ++f) {
      nxt.clear();
      for (const auto& [s, c] : cur) step_cell(s, f, width, height, last, [&](std::uint64_t t) { nxt[t] += c; });
      std::swap(cur, nxt);
    }
  }
  auto it = cur.find(0);
  return it == cur.end() ? BigInt(0) : it->second;
}

// ---------------------------------------------------------------- components

ComponentReport flip_components(const Region& region, const ExploreOptions& opts) {
  ComponentReport rep;
  std::vector<Tiling> all;
  enumerate(region, [&](const Tiling& t) {
    if (all.size() == opts.limit) {
      rep.complete = false;
      return false;
    }
    all.push_back(t);
    return true;
  });
  rep.tilings = all.size();
  CodeIndex index;
  index.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].codes(), i);

  const bool cylinder = classify(region).is_cylinder();
  struct Local {
    std::optional<long long> twist;
    std::vector<std::size_t> flips;
    std::vector<std::pair<std::size_t, int>> trits;
  };
  std::vector<Local> local(all.size());
  parallel_for(all.size(), opts.threads, [&](std::size_t i) {
    const Tiling& t = all[i];
    Local& l = local[i];
    if (cylinder) l.twist = twist(t);
    for (const Flip& f : flips(t)) {
      auto it = index.find(apply_flip(t, f).codes());
      if (it != index.end()) l.flips.push_back(it->second);
    }
    for (const Trit& tr : trits(t)) {
      auto it = index.find(apply_trit(t, tr).codes());
      if (it != index.end()) l.trits.emplace_back(it->second, tr.sign);
    }
  });

  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j : local[i].flips) {
      if (cylinder && local[i].twist != local[j].twist) fail(ErrorCode::InvariantViolation, "a flip changed the twist");
      const std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    for (const auto& [j, sign] : local[i].trits)
      if (cylinder && *local[j].twist - *local[i].twist != sign) fail(ErrorCode::InvariantViolation, "a trit changed the twist by other than its sign");
  }

  std::unordered_map<std::size_t, std::size_t> comp_of_root;
  rep.component_of.resize(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::size_t r = find(i);
    auto [it, fresh] = comp_of_root.emplace(r, rep.components.size());
    if (fresh) rep.components.push_back(Component{0, local[i].twist, all[i]});
    ++rep.components[it->second].size;
    rep.component_of[i] = it->second;
    if (cylinder) rep.twist_histogram[*local[i].twist] += 1;
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& [j, sign] : local[i].trits)
      if (sign > 0) ++edges[{rep.component_of[i], rep.component_of[j]}];
  for (const auto& [k, n] : edges) rep.trit_edges.push_back({k.first, k.second, n});
  return rep;
}

std::map<long long, BigInt> twist_distribution(const Region& region, const ExploreOptions& opts) {
  if (!classify(region).is_cylinder()) fail(ErrorCode::UnsupportedRegion, "twist distribution needs a cylinder");
  std::map<long long, BigInt> h;
  std::size_t n = 0;
  enumerate(region, [&](const Tiling& t) {
    if (++n > opts.limit) fail(ErrorCode::ResourceLimit, "region has more than " + std::to_string(opts.limit) + " tilings");
    h[twist(t)] += 1;
    return true;
  });
  return h;
}

std::vector<Tiling> move_closure(const Tiling& t, bool with_trits, std::size_t limit) {
  std::unordered_set<std::vector<std::uint8_t>, CodesHash> seen{t.codes()};
  std::vector<Tiling> out{t};
  std::deque<Tiling> queue{t};
  auto visit = [&](const Tiling& n) {
    if (!seen.insert(n.codes()).second) return;
    if (out.size() == limit) fail(ErrorCode::ResourceLimit, "move closure exceeds " + std::to_string(limit) + " tilings");
    out.push_back(n);
    queue.push_back(n);
  };
  while (!queue.empty()) {
    const Tiling cur = queue.front();
    queue.pop_front();
    for (const Flip& f : flips(cur)) visit(apply_flip(cur, f));
    if (with_trits)
      for (const Trit& tr : trits(cur)) visit(apply_trit(cur, tr));
  }
  return out;
}

Tiling trit_greedy_walk(const Tiling& start, int direction, std::uint64_t seed, std::size_t steps) {
  std::mt19937_64 rng(seed);
  Tiling cur = start, best = start;
  long long tw = twist(start), best_tw = tw;
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<Trit> good;
    for (const Trit& tr : trits(cur))
      if (tr.sign == direction) good.push_back(tr);
    if (!good.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, good.size() - 1);
      cur = apply_trit(cur, good[pick(rng)]);
      tw += direction;
      if (direction * tw > direction * best_tw) {
        best = cur;
        best_tw = tw;
      }
      continue;
    }
    const auto fs = flips(cur);
    if (fs.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
    cur = apply_flip(cur, fs[pick(rng)]);
  }
  return best;
}

nlohmann::json histogram_json(const std::map<long long, BigInt>& h) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v.str();
  return out;
}

nlohmann::json to_json(const ComponentReport& report) {
  nlohmann::json comps = nlohmann::json::array();
  for (const Component& c : report.components) {
    nlohmann::json j{{"size", std::to_string(c.size)}};
    j["twist"] = c.twist ? nlohmann::json(*c.twist) : nlohmann::json(nullptr);
    comps.push_back(j);
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const TritEdge& e : report.trit_edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"count", std::to_string(e.count)}});
  return {{"tilings", std::to_string(report.tilings)},
          {"complete", report.complete},
          {"components", comps},
          {"trit_edges", edges},
          {"twist_histogram", histogram_json(report.twist_histogram)}};
}

}  // namespace dtwist
