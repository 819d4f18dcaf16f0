#include "dtwist/construct.hpp"

#include <algorithm>
#include <queue>

namespace dtwist {

bool BicoloredGraph::balanced() const {
  long long s = 0;
  for (int c : color) s += c;
  return s == 0;
}

bool BicoloredGraph::connected() const {
  if (color.empty()) return false;
  std::vector<char> seen(size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t n = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      ++n;
      stack.push_back(w);
    }
  }
  return n == size();
}

BicoloredGraph associated_graph(const Region& region) {
  BicoloredGraph g;
  g.color.resize(region.size());
  g.adj.resize(region.size());
  for (int i = 0; i < static_cast<int>(region.size()); ++i) {
    g.color[static_cast<std::size_t>(i)] = region.cube(i).color();
    for (Dir d : kAllDirs) {
      const int j = region.neighbor(i, d);
      if (j != Region::kNoCube) g.adj[static_cast<std::size_t>(i)].push_back(j);
    }
    std::sort(g.adj[static_cast<std::size_t>(i)].begin(), g.adj[static_cast<std::size_t>(i)].end());
  }
  return g;
}

BicoloredGraph associated_graph(const PlanarRegion& base) {
  BicoloredGraph g;
  const auto& sq = base.squares;
  g.color.resize(sq.size());
  g.adj.resize(sq.size());
  for (std::size_t i = 0; i < sq.size(); ++i) {
    g.color[i] = base.color(sq[i]);
    const auto [u, v] = sq[i];
    for (auto n : {std::pair{u - 1, v}, std::pair{u + 1, v}, std::pair{u, v - 1}, std::pair{u, v + 1}}) {
      auto it = std::lower_bound(sq.begin(), sq.end(), n);
      if (it != sq.end() && *it == n) g.adj[i].push_back(static_cast<int>(it - sq.begin()));
    }
    std::sort(g.adj[i].begin(), g.adj[i].end());
  }
  return g;
}

namespace {

void check(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvariantViolation, std::string("tree matching: ") + what);
}

ProductEdge edge(int v, int lv, int w, int lw) { return {{v, lv}, {w, lw}}; }

}  // namespace

std::vector<ProductEdge> tree_matching(const BicoloredGraph& g, MatchingTrace* trace) {
  if (g.size() == 0 || !g.connected()) fail(ErrorCode::InvalidArgument, "graph must be nonempty and connected");
  if (!g.balanced()) fail(ErrorCode::InvalidArgument, "graph must be balanced");
  const int nv = static_cast<int>(g.size());

  // Breadth-first spanning tree from vertex 0.
  std::vector<std::vector<int>> tree(g.size());
  std::vector<std::pair<int, int>> tree_edges;
  {
    std::vector<char> seen(g.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.adj[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        tree[static_cast<std::size_t>(v)].push_back(w);
        tree[static_cast<std::size_t>(w)].push_back(v);
        tree_edges.emplace_back(std::min(v, w), std::max(v, w));
        q.push(w);
      }
    }
  }
  if (trace) trace->tree = tree_edges;

  std::vector<char> alive(g.size(), 1);  // membership in T_k
  std::vector<ProductEdge> m;
  const int n = nv / 2;
  for (int k = 0; k < n; ++k) {
    // Leaves of T_k, and the balance of T_k.
    int white_leaf = -1, black_leaf = -1, balance = 0, count = 0;
    for (int v = 0; v < nv; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      ++count;
      balance += g.color[static_cast<std::size_t>(v)];
      int deg = 0;
      for (int w : tree[static_cast<std::size_t>(v)]) deg += alive[static_cast<std::size_t>(w)];
      if (deg != 1) continue;
      if (g.color[static_cast<std::size_t>(v)] < 0 && white_leaf < 0) white_leaf = v;
      if (g.color[static_cast<std::size_t>(v)] > 0 && black_leaf < 0) black_leaf = v;
    }
    check(count == 2 * (n - k), "T_k has the wrong size");
    check(balance == 0, "T_k is not balanced");
    check(white_leaf >= 0 && black_leaf >= 0, "T_k lacks a white or a black leaf");

    // Tree path from the white leaf to the black leaf inside T_k.
    std::vector<int> parent(g.size(), -1);
    std::queue<int> q;
    q.push(white_leaf);
    parent[static_cast<std::size_t>(white_leaf)] = white_leaf;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : tree[static_cast<std::size_t>(v)]) {
        if (!alive[static_cast<std::size_t>(w)] || parent[static_cast<std::size_t>(w)] >= 0) continue;
        parent[static_cast<std::size_t>(w)] = v;
        q.push(w);
      }
    }
    check(parent[static_cast<std::size_t>(black_leaf)] >= 0, "T_k is disconnected");
    std::vector<int> path;
    for (int v = black_leaf; v != white_leaf; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    path.push_back(white_leaf);
    std::reverse(path.begin(), path.end());
    check(path.size() % 2 == 0, "path has odd length");

    MatchingStep step;
    step.white_leaf = white_leaf;
    step.black_leaf = black_leaf;
    step.path = path;
    std::vector<char> on_path(g.size(), 0);
    for (int v : path) on_path[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < nv; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) {
        step.d.push_back(edge(v, 2 * k - 1, v, 2 * k));
      } else if (!on_path[static_cast<std::size_t>(v)]) {
        step.d.push_back(edge(v, 2 * k, v, 2 * k + 1));
      }
    }
    const std::size_t half = path.size() / 2;
    for (std::size_t i = 0; i < half; ++i) step.e.push_back(edge(path[2 * i], 2 * k, path[2 * i + 1], 2 * k));
    for (std::size_t i = 0; i + 1 < half; ++i) step.e.push_back(edge(path[2 * i + 1], 2 * k + 1, path[2 * i + 2], 2 * k + 1));

    m.insert(m.end(), step.d.begin(), step.d.end());
    m.insert(m.end(), step.e.begin(), step.e.end());
    alive[static_cast<std::size_t>(white_leaf)] = 0;
    alive[static_cast<std::size_t>(black_leaf)] = 0;
    if (trace) trace->steps.push_back(std::move(step));
  }

  // Perfect matching of G x I_{2n-1}.
  const int layers = 2 * n - 1;
  std::vector<int> cover(static_cast<std::size_t>(nv * layers), 0);
  for (const auto& [a, b] : m) {
    for (const auto& [v, l] : {a, b}) {
      check(l >= 0 && l < layers, "edge leaves the product graph");
      ++cover[static_cast<std::size_t>(l * nv + v)];
    }
  }
  check(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }), "not a perfect matching");
  return m;
}

Tiling algorithm1(const PlanarRegion& base, Dir w, MatchingTrace* trace) {
  if (w.axis() != base.axis) fail(ErrorCode::InvalidArgument, "w must be normal to the base plane");
  const BicoloredGraph g = associated_graph(base);
  if (g.size() == 0 || !g.connected()) fail(ErrorCode::InvalidArgument, "base must be nonempty with connected interior");
  if (!g.balanced()) fail(ErrorCode::InvalidArgument, "base must have as many black as white squares");
  // Layer j of the cylinder is the slab at depth j in direction w.
  auto cube = [&](int v, int layer) {
    return base.cube_at(base.squares[static_cast<std::size_t>(v)], w.sign() > 0 ? layer : -1 - layer);
  };
  BicoloredGraph gw = g;
  for (std::size_t v = 0; v < gw.size(); ++v) gw.color[v] = cube(static_cast<int>(v), 0).color();
  const auto m = tree_matching(gw, trace);
  std::vector<Domino> dominoes;
  std::vector<Cube> cubes;
  for (const auto& [a, b] : m) {
    const Cube ca = cube(a.first, a.second), cb = cube(b.first, b.second);
    dominoes.push_back(Domino::from_cubes(ca, cb));
    cubes.push_back(ca);
    cubes.push_back(cb);
  }
  return validate(Region::from_unique(std::move(cubes)), dominoes);
}

std::optional<Tiling> find_tiling(const Region& region, long long node_limit) {
  if (region.size() % 2 != 0 || region.black_count() != region.white_count()) return std::nullopt;
  auto shared = std::make_shared<const Region>(region);
  const int n = static_cast<int>(region.size());
  std::vector<std::uint8_t> codes(region.size(), 0xFF);
  long long nodes = 0;

  auto free_degree = [&](int i) {
    int deg = 0;
    for (Dir d : kAllDirs) {
      const int j = region.neighbor(i, d);
      if (j != Region::kNoCube && codes[static_cast<std::size_t>(j)] == 0xFF) ++deg;
    }
    return deg;
  };

  auto solve = [&](auto&& self, int remaining) -> bool {
    if (remaining == 0) return true;
    if (node_limit >= 0 && ++nodes > node_limit) fail(ErrorCode::ResourceLimit, "tiling search exceeded its node budget");
    int best = -1, best_deg = 7;
    for (int i = 0; i < n; ++i) {
      if (codes[static_cast<std::size_t>(i)] != 0xFF) continue;
      const int deg = free_degree(i);
      if (deg < best_deg) {
        best = i;
        best_deg = deg;
        if (deg <= 1) break;
      }
    }
    if (best_deg == 0) return false;
    for (Dir d : kAllDirs) {
      const int j = region.neighbor(best, d);
      if (j == Region::kNoCube || codes[static_cast<std::size_t>(j)] != 0xFF) continue;
      codes[static_cast<std::size_t>(best)] = static_cast<std::uint8_t>(d.index());
      codes[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((-d).index());
      if (self(self, remaining - 2)) return true;
      codes[static_cast<std::size_t>(best)] = 0xFF;
      codes[static_cast<std::size_t>(j)] = 0xFF;
    }
    return false;
  };
  if (!solve(solve, n)) return std::nullopt;
  return make_tiling_unchecked(std::move(shared), std::move(codes));
}

bool is_tileable(const Region& region, Tiling* witness) {
  auto t = find_tiling(region);
  if (t && witness) *witness = *t;
  return t.has_value();
}

}  // namespace dtwist
