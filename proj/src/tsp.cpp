#include "atsp/tsp.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "atsp/error.h"
#include "atsp/hatgraph.h"

namespace atsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_symmetric(const WeightMatrix& w) {
  double scale = 1.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      scale = std::max(scale, std::abs(w(i, j)));
    }
  }
  if (!w.is_symmetric(1e-12 * scale)) {
    throw InvalidArgument("weight matrix is not symmetric");
  }
}

void require_metric(const WeightMatrix& w) {
  const auto report = verify_metric(w);
  if (!report.is_metric()) {
    throw InvalidArgument("weight matrix is not a metric: " +
                          report.violations.front().describe());
  }
}

TspTour finish(const WeightMatrix& w, std::vector<std::size_t> seq) {
  TspTour t;
  t.ordering = Ordering::cycle(std::move(seq));
  t.weight = cycle_weight(w, t.ordering.sequence());
  return t;
}

}  // namespace

TspTour held_karp_tsp(const WeightMatrix& w) {
  const std::size_t n = w.size();
  if (n > kHeldKarpMaxNodes) {
    throw TooLarge("held-karp guard: " + std::to_string(n) + " nodes exceeds " +
                   std::to_string(kHeldKarpMaxNodes));
  }
  require_symmetric(w);
  if (n <= 3) return finish(w, Ordering::identity(n).sequence());

  // Vertex v >= 1 is bit v-1; dp[mask][v] is the cheapest path from 0 through
  // exactly `mask`, ending at v.
  const std::size_t m = n - 1;
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<double> dp((full + 1) * n, kInf);
  std::vector<std::uint8_t> parent((full + 1) * n, 0);
  const auto at = [n](std::size_t mask, std::size_t v) { return mask * n + v; };

  for (std::size_t v = 1; v < n; ++v) {
    dp[at(std::size_t{1} << (v - 1), v)] = w(0, v);
  }
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t v = 1; v < n; ++v) {
      const std::size_t vbit = std::size_t{1} << (v - 1);
      if (!(mask & vbit)) continue;
      const double base = dp[at(mask, v)];
      if (base == kInf) continue;
      for (std::size_t u = 1; u < n; ++u) {
        const std::size_t ubit = std::size_t{1} << (u - 1);
        if (mask & ubit) continue;
        const double cand = base + w(v, u);
        auto& slot = dp[at(mask | ubit, u)];
        if (cand < slot) {
          slot = cand;
          parent[at(mask | ubit, u)] = static_cast<std::uint8_t>(v);
        }
      }
    }
  }

  double best = kInf;
  std::size_t last = 1;
  for (std::size_t v = 1; v < n; ++v) {
    const double cand = dp[at(full, v)] + w(v, 0);
    if (cand < best) {
      best = cand;
      last = v;
    }
  }

  std::vector<std::size_t> seq;
  seq.reserve(n);
  std::size_t mask = full;
  std::size_t v = last;
  while (v != 0) {
    seq.push_back(v);
    const std::size_t prev = parent[at(mask, v)];
    mask &= ~(std::size_t{1} << (v - 1));
    v = prev;
  }
  seq.push_back(0);
  std::reverse(seq.begin(), seq.end());
  return finish(w, std::move(seq));
}

std::vector<std::size_t> prim_mst(const WeightMatrix& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> parent(n, 0);
  if (n == 0) return parent;
  std::vector<double> key(n, kInf);
  std::vector<bool> in_tree(n, false);
  key[0] = 0.0;
  for (std::size_t iter = 0; iter < n; ++iter) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (u == n || key[v] < key[u])) u = v;
    }
    in_tree[u] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && w(u, v) < key[v]) {
        key[v] = w(u, v);
        parent[v] = u;
      }
    }
  }
  return parent;
}

TspTour mst_double_tsp(const WeightMatrix& w) {
  const std::size_t n = w.size();
  require_symmetric(w);
  require_metric(w);
  if (n <= 3) return finish(w, Ordering::identity(n).sequence());

  const auto parent = prim_mst(w);
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t v = 1; v < n; ++v) children[parent[v]].push_back(v);

  std::vector<std::size_t> seq;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    seq.push_back(u);
    for (auto it = children[u].rbegin(); it != children[u].rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return finish(w, std::move(seq));
}

std::vector<std::pair<std::size_t, std::size_t>> min_weight_perfect_matching(
    const WeightMatrix& w, const std::vector<std::size_t>& vertices) {
  const std::size_t q = vertices.size();
  if (q % 2 != 0) {
    throw InvalidArgument("perfect matching needs an even vertex count");
  }
  if (q > kMatchingMaxOdd) {
    throw TooLarge("matching guard: " + std::to_string(q) +
                   " odd-degree vertices exceeds " +
                   std::to_string(kMatchingMaxOdd));
  }
  if (q == 0) return {};

  // cost[S] = cheapest perfect matching of subset S; the lowest member of S
  // is paired with partner[S].
  const std::uint32_t full = (std::uint32_t{1} << q) - 1;
  std::vector<double> cost(std::size_t{full} + 1, kInf);
  std::vector<std::uint8_t> partner(std::size_t{full} + 1, 0);
  cost[0] = 0.0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (std::popcount(s) % 2 != 0) continue;
    const int i = std::countr_zero(s);
    const std::uint32_t rest = s & ~(std::uint32_t{1} << i);
    double best = kInf;
    std::uint8_t arg = 0;
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      const int j = std::countr_zero(r);
      const double c = w(vertices[i], vertices[j]) +
                       cost[rest & ~(std::uint32_t{1} << j)];
      if (c < best) {
        best = c;
        arg = static_cast<std::uint8_t>(j);
      }
    }
    cost[s] = best;
    partner[s] = arg;
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::uint32_t s = full; s != 0;) {
    const int i = std::countr_zero(s);
    const int j = partner[s];
    pairs.emplace_back(vertices[i], vertices[j]);
    s &= ~((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
  }
  return pairs;
}

TspTour christofides_tsp(const WeightMatrix& w) {
  const std::size_t n = w.size();
  require_symmetric(w);
  require_metric(w);
  if (n <= 3) return finish(w, Ordering::identity(n).sequence());

  const auto parent = prim_mst(w);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
    ++degree[v];
    ++degree[parent[v]];
  }
  std::sort(edges.begin(), edges.end());

  std::vector<std::size_t> odd;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] % 2 == 1) odd.push_back(v);
  }
  for (const auto& e : min_weight_perfect_matching(w, odd)) edges.push_back(e);

  // Hierholzer on the multigraph, starting at 0; adjacency in edge order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].emplace_back(edges[e].second, e);
    adj[edges[e].second].emplace_back(edges[e].first, e);
  }
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> next_slot(n, 0);
  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> circuit;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    auto& slot = next_slot[u];
    while (slot < adj[u].size() && used[adj[u][slot].second]) ++slot;
    if (slot == adj[u].size()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      used[adj[u][slot].second] = true;
      stack.push_back(adj[u][slot].first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  std::vector<bool> seen(n, false);
  std::vector<std::size_t> seq;
  for (auto v : circuit) {
    if (!seen[v]) {
      seen[v] = true;
      seq.push_back(v);
    }
  }
  return finish(w, std::move(seq));
}

}  // namespace atsp
