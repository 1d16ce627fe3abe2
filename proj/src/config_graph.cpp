#include "curvesos/config_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "curvesos/error.hpp"

namespace curvesos {

std::vector<std::pair<int, std::vector<int>>> subset_edges(const CurveConfiguration& config,
                                                           const std::vector<int>& subset) {
  std::set<int> in(subset.begin(), subset.end());
  std::vector<std::pair<int, std::vector<int>>> out;
  for (const auto& p : config.points) {
    std::vector<int> cs;
    for (int c : p.components)
      if (in.count(c)) cs.push_back(c);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    if (cs.size() >= 2) out.emplace_back(p.id, std::move(cs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Bipartite incidence graph: component nodes first, then point nodes.
struct Incidence {
  std::vector<int> comp_ids;
  std::vector<int> point_ids;
  std::vector<std::vector<int>> adj;
  int num_comps() const { return static_cast<int>(comp_ids.size()); }
};

Incidence build_incidence(const CurveConfiguration& config, const std::vector<int>& subset) {
  if (subset.empty()) fail(ErrorCode::PreconditionViolated, "empty component subset");
  Incidence g;
  g.comp_ids = subset;
  std::sort(g.comp_ids.begin(), g.comp_ids.end());
  g.comp_ids.erase(std::unique(g.comp_ids.begin(), g.comp_ids.end()), g.comp_ids.end());
  for (int c : g.comp_ids)
    if (!config.has_component(c)) fail(ErrorCode::InvalidInput, "unknown component " + std::to_string(c));
  auto edges = subset_edges(config, g.comp_ids);
  g.adj.resize(g.comp_ids.size() + edges.size());
  for (size_t k = 0; k < edges.size(); ++k) {
    int pnode = static_cast<int>(g.comp_ids.size() + k);
    g.point_ids.push_back(edges[k].first);
    for (int c : edges[k].second) {
      int cnode = static_cast<int>(std::lower_bound(g.comp_ids.begin(), g.comp_ids.end(), c) - g.comp_ids.begin());
      g.adj[cnode].push_back(pnode);
      g.adj[pnode].push_back(cnode);
    }
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

std::optional<GraphCycle> find_cycle(const Incidence& g) {
  const int n = static_cast<int>(g.adj.size());
  std::vector<int> parent(n, -1), state(n, 0);
  std::vector<int> found;
  std::function<bool(int)> dfs = [&](int u) {
    state[u] = 1;
    for (int v : g.adj[u]) {
      if (v == parent[u]) continue;
      if (state[v] == 1) {
        for (int w = u; w != v; w = parent[w]) found.push_back(w);
        found.push_back(v);
        std::reverse(found.begin(), found.end());
        return true;
      }
      if (state[v] == 0) {
        parent[v] = u;
        if (dfs(v)) return true;
      }
    }
    state[u] = 2;
    return false;
  };
  for (int s = 0; s < n; ++s)
    if (state[s] == 0 && dfs(s)) break;
  if (found.empty()) return std::nullopt;
  // Rotate to start at the smallest component node, then pick the lexicographically smaller direction.
  auto start = std::min_element(found.begin(), found.end(), [&](int a, int b) {
    bool ca = a < g.num_comps(), cb = b < g.num_comps();
    if (ca != cb) return ca;
    return a < b;
  });
  std::rotate(found.begin(), start, found.end());
  if (found.size() > 2 && found.back() < found[1]) std::reverse(found.begin() + 1, found.end());
  GraphCycle cyc;
  for (size_t i = 0; i < found.size(); ++i) {
    if (i % 2 == 0)
      cyc.components.push_back(g.comp_ids[found[i]]);
    else
      cyc.points.push_back(g.point_ids[found[i] - g.num_comps()]);
  }
  return cyc;
}

}  // namespace

ForestResult is_forest(const CurveConfiguration& config, const std::vector<int>& subset) {
  Incidence g = build_incidence(config, subset);
  ForestResult r;
  r.cycle = find_cycle(g);
  r.forest = !r.cycle.has_value();
  return r;
}

AttachmentResult attachment_order(const CurveConfiguration& config, const std::vector<int>& subset) {
  Incidence g = build_incidence(config, subset);
  const int nc = g.num_comps();
  std::vector<bool> alive(nc, true);
  std::vector<int> removed;
  std::vector<std::optional<int>> via;
  for (int round = 0; round < nc; ++round) {
    int pick = -1;
    std::optional<int> pick_point;
    for (int c = 0; c < nc && pick < 0; ++c) {
      if (!alive[c]) continue;
      int meets = 0;
      std::optional<int> last;
      for (int p : g.adj[c]) {
        bool other = false;
        for (int d : g.adj[p])
          if (d != c && alive[d]) other = true;
        if (other) {
          ++meets;
          last = g.point_ids[p - nc];
        }
      }
      if (meets <= 1) {
        pick = c;
        pick_point = last;
      }
    }
    if (pick < 0) {
      AttachmentResult r;
      r.cycle = find_cycle(g);
      return r;
    }
    alive[pick] = false;
    removed.push_back(g.comp_ids[pick]);
    via.push_back(pick_point);
  }
  std::reverse(removed.begin(), removed.end());
  std::reverse(via.begin(), via.end());
  AttachmentResult r;
  r.order = AttachmentOrder{removed, via};
  return r;
}

bool is_valid_attachment_order(const CurveConfiguration& config, const std::vector<int>& order) {
  auto edges = subset_edges(config, order);
  for (size_t i = 1; i < order.size(); ++i) {
    std::set<int> before(order.begin(), order.begin() + i);
    int meets = 0;
    for (const auto& [pid, cs] : edges) {
      bool has_self = std::find(cs.begin(), cs.end(), order[i]) != cs.end();
      bool has_before = false;
      for (int c : cs)
        if (before.count(c)) has_before = true;
      if (has_self && has_before) ++meets;
    }
    if (meets > 1) return false;
  }
  return true;
}

CPrime extract_C_prime(const CurveConfiguration& config) {
  CPrime out;
  for (const auto& c : config.components) {
    switch (c.bounded_ring_trivial) {
      case Tri::Yes: out.yes.push_back(c.id); break;
      case Tri::No: out.no.push_back(c.id); break;
      case Tri::Unknown: out.unknown.push_back(c.id); break;
    }
  }
  return out;
}

std::vector<ConnectedPiece> connectivity_report(const CurveConfiguration& config) {
  std::vector<int> ids = config.component_ids();
  std::sort(ids.begin(), ids.end());
  std::vector<int> parent(ids.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  auto index = [&](int id) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  for (const auto& p : config.points)
    for (size_t k = 1; k < p.components.size(); ++k)
      parent[find(index(p.components[k]))] = find(index(p.components[0]));
  std::map<int, ConnectedPiece> pieces;
  for (size_t i = 0; i < ids.size(); ++i) pieces[find(static_cast<int>(i))].components.push_back(ids[i]);
  std::vector<ConnectedPiece> out;
  for (auto& [root, piece] : pieces) {
    bool all_yes = true, any_no = false;
    for (int c : piece.components) {
      Tri b = config.component(c).bounded_ring_trivial;
      all_yes = all_yes && b == Tri::Yes;
      any_no = any_no || b == Tri::No;
    }
    piece.bounded_ring_trivial = all_yes ? Tri::Yes : (any_no ? Tri::No : Tri::Unknown);
    out.push_back(std::move(piece));
  }
  std::sort(out.begin(), out.end(),
            [](const ConnectedPiece& a, const ConnectedPiece& b) { return a.components < b.components; });
  return out;
}

}  // namespace curvesos
