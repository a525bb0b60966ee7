#include "aci/edge_ideals.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "aci/errors.hpp"
#include "aci/groebner.hpp"

namespace aci {

using Edges = std::vector<std::pair<int, int>>;

Graph::Graph(int vertices, Edges edges) : n_(vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("graph has a loop at vertex " + std::to_string(u));
    if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("graph has a repeated edge");
  }
  auto deg = degrees();
  for (int v = 0; v < n_; ++v) {
    if (deg[v] == 0) throw std::invalid_argument("vertex " + std::to_string(v) + " is isolated");
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::string Graph::to_string() const {
  std::string s;
  for (const auto& [u, v] : edges_) {
    if (!s.empty()) s += ' ';
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

namespace {

// Connected components as vertex lists, each sorted.
std::vector<std::vector<int>> components(int n, const Edges& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [u, v] : edges) parent[find(u)] = find(v);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : by_root) out.push_back(std::move(vs));
  return out;
}

// Colour refinement seeded by degree. Colours are ranks of signatures, so
// they do not depend on the labeling.
std::vector<int> refine(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = static_cast<int>(adj[v].size());
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (int w : adj[v]) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (static_cast<int>(sorted.size()) == classes) return color;
    classes = static_cast<int>(sorted.size());
  }
}

// Smallest relabeled edge list of a connected graph over labelings that
// list colour classes in order.
Edges canonical_component(int n, const Edges& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color = refine(n, adj);
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  std::vector<std::vector<int>> order;
  for (auto& [c, vs] : cells) order.push_back(vs);

  Edges best;
  bool have = false;
  std::vector<int> label(n);
  auto evaluate = [&] {
    int next = 0;
    for (const auto& cell : order) {
      for (int v : cell) label[v] = next++;
    }
    Edges e;
    e.reserve(edges.size());
    for (const auto& [u, v] : edges) e.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
    std::sort(e.begin(), e.end());
    if (!have || e < best) {
      best = std::move(e);
      have = true;
    }
  };
  // Odometer over the permutations of every cell.
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == order.size()) {
      evaluate();
      return;
    }
    std::sort(order[k].begin(), order[k].end());
    do {
      walk(k + 1);
    } while (std::next_permutation(order[k].begin(), order[k].end()));
  };
  walk(0);
  return best;
}

}  // namespace

Graph canonical_form(const Graph& G) {
  std::vector<std::pair<int, Edges>> parts;
  for (const auto& comp : components(G.vertices(), G.edges())) {
    std::vector<int> local(G.vertices(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    Edges e;
    for (const auto& [u, v] : G.edges()) {
      if (local[u] >= 0) e.emplace_back(local[u], local[v]);
    }
    parts.emplace_back(static_cast<int>(comp.size()), canonical_component(static_cast<int>(comp.size()), e));
  }
  std::sort(parts.begin(), parts.end());
  Edges all;
  int offset = 0;
  for (const auto& [k, e] : parts) {
    for (const auto& [u, v] : e) all.emplace_back(u + offset, v + offset);
    offset += k;
  }
  return Graph(G.vertices(), std::move(all));
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.vertices() == b.vertices() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_graphs(int edges, int max_vertices) {
  if (edges < 1 || edges > kMaxCatalogEdges) {
    throw std::invalid_argument("graph enumeration supports 1 to " + std::to_string(kMaxCatalogEdges) +
                                " edges, got " + std::to_string(edges));
  }
  if (max_vertices < 0) max_vertices = 2 * edges;
  std::set<Graph> level{Graph(2, {{0, 1}})};
  for (int k = 2; k <= edges; ++k) {
    std::set<Graph> next;
    for (const auto& G : level) {
      const int n = G.vertices();
      std::set<std::pair<int, int>> present(G.edges().begin(), G.edges().end());
      auto extend = [&](int u, int v, int m) {
        if (m > max_vertices || present.count({u, v})) return;
        Edges e = G.edges();
        e.emplace_back(u, v);
        next.insert(canonical_form(Graph(m, std::move(e))));
      };
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) extend(u, v, n);
        extend(u, n, n + 1);
      }
      extend(n, n + 1, n + 2);
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& G : level) {
    if (G.vertices() <= max_vertices) out.push_back(G);
  }
  return out;
}

Ideal edge_ideal(const Graph& G, const PrimeField& field) {
  RingPtr ring = Ring::standard(G.vertices(), field);
  std::vector<Polynomial> gens;
  for (const auto& [u, v] : G.edges()) {
    gens.push_back(Polynomial::variable(ring, u) * Polynomial::variable(ring, v));
  }
  return Ideal(ring, std::move(gens));
}

Polarization polarize(const Ideal& M) {
  const RingPtr& ring = M.ring();
  const int n = ring->num_vars();
  std::vector<int> squared;
  for (const auto& f : M.gens()) {
    if (f.terms().size() != 1 || f.degree() != 2) {
      throw ComputationError("polarization expects quadratic monomials, got " + f.to_string());
    }
    const Monomial& m = f.lead_monomial();
    for (int i = 0; i < n; ++i) {
      if (m[i] == 2) squared.push_back(i);
    }
  }
  std::sort(squared.begin(), squared.end());
  squared.erase(std::unique(squared.begin(), squared.end()), squared.end());
  if (squared.empty()) return Polarization{M, {}};

  std::vector<std::string> names = ring->names();
  std::vector<int> partner(n, -1);
  for (int i : squared) {
    std::string name = ring->name(i) + "_";
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
    partner[i] = static_cast<int>(names.size());
    names.push_back(std::move(name));
  }
  RingPtr big = Ring::make(names, ring->field(), ring->order());
  std::vector<Polynomial> gens;
  for (const auto& f : M.gens()) {
    const Monomial& m = f.lead_monomial();
    Polynomial p = Polynomial::constant(big, 1);
    for (int i = 0; i < n; ++i) {
      if (m[i] == 2) {
        p = p * Polynomial::variable(big, i) * Polynomial::variable(big, partner[i]);
      } else if (m[i] == 1) {
        p = p * Polynomial::variable(big, i);
      }
    }
    gens.push_back(p);
  }
  Polarization out{Ideal(big, std::move(gens)), {}};
  for (int i : squared) {
    out.linear_forms.push_back(Polynomial::variable(big, i) - Polynomial::variable(big, partner[i]));
  }
  return out;
}

std::vector<BettiTable> HPolyCatalog::aci_tables() const {
  std::vector<BettiTable> out;
  for (const auto& e : entries) {
    if (e.aci && std::find(out.begin(), out.end(), e.betti) == out.end()) out.push_back(e.betti);
  }
  return out;
}

HPolyCatalog build_catalog(int edges) {
  HPolyCatalog cat;
  cat.edges = edges;
  for (const auto& G : enumerate_graphs(edges)) {
    Ideal I = edge_ideal(G);
    auto summary = summarize_resolution(I);
    CatalogEntry e;
    e.graph = G;
    e.betti = std::move(summary.betti);
    e.hpoly = std::move(summary.hilbert.h_polynomial);
    e.height = height(I);
    e.aci = e.height + 1 == edges;
    cat.by_hpoly.emplace(e.hpoly, cat.entries.size());
    cat.entries.push_back(std::move(e));
  }
  return cat;
}

}  // namespace aci
