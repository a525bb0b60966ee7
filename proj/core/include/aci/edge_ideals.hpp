#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aci/resolution.hpp"

namespace aci {

/// Simple graph on vertices 0..vertices-1 without isolated vertices. Edges
/// are stored as (u, v) with u < v, sorted.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, repeated edges, out-of-range or
  /// isolated vertices.
  Graph(int vertices, std::vector<std::pair<int, int>> edges);

  int vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  std::vector<int> degrees() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
  bool operator<(const Graph& o) const {
    return n_ != o.n_ ? n_ < o.n_ : edges_ < o.edges_;
  }

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// Relabeling of G that is equal for isomorphic graphs.
Graph canonical_form(const Graph& G);
bool isomorphic(const Graph& a, const Graph& b);

inline constexpr int kMaxCatalogEdges = 6;

/// One canonical representative per isomorphism class of graphs with
/// `edges` edges and at most `max_vertices` vertices (default 2 * edges),
/// sorted by vertex count then edge list.
std::vector<Graph> enumerate_graphs(int edges, int max_vertices = -1);

/// (x_u x_v : uv an edge) in x1..x_n.
Ideal edge_ideal(const Graph& G, const PrimeField& field = PrimeField());

struct Polarization {
  Ideal squarefree;
  /// x_i - x_i' for each variable whose square was a generator.
  std::vector<Polynomial> linear_forms;
};

/// Replaces each generator x_i^2 by x_i x_i' in a ring with the new
/// variables appended. Throws ComputationError unless every generator is a
/// quadratic monomial.
Polarization polarize(const Ideal& M);

struct CatalogEntry {
  Graph graph;
  BettiTable betti;
  std::vector<long long> hpoly;
  int height = 0;
  bool aci = false;

  int beta23() const { return static_cast<int>(betti.at(2, 3)); }
};

struct HPolyCatalog {
  int edges = 0;
  /// Every isomorphism class, in enumeration order.
  std::vector<CatalogEntry> entries;
  /// First entry realizing each h-polynomial.
  std::map<std::vector<long long>, std::size_t> by_hpoly;

  bool contains(const std::vector<long long>& hpoly) const { return by_hpoly.count(hpoly) > 0; }
  /// Distinct Betti tables of the almost complete intersection entries.
  std::vector<BettiTable> aci_tables() const;
};

HPolyCatalog build_catalog(int edges);

}  // namespace aci
