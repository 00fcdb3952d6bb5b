#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace packlab {

// Simple undirected graph on vertices 0..n-1 backed by a dense adjacency
// matrix. Orders handled here are small (at most a few thousand).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  // Builds from a symmetric 0/1 matrix with zero diagonal.
  static Graph FromAdjacency(const Eigen::MatrixXi& adjacency);

  int order() const { return n_; }
  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  bool adjacent(int i, int j) const { return adj_(i, j) != 0; }
  int degree(int i) const;
  int num_edges() const;

  // Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  Eigen::MatrixXi adjacency() const;
  Graph complement() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  Eigen::Matrix<unsigned char, Eigen::Dynamic, Eigen::Dynamic> adj_;
};

struct SrgParameters {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  bool operator==(const SrgParameters&) const = default;
};

// Parameters (v, k, lambda, mu) when the graph is strongly regular, counting
// common neighbours pair by pair. Complete and empty graphs are rejected.
std::optional<SrgParameters> srg_parameters(const Graph& g);

// Triangular graph T(m): 2-subsets of [m], adjacent when they share a point.
Graph triangular_graph(int m);

// Paley graph on a prime q = 1 mod 4.
Graph paley_graph(int q);

}  // namespace packlab
