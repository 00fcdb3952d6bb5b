#include "packlab/graph.hpp"

#include <string>

#include "packlab/algebra.hpp"
#include "packlab/error.hpp"

namespace packlab {

Graph::Graph(int order) : n_(order) {
  if (order < 0) throw Error(Errc::kInvalidArgument, "negative graph order");
  adj_.setZero(order, order);
}

Graph Graph::FromAdjacency(const Eigen::MatrixXi& adjacency) {
  if (adjacency.rows() != adjacency.cols()) {
    throw Error(Errc::kInvalidArgument, "adjacency matrix must be square");
  }
  const int n = static_cast<int>(adjacency.rows());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    if (adjacency(i, i) != 0) throw Error(Errc::kInvalidArgument, "adjacency has a loop");
    for (int j = i + 1; j < n; ++j) {
      const int a = adjacency(i, j);
      if (a != adjacency(j, i) || (a != 0 && a != 1)) {
        throw Error(Errc::kInvalidArgument, "adjacency must be symmetric 0/1");
      }
      if (a) g.add_edge(i, j);
    }
  }
  return g;
}

void Graph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) {
    throw Error(Errc::kInvalidArgument,
                "invalid edge (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  adj_(i, j) = adj_(j, i) = 1;
}

void Graph::remove_edge(int i, int j) {
  adj_(i, j) = adj_(j, i) = 0;
}

int Graph::degree(int i) const { return adj_.row(i).cast<int>().sum(); }

int Graph::num_edges() const { return adj_.cast<int>().sum() / 2; }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (adj_(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Eigen::MatrixXi Graph::adjacency() const { return adj_.cast<int>(); }

Graph Graph::complement() const {
  Graph c(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!adj_(i, j)) c.add_edge(i, j);
    }
  }
  return c;
}

std::optional<SrgParameters> srg_parameters(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  const Eigen::MatrixXi a = g.adjacency();
  const int k = a.row(0).sum();
  for (int i = 1; i < n; ++i) {
    if (a.row(i).sum() != k) return std::nullopt;
  }
  if (k == 0 || k == n - 1) return std::nullopt;
  const Eigen::MatrixXi common = a * a;
  int lambda = -1;
  int mu = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int& slot = a(i, j) ? lambda : mu;
      if (slot < 0) {
        slot = common(i, j);
      } else if (slot != common(i, j)) {
        return std::nullopt;
      }
    }
  }
  return SrgParameters{n, k, lambda, mu};
}

Graph triangular_graph(int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  const int n = static_cast<int>(pairs.size());
  Graph g(n);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const auto [a, b] = pairs[static_cast<size_t>(s)];
      const auto [c, d] = pairs[static_cast<size_t>(t)];
      if (a == c || a == d || b == c || b == d) g.add_edge(s, t);
    }
  }
  return g;
}

Graph paley_graph(int q) {
  const PrimeField f(q);
  if (q % 4 != 1) throw Error(Errc::kInvalidArgument, "Paley graph needs q = 1 mod 4");
  Graph g(q);
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (f.quadratic_character(j - i) == 1) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace packlab
