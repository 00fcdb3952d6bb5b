#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "packlab/frames.hpp"
#include "packlab/graph.hpp"
#include "packlab/polynomial.hpp"

namespace packlab {

// Edge {i, j} iff |<phi_i, phi_j>| >= mu - tol * max(1, mu).
// Throws Errc::kZeroCoherence when mu <= tol.
template <typename Scalar>
Graph contact_graph(const Packing<Scalar>& p, double tol = 1e-9);

struct SecureReport {
  bool secure = false;
  // Vertices in the order they were peeled.
  std::vector<int> deletion_order;
  // Vertices left once every remaining degree is >= d; empty iff !secure.
  std::vector<int> residual;
};

// Greedy peeling: repeatedly delete a vertex of minimum degree (smallest
// index first) while that degree is below d.
SecureReport is_d_secure(const Graph& g, int d);

// K_{d+1} plus an isolated vertex, and the complement of the matching
// (0,1), (2,3), ... on d + 2 vertices.
std::pair<Graph, Graph> minimal_d_secure_graphs(int d);

// ---------------------------------------------------------------------------
// Seidel matrices and switching

class SeidelMatrix {
 public:
  SeidelMatrix() = default;
  explicit SeidelMatrix(Eigen::MatrixXi entries);

  int order() const { return static_cast<int>(s_.rows()); }
  const Eigen::MatrixXi& entries() const { return s_; }
  bool operator==(const SeidelMatrix& o) const { return s_ == o.s_; }

 private:
  Eigen::MatrixXi s_;
};

// -1 / lambda_min(S). Throws Errc::kSingularInput when lambda_min >= 0.
double seidel_mu(const SeidelMatrix& s);

// Conjugation by the signed permutation x -> signs .* x[perm].
SeidelMatrix conjugate(const SeidelMatrix& s, const std::vector<int>& perm,
                       const std::vector<int>& signs);

struct SwitchingClasses {
  int order = 0;
  std::vector<SeidelMatrix> representatives;  // canonical forms, sorted
  std::int64_t patterns = 0;                  // patterns enumerated
};

// Classes of full +-1 Seidel matrices of order n, 3 <= n <= 7.
// Representatives are lexicographically minimal (upper triangle, row-major,
// -1 < +1) over all signed permutations. Throws Errc::kTooLarge.
SwitchingClasses seidel_switching_classes(int n);

// Canonical form of a full Seidel matrix (n <= 7).
SeidelMatrix canonical_seidel(const SeidelMatrix& s);

// Classes of sign patterns of form-II Gram matrices of order d + 2 under
// signed permutations preserving the matching (0,1), (2,3), ...
// d in {2, 3, 4}; Throws Errc::kTooLarge.
SwitchingClasses form2_sign_classes(int d);

// ---------------------------------------------------------------------------
// Gram forms and polynomial systems

enum class FormTag { kI = 1, kII = 2 };

struct GramForm {
  FormTag tag = FormTag::kII;
  int d = 0;
  int order = 0;
  // Positions (i, j), i < j, holding the free variables x_1, x_2, ... in order.
  std::vector<std::pair<int, int>> free_pairs;

  bool is_free(int i, int j) const;
};

// Form I: K_{d+1} on vertices 0..d, free entries (i, d+1).
// Form II: free entries on the matching (0,1), (2,3), ...
GramForm gram_form(FormTag tag, int d);

// Signs of the non-free off-diagonal entries of g (0 at free slots and on the
// diagonal).
Eigen::MatrixXi signs_from_gram(const GramForm& form, const Eigen::MatrixXd& g);

struct PolynomialSystem {
  std::vector<std::string> variables;  // x1..xk, mu
  std::vector<Polynomial> equalities;
  std::vector<Polynomial> inequalities;  // each >= 0
  bool welch_strengthening = false;
};

struct CadOptions {
  bool welch = false;
};

// Equalities: every (d+1) x (d+1) minor of the symbolic Gram (rows and columns
// chosen independently). Inequalities: principal minors of order >= 2, then
// mu - x_i and x_i + mu, then optionally d (n-1) mu^2 - (n-d) and mu.
// Throws Errc::kInconsistentForm.
PolynomialSystem cad_query(const GramForm& form, const Eigen::MatrixXi& signs,
                           const CadOptions& options = {});

// The symbolic Gram matrix behind cad_query.
PolynomialMatrix symbolic_gram(const GramForm& form, const Eigen::MatrixXi& signs);

enum class CadFormat { kJson, kScript };

// Throws Errc::kUnknownFormat for names other than "json" and "script".
CadFormat parse_cad_format(const std::string& name);
std::string export_cad(const PolynomialSystem& sys, CadFormat format);
// Inverse of the JSON export. Throws Errc::kParseError.
PolynomialSystem parse_cad_json(const std::string& text);

}  // namespace packlab
