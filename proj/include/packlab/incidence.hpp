#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "packlab/algebra.hpp"
#include "packlab/frames.hpp"

namespace packlab {

class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  // Lines are sorted and deduplicated internally; points must lie in
  // [0, num_points).
  IncidenceStructure(int num_points, std::vector<std::vector<int>> lines);

  int num_points() const { return num_points_; }
  int num_lines() const { return static_cast<int>(lines_.size()); }
  const std::vector<std::vector<int>>& lines() const { return lines_; }

  // Common line size, if every line has the same size.
  std::optional<int> uniformity() const;
  std::set<int> intersection_numbers() const;

  bool operator==(const IncidenceStructure& o) const = default;

 private:
  int num_points_ = 0;
  std::vector<std::vector<int>> lines_;
};

// Point (x, y) of the affine plane is x q + y. Lines y = a x + b come first
// (a-major), then verticals x = c. The projective closure adds the point
// q^2 + a to every line of slope a, q^2 + q to the verticals, and the line at
// infinity last. Throws Errc::kNotPrime.
IncidenceStructure affine_plane(int q);
IncidenceStructure projective_plane(int q);

IncidenceStructure dual(const IncidenceStructure& c);

// Signed injection of R^{|l|} into R^P: slot i goes to points[i] with signs[i].
struct SuperEmbedding {
  std::vector<int> points;
  std::vector<int> signs;
};

// Ascending point order with + signs.
std::vector<SuperEmbedding> default_embeddings(const IncidenceStructure& c);

// Columns E_l v_j ordered line-major, unnormalized (norm sqrt(k)).
// Throws Errc::kBadUniformity, Errc::kBadIntersections, Errc::kBadVectorNorms.
Eigen::MatrixXd star_product_raw(const IncidenceStructure& c, const Eigen::MatrixXd& vectors,
                                 const std::vector<SuperEmbedding>& embeddings);
Eigen::MatrixXd star_product_raw(const IncidenceStructure& c, const Eigen::MatrixXd& vectors);

// The normalized packing.
RealPacking star_product(const IncidenceStructure& c, const Eigen::MatrixXd& vectors,
                         const std::vector<SuperEmbedding>& embeddings);
RealPacking star_product(const IncidenceStructure& c, const Eigen::MatrixXd& vectors);

enum class Thm52Case { kPH, kPHminusT, kAHminus, kAstarH };

std::string to_string(Thm52Case c);
// Accepts "P", "PT", "A", "AS" and the long names "PH", "PHminusT", ...
Thm52Case parse_thm52_case(const std::string& name);

struct Thm52Report {
  Thm52Case which = Thm52Case::kPH;
  int q = 0;
  int d = 0;
  int n = 0;
  int k = 0;
  Eigen::MatrixXd raw;  // unnormalized columns in R^d
  RealPacking packing;
  bool tight = false;
  double frobenius_sq = 0.0;       // ||raw^T raw||_F^2
  double frobenius_target = 0.0;   // k^2 n^2 / d
  Eigen::VectorXi zero_counts;
  int z = -1;  // common zero count, -1 if columns disagree
  double coherence = 0.0;
  double welch_ratio = 0.0;
  bool orthobiangular = false;
};

// Throws Errc::kUnsupportedQ when q is not prime or no Hadamard matrix of
// order q + 1 is built in.
Thm52Report thm52(Thm52Case which, int q);

// Expected per-column zero count q, q - 1, q^2 - 1, q.
int thm52_expected_z(Thm52Case which, int q);

// sqrt((n - d) / (d (n - z - 1))). Throws Errc::kInvalidZ.
double mu_from_z(int d, int n, int z);

struct IntegrityReport {
  Rational first;   // d (n - z - 1) / (n - d)
  Rational second;  // (n - d) (n - z - 1) / d
  bool integral = false;
};

// Throws Errc::kHalfCase when n = 2d, Errc::kInvalidZ.
IntegrityReport obtf_integrality(int d, int n, int z);

struct MinimalityReport {
  int z = 0;
  std::vector<int> checked;   // z' = 0 .. z - 1
  std::vector<int> integral;  // z' that passed the test (should be empty)
  bool minimal = false;
};

MinimalityReport minimality_scan(Thm52Case which, int q);

}  // namespace packlab
