#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "packlab/algebra.hpp"
#include "packlab/graph.hpp"

namespace packlab {

enum class Field { kReal, kComplex };

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr Field kField = Field::kReal;
};

template <>
struct ScalarTraits<Complex> {
  static constexpr Field kField = Field::kComplex;
};

std::string to_string(Field field);

// ---------------------------------------------------------------------------
// Packing: n unit columns in Scalar^d.

template <typename Scalar>
class Packing {
 public:
  using Matrix = MatrixX<Scalar>;

  Packing() = default;

  // Columns whose norm is within 1e-6 of one are renormalized; anything else
  // throws Errc::kNonUnitColumn. Empty input throws Errc::kEmptyInput.
  explicit Packing(Matrix vectors);

  int dim() const { return static_cast<int>(vectors_.rows()); }
  int size() const { return static_cast<int>(vectors_.cols()); }
  const Matrix& vectors() const { return vectors_; }
  auto column(int i) const { return vectors_.col(i); }

  static constexpr Field field() { return ScalarTraits<Scalar>::kField; }

 private:
  Matrix vectors_;
};

using RealPacking = Packing<double>;
using ComplexPacking = Packing<Complex>;
using AnyPacking = std::variant<RealPacking, ComplexPacking>;

RealPacking build_packing(const Eigen::MatrixXd& vectors);
ComplexPacking build_packing(const Eigen::MatrixXcd& vectors);

// ---------------------------------------------------------------------------
// Gram matrices

template <typename Scalar>
class GramMatrix {
 public:
  using Matrix = MatrixX<Scalar>;

  GramMatrix() = default;
  // Requires a square Hermitian matrix with unit diagonal (both to 1e-12).
  explicit GramMatrix(Matrix entries);

  int order() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  Eigen::MatrixXd moduli() const { return entries_.cwiseAbs(); }

  double coherence() const;
  // Number of eigenvalues above 1e-8 times the largest.
  int rank() const;
  bool is_psd(double tol = 1e-9) const;
  // Per column, the number of off-diagonal entries with modulus below tol.
  Eigen::VectorXi zero_counts(double tol = 1e-9) const;

 private:
  Matrix entries_;
};

using RealGram = GramMatrix<double>;
using ComplexGram = GramMatrix<Complex>;

template <typename Scalar>
GramMatrix<Scalar> gram(const Packing<Scalar>& p);

// ---------------------------------------------------------------------------
// Coherence and bounds

// Max over distinct pairs of |<phi_i, phi_j>|. Throws Errc::kTooFewVectors.
template <typename Scalar>
double coherence(const Packing<Scalar>& p);

// Max over `pairs` uniformly drawn distinct pairs; deterministic in `seed`.
template <typename Scalar>
double sampled_coherence(const Packing<Scalar>& p, std::int64_t pairs, std::uint64_t seed);

// Max over pairs (i, j) with i in `rows`, any j != i.
template <typename Scalar>
double partial_coherence(const Packing<Scalar>& p, const std::vector<int>& rows);

struct WelchBound {
  double value = 0.0;
  bool trivial = false;  // n <= d, the bound is 0
};

WelchBound welch_bound(int d, int n);

struct GerzonRange {
  double lower = 0.0;
  double upper = 0.0;
  bool contains(int n) const { return lower <= n && n <= upper; }
};

GerzonRange gerzon_range(int d);

struct OrthoplexBound {
  double value = 0.0;
  bool applicable = false;
};

OrthoplexBound orthoplex_bound(int d, int n);

struct BoundReport {
  WelchBound welch;
  GerzonRange gerzon;
  bool in_gerzon = false;
  OrthoplexBound orthoplex;
};

BoundReport bound_report(int d, int n);

// ---------------------------------------------------------------------------
// Tight frames, Naimark complements, factorization

struct TightReport {
  bool tight = false;
  double constant = 0.0;
  double max_deviation = 0.0;
};

// Phi Phi^* == (n/d) I entrywise within tol * max(1, n/d).
template <typename Scalar>
TightReport is_tight(const Packing<Scalar>& p, double tol = 1e-9);

template <typename Scalar>
Packing<Scalar> naimark_complement(const Packing<Scalar>& p);

// Top-d eigenpairs of g. Throws Errc::kNotPsd, Errc::kRankExceedsD.
template <typename Scalar>
Packing<Scalar> factor_gram(const GramMatrix<Scalar>& g, int d, double tol = 1e-8);

RealPacking c_to_r(const ComplexPacking& p);
// Throws Errc::kAlreadyReal for real input.
RealPacking c_to_r(const AnyPacking& p);

// Orthonormal basis (columns) of the orthogonal complement of span(columns of
// `a`), using a full SVD with rank tolerance 1e-8 times the top singular value.
Eigen::MatrixXd orthonormal_complement(const Eigen::MatrixXd& a);

// ---------------------------------------------------------------------------
// Angles

enum class AngleTag { kEquiangular, kOrthobiangular, kBiangular, kMultiAngle };

std::string to_string(AngleTag tag);

struct AngleLevel {
  double value = 0.0;
  std::int64_t multiplicity = 0;  // unordered pairs
};

struct AngleClass {
  AngleTag tag = AngleTag::kMultiAngle;
  std::vector<AngleLevel> levels;  // ascending

  int count() const { return static_cast<int>(levels.size()); }
};

template <typename Scalar>
AngleClass classify_angles(const GramMatrix<Scalar>& g, double tol = 1e-6);

// ---------------------------------------------------------------------------
// ETF to strongly regular graph

struct EtfGraph {
  Graph graph;
  SrgParameters parameters;
};

// Throws Errc::kNotEtf, Errc::kNotStronglyRegular.
EtfGraph etf_to_srg(const RealPacking& p, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Minimal polynomials

// |p(value)| / (sum |c_i| |value|^i).
double minimal_poly_residual(double value, const IntPolynomial& p);
bool minimal_poly_check(double value, const IntPolynomial& p, double tol);

}  // namespace packlab
