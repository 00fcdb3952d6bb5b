#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "packlab/frames.hpp"
#include "packlab/graph.hpp"

namespace packlab {

// Symmetric n x n matrices are handled in svec coordinates: entries (i, j),
// i <= j, row-major, with off-diagonal entries scaled by sqrt(2) so that the
// Euclidean inner product equals the trace inner product.
int svec_size(int n);
Eigen::VectorXd svec(const Eigen::MatrixXd& m);
Eigen::MatrixXd smat(const Eigen::VectorXd& v, int n);

// Tangent and normal spaces at G = Phi^T Phi of the manifold of rank-d Gram
// matrices with unit diagonal.
struct TangentModel {
  Eigen::MatrixXd gram;
  Eigen::MatrixXd factor;   // Phi, d x n
  Eigen::MatrixXd tangent;  // orthonormal columns in svec coordinates
  Eigen::MatrixXd normal;   // orthonormal complement (empty unless requested)
  int dimension = 0;

  int order() const { return static_cast<int>(gram.rows()); }
  Eigen::MatrixXd tangent_element(int k) const;
  Eigen::MatrixXd normal_element(int k) const;
};

// Throws Errc::kNotSpanning when Phi has rank below d.
TangentModel tangent_model(const RealPacking& p, bool with_normal = true);

enum class Verdict { kCertified, kInconclusive, kFailed };

std::string to_string(Verdict v);

struct CertificateReport {
  Eigen::MatrixXd certificate;
  std::vector<std::pair<int, int>> support;  // (i, j), i < j, with Y_ij != 0
  bool nonzero = false;
  double normality_residual = 0.0;  // |proj_T Y| / |Y|, Frobenius
  bool normal = false;
  bool sign_condition = false;     // (G_ij - delta_ij) Y_ij >= 0
  bool support_condition = false;  // Y_ij = 0 off the max-modulus entries
  int injectivity_rank = 0;
  int tangent_dimension = 0;
  bool injective = false;
  double dual_value = 0.0;
  double objective = 0.0;  // ||G - I||_inf
  Verdict verdict = Verdict::kFailed;
};

// Throws Errc::kDimensionMismatch when Y is not a symmetric n x n matrix.
CertificateReport check_certificate(const RealPacking& p, const Eigen::MatrixXd& y,
                                    double tol = 1e-9);

// tr((G - I) Y) / ||Y||_1. Throws Errc::kZeroY.
double dual_value(const RealPacking& p, const Eigen::MatrixXd& y);

// Least-squares search over Y supported on the max-modulus pairs with the sign
// of G. Returns a certified or inconclusive report.
CertificateReport search_certificate(const RealPacking& p, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Strongly regular graphs

struct SrgData {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  SrgParameters params;
  int k = 0;
  int alpha = 0;
  int beta = 0;  // the smallest eigenvalue is -beta
  int mult_alpha = 0;
  int mult_beta = 0;
  Eigen::MatrixXd j_hat;
  Eigen::MatrixXd p;
  Eigen::MatrixXd q;
};

// Throws Errc::kNotStronglyRegular, Errc::kConferenceCase,
// Errc::kNonIntegralEigenvalue.
SrgData srg_data(const Graph& g);

struct SrgPacking {
  RealGram gram;
  RealPacking packing;
  Eigen::MatrixXd certificate;
  double mu = 0.0;
  int d = 0;
};

// G = I + mu A - mu B with mu = 1 / (2 beta - 1), d = v - mult(-beta),
// Y = J_hat + P - c I. Throws Errc::kBoundViolated when v >= 2 (k + beta).
SrgPacking srg_packing(const SrgData& data);

struct LiftedEtf {
  RealPacking packing;
  Eigen::MatrixXd certificate;
};

// [[A cos t, -A sin t], [B sin t, B cos t]] with B the Naimark complement.
// Throws Errc::kNotEtf, Errc::kWrongRatio, Errc::kBadTheta.
LiftedEtf lifted_etf(const RealPacking& a, double theta);

}  // namespace packlab
