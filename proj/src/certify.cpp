#include "packlab/certify.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "packlab/error.hpp"

namespace packlab {

namespace {

constexpr double kRankTol = 1e-8;

int numerical_rank(const Eigen::VectorXd& singular_values) {
  if (singular_values.size() == 0 || singular_values(0) <= 0) return 0;
  return static_cast<int>((singular_values.array() > kRankTol * singular_values(0)).count());
}

}  // namespace

int svec_size(int n) { return n * (n + 1) / 2; }

Eigen::VectorXd svec(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  Eigen::VectorXd v(svec_size(n));
  int t = 0;
  for (int i = 0; i < n; ++i) {
    v(t++) = m(i, i);
    for (int j = i + 1; j < n; ++j) v(t++) = std::numbers::sqrt2 * m(i, j);
  }
  return v;
}

Eigen::MatrixXd smat(const Eigen::VectorXd& v, int n) {
  if (v.size() != svec_size(n)) throw Error(Errc::kDimensionMismatch, "svec length mismatch");
  Eigen::MatrixXd m(n, n);
  int t = 0;
  for (int i = 0; i < n; ++i) {
    m(i, i) = v(t++);
    for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = v(t++) / std::numbers::sqrt2;
  }
  return m;
}

Eigen::MatrixXd TangentModel::tangent_element(int k) const { return smat(tangent.col(k), order()); }
Eigen::MatrixXd TangentModel::normal_element(int k) const { return smat(normal.col(k), order()); }

TangentModel tangent_model(const RealPacking& p, bool with_normal) {
  const int d = p.dim();
  const int n = p.size();
  const Eigen::MatrixXd& phi = p.vectors();
  Eigen::JacobiSVD<Eigen::MatrixXd> phi_svd(phi);
  if (numerical_rank(phi_svd.singularValues()) < d) {
    throw Error(Errc::kNotSpanning, "packing does not span R^" + std::to_string(d));
  }
  TangentModel model;
  model.gram = phi.transpose() * phi;
  model.factor = phi;
  // Generators Phi^T E + E^T Phi with E = w e_i^T, w orthogonal to phi_i.
  Eigen::MatrixXd gens(svec_size(n), n * (d - 1));
  int g = 0;
  for (int i = 0; i < n; ++i) {
    const Eigen::MatrixXd perp = orthonormal_complement(phi.col(i));
    for (int c = 0; c < perp.cols(); ++c) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
      m.col(i) = phi.transpose() * perp.col(c);
      gens.col(g++) = svec(m + m.transpose());
    }
  }
  gens.conservativeResize(Eigen::NoChange, g);
  if (with_normal) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gens, Eigen::ComputeFullU);
    model.dimension = numerical_rank(svd.singularValues());
    model.tangent = svd.matrixU().leftCols(model.dimension);
    model.normal = svd.matrixU().rightCols(svec_size(n) - model.dimension);
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gens, Eigen::ComputeThinU);
    model.dimension = numerical_rank(svd.singularValues());
    model.tangent = svd.matrixU().leftCols(model.dimension);
  }
  return model;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertified:
      return "certified";
    case Verdict::kInconclusive:
      return "inconclusive";
    case Verdict::kFailed:
      break;
  }
  return "failed";
}

double dual_value(const RealPacking& p, const Eigen::MatrixXd& y) {
  const int n = p.size();
  if (y.rows() != n || y.cols() != n) throw Error(Errc::kDimensionMismatch, "Y must be n x n");
  const double l1 = y.cwiseAbs().sum();
  if (!(l1 > 0)) throw Error(Errc::kZeroY, "Y is zero");
  const Eigen::MatrixXd g = p.vectors().transpose() * p.vectors();
  const Eigen::MatrixXd gi = g - Eigen::MatrixXd::Identity(n, n);
  return (gi.cwiseProduct(y)).sum() / l1;
}

namespace {

CertificateReport check_with_model(const RealPacking& p, const TangentModel& model,
                                   const Eigen::MatrixXd& y, double tol) {
  const int n = p.size();
  if (y.rows() != n || y.cols() != n) throw Error(Errc::kDimensionMismatch, "Y must be n x n");
  if ((y - y.transpose()).cwiseAbs().maxCoeff() > tol * std::max(1.0, y.cwiseAbs().maxCoeff())) {
    throw Error(Errc::kDimensionMismatch, "Y must be symmetric");
  }
  CertificateReport r;
  r.certificate = y;
  r.tangent_dimension = model.dimension;
  const Eigen::MatrixXd gi = model.gram - Eigen::MatrixXd::Identity(n, n);
  r.objective = gi.cwiseAbs().maxCoeff();

  const double scale = y.cwiseAbs().maxCoeff();
  r.nonzero = scale > tol;
  if (!r.nonzero) {
    r.verdict = Verdict::kFailed;
    return r;
  }
  const Eigen::MatrixXd yh = y / scale;
  r.dual_value = dual_value(p, y);

  const Eigen::VectorXd v = svec(yh);
  r.normality_residual = (model.tangent.transpose() * v).norm() / v.norm();
  r.normal = r.normality_residual <= tol;

  r.sign_condition = true;
  r.support_condition = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (gi(i, j) * yh(i, j) < -tol) r.sign_condition = false;
      if (std::abs(gi(i, j)) < r.objective - tol && std::abs(yh(i, j)) >= tol) {
        r.support_condition = false;
      }
    }
  }

  // Injectivity of Z -> Z|_S on the tangent space. Tangent elements have a
  // zero diagonal, so only off-diagonal support pairs matter.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(yh(i, j)) >= tol) r.support.emplace_back(i, j);
    }
  }
  if (model.dimension == 0) {
    r.injective = true;
  } else if (!r.support.empty()) {
    Eigen::MatrixXd l(static_cast<Eigen::Index>(r.support.size()), model.dimension);
    for (int k = 0; k < model.dimension; ++k) {
      const Eigen::MatrixXd t = model.tangent_element(k);
      for (size_t s = 0; s < r.support.size(); ++s) {
        l(static_cast<Eigen::Index>(s), k) = t(r.support[s].first, r.support[s].second);
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(l);
    r.injectivity_rank = numerical_rank(svd.singularValues());
    r.injective = r.injectivity_rank == model.dimension;
  }

  if (!r.normal || !r.sign_condition || !r.support_condition) {
    r.verdict = Verdict::kFailed;
  } else if (!r.injective) {
    r.verdict = Verdict::kInconclusive;
  } else {
    r.verdict = Verdict::kCertified;
  }
  return r;
}

}  // namespace

CertificateReport check_certificate(const RealPacking& p, const Eigen::MatrixXd& y, double tol) {
  const int n = p.size();
  if (y.rows() != n || y.cols() != n) throw Error(Errc::kDimensionMismatch, "Y must be n x n");
  return check_with_model(p, tangent_model(p, false), y, tol);
}

CertificateReport search_certificate(const RealPacking& p, double tol) {
  const int n = p.size();
  const TangentModel model = tangent_model(p, false);
  const Eigen::MatrixXd& g = model.gram;
  double mu = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) mu = std::max(mu, std::abs(g(i, j)));
  }
  const double cut = mu - 1e-9 * std::max(1.0, mu);
  std::vector<std::pair<int, int>> support;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(g(i, j)) >= cut) support.emplace_back(i, j);
    }
  }
  const auto m = static_cast<Eigen::Index>(support.size());
  // Row k: trace inner product of the k-th tangent element with the unit
  // signed pattern on each support pair.
  Eigen::MatrixXd c(model.dimension, m);
  for (int k = 0; k < model.dimension; ++k) {
    const Eigen::MatrixXd t = model.tangent_element(k);
    for (Eigen::Index s = 0; s < m; ++s) {
      const auto [i, j] = support[static_cast<size_t>(s)];
      c(k, s) = 2.0 * (g(i, j) < 0 ? -1.0 : 1.0) * t(i, j);
    }
  }
  Eigen::MatrixXd null;
  if (model.dimension == 0) {
    null = Eigen::MatrixXd::Identity(m, m);
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c.transpose(), Eigen::ComputeFullU);
    const int rank = numerical_rank(svd.singularValues());
    null = svd.matrixU().rightCols(m - rank);
  }
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
  if (null.cols() > 0) {
    y = null * (null.transpose() * Eigen::VectorXd::Ones(m));
    // Alternate between the nonnegative orthant and the null space.
    for (int iter = 0; iter < 200 && y.minCoeff() < -tol * std::max(1.0, y.maxCoeff()); ++iter) {
      const Eigen::VectorXd clipped = y.cwiseMax(0.0);
      y = null * (null.transpose() * clipped);
    }
    y = y.unaryExpr([&](double v) { return std::abs(v) < tol * std::max(1.0, y.cwiseAbs().maxCoeff()) ? 0.0 : v; });
  }
  Eigen::MatrixXd ymat = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index s = 0; s < m; ++s) {
    const auto [i, j] = support[static_cast<size_t>(s)];
    ymat(i, j) = ymat(j, i) = (g(i, j) < 0 ? -1.0 : 1.0) * y(s);
  }
  CertificateReport r = check_with_model(p, model, ymat, std::max(tol, 1e-8));
  if (r.verdict != Verdict::kCertified) r.verdict = Verdict::kInconclusive;
  return r;
}

// ---------------------------------------------------------------------------
// Strongly regular graphs

namespace {

// Exact integer square root, or -1.
std::int64_t exact_sqrt(std::int64_t x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x))));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : -1;
}

}  // namespace

SrgData srg_data(const Graph& g) {
  const auto params = srg_parameters(g);
  if (!params) throw Error(Errc::kNotStronglyRegular, "graph is not strongly regular");
  const auto [v, k, lambda, mu] = *params;
  if (v == 2 * k + 1) {
    throw Error(Errc::kConferenceCase, "v = 2k + 1; eigenvalue integrality is not guaranteed");
  }
  const std::int64_t disc = static_cast<std::int64_t>(lambda - mu) * (lambda - mu) + 4 * (k - mu);
  const std::int64_t root = exact_sqrt(disc);
  if (root < 0 || (lambda - mu + root) % 2 != 0) {
    throw Error(Errc::kNonIntegralEigenvalue, "restricted eigenvalues are not integers");
  }
  SrgData data;
  data.params = *params;
  data.k = k;
  data.alpha = static_cast<int>((lambda - mu + root) / 2);
  data.beta = static_cast<int>((root - (lambda - mu)) / 2);
  data.a = g.adjacency().cast<double>();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(v, v);
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(v, v);
  data.b = ones - id - data.a;
  data.j_hat = ones / v;
  data.p = (data.a - k * data.j_hat + data.beta * (id - data.j_hat)) / (data.alpha + data.beta);
  data.q = id - data.j_hat - data.p;
  data.mult_alpha = static_cast<int>(std::lround(data.p.trace()));
  data.mult_beta = static_cast<int>(std::lround(data.q.trace()));
  return data;
}

SrgPacking srg_packing(const SrgData& data) {
  const int v = data.params.v;
  if (v == 2 * data.k + 1) throw Error(Errc::kConferenceCase, "v = 2k + 1");
  if (v >= 2 * (data.k + data.beta)) {
    throw Error(Errc::kBoundViolated, "requires v < 2 (k + beta)");
  }
  SrgPacking out;
  out.mu = 1.0 / (2.0 * data.beta - 1.0);
  out.d = v - data.mult_beta;
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(v, v) + out.mu * (data.a - data.b);
  out.gram = RealGram(g);
  out.packing = factor_gram(out.gram, out.d);
  const Eigen::MatrixXd jp = data.j_hat + data.p;
  out.certificate = jp - jp(0, 0) * Eigen::MatrixXd::Identity(v, v);
  return out;
}

LiftedEtf lifted_etf(const RealPacking& a, double theta) {
  const int d = a.dim();
  if (a.size() != 2 * d) throw Error(Errc::kWrongRatio, "lifting needs a d x 2d frame");
  const double units = theta / (std::numbers::pi / 8);
  const double nearest = std::round(units);
  if (std::abs(units - nearest) > 1e-12 * std::max(1.0, std::abs(units)) ||
      std::fmod(std::abs(nearest), 2.0) != 1.0) {
    throw Error(Errc::kBadTheta, "theta must be an odd multiple of pi/8");
  }
  const AngleClass angles = classify_angles(gram(a));
  if (angles.tag != AngleTag::kEquiangular || !is_tight(a).tight) {
    throw Error(Errc::kNotEtf, "lifting needs an equiangular tight frame");
  }
  const RealPacking b = naimark_complement(a);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::MatrixXd phi(2 * d, 4 * d);
  phi << a.vectors() * c, -a.vectors() * s, b.vectors() * s, b.vectors() * c;
  LiftedEtf out{RealPacking(phi), {}};
  out.certificate = out.packing.vectors().transpose() * out.packing.vectors() -
                    Eigen::MatrixXd::Identity(4 * d, 4 * d);
  return out;
}

}  // namespace packlab
