#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "packlab/catalog.hpp"
#include "packlab/certify.hpp"
#include "packlab/error.hpp"
#include "support/oracles.hpp"

namespace packlab {
namespace {

RealPacking Perturb(const RealPacking& p, double scale, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-scale, scale);
  Eigen::MatrixXd m = p.vectors();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) += noise(rng);
  }
  m.colwise().normalize();
  return RealPacking(m);
}

Eigen::MatrixXd RandomUnitColumns(int d, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(d, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) m(i, j) = normal(rng);
  }
  m.colwise().normalize();
  return m;
}

TEST(Svec, RoundTripAndInnerProduct) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Random(5, 5);
  a = (a + a.transpose()).eval();
  Eigen::MatrixXd b = Eigen::MatrixXd::Random(5, 5);
  b = (b + b.transpose()).eval();
  EXPECT_EQ(svec_size(5), 15);
  EXPECT_LT((smat(svec(a), 5) - a).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(svec(a).dot(svec(b)), (a * b).trace(), 1e-12);
}

TEST(TangentModel, IcosahedralDimension) {
  const TangentModel t = tangent_model(build("3,6"));
  EXPECT_EQ(t.dimension, 9);
  EXPECT_EQ(t.tangent.cols(), 9);
  EXPECT_EQ(t.normal.cols(), svec_size(6) - 9);
}

TEST(TangentModel, GenericDimensionFormula) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 6}, {3, 7}, {4, 7}, {4, 9}, {5, 9}}) {
    const TangentModel t = tangent_model(RealPacking(RandomUnitColumns(d, n, 17 * d + n)));
    EXPECT_EQ(t.dimension, d * n - n - d * (d - 1) / 2) << d << " " << n;
  }
}

TEST(TangentModel, BasisInvariants) {
  const RealPacking p = build("3,6");
  const TangentModel t = tangent_model(p);
  const int n = t.order();
  const Eigen::MatrixXd& phi = t.factor;
  for (int k = 0; k < t.dimension; ++k) {
    const Eigen::MatrixXd e = t.tangent_element(k);
    EXPECT_LT(e.diagonal().cwiseAbs().maxCoeff(), 1e-9);
    // Solve Phi^T E + E^T Phi = element for E in least squares: the element
    // must lie in the image of that map.
    Eigen::MatrixXd map(svec_size(n), phi.size());
    for (Eigen::Index c = 0; c < phi.size(); ++c) {
      Eigen::MatrixXd unit = Eigen::MatrixXd::Zero(phi.rows(), phi.cols());
      unit.data()[c] = 1.0;
      map.col(c) = svec(phi.transpose() * unit + unit.transpose() * phi);
    }
    const Eigen::VectorXd target = svec(e);
    const Eigen::VectorXd sol = map.colPivHouseholderQr().solve(target);
    EXPECT_LT((map * sol - target).norm(), 1e-9);
  }
  EXPECT_LT((t.tangent.transpose() * t.tangent - Eigen::MatrixXd::Identity(t.dimension, t.dimension))
                .cwiseAbs()
                .maxCoeff(),
            1e-9);
  EXPECT_LT((t.tangent.transpose() * t.normal).cwiseAbs().maxCoeff(), 1e-9);
  for (int k = 0; k < t.normal.cols(); ++k) {
    for (int j = 0; j < t.dimension; ++j) {
      EXPECT_LT(std::abs((t.normal_element(k) * t.tangent_element(j)).trace()), 1e-9);
    }
  }
}

TEST(TangentModel, NotSpanning) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  try {
    tangent_model(RealPacking(m));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotSpanning);
  }
}

TEST(SrgData, TriangularSix) {
  const SrgData s = srg_data(oracle::triangular(6));
  EXPECT_EQ(s.params, (SrgParameters{15, 8, 4, 4}));
  EXPECT_EQ(s.k, 8);
  EXPECT_EQ(s.alpha, 2);
  EXPECT_EQ(s.beta, 2);
  EXPECT_EQ(s.mult_alpha, 5);
  EXPECT_EQ(s.mult_beta, 9);
  const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(15, 15);
  EXPECT_LT((s.a + s.b + Eigen::MatrixXd::Identity(15, 15) - j).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((s.a - (s.k * s.j_hat + s.alpha * s.p - s.beta * s.q)).cwiseAbs().maxCoeff(), 1e-9);
  // Oracle eigenvalues straight from the adjacency matrix.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.a);
  EXPECT_NEAR(es.eigenvalues()(0), -2.0, 1e-9);
  EXPECT_NEAR(es.eigenvalues()(14), 8.0, 1e-9);
}

TEST(SrgData, Errors) {
  Graph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  try {
    srg_data(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotStronglyRegular);
  }
  Graph cycle(5);
  for (int i = 0; i < 5; ++i) cycle.add_edge(i, (i + 1) % 5);
  try {
    srg_data(cycle);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kConferenceCase);
  }
}

TEST(SrgPacking, PetersenViolatesBound) {
  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    petersen.add_edge(i, 5 + i);
  }
  const SrgData s = srg_data(petersen);
  EXPECT_EQ(s.beta, 2);
  try {
    srg_packing(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBoundViolated);
  }
}

TEST(SrgPacking, TriangularSixStructure) {
  const SrgData s = srg_data(oracle::triangular(6));
  const SrgPacking sp = srg_packing(s);
  EXPECT_EQ(sp.d, 6);
  EXPECT_NEAR(sp.mu, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(sp.packing.dim(), 6);
  EXPECT_EQ(sp.packing.size(), 15);
  const Eigen::MatrixXd& g = sp.gram.entries();
  const double lhs_scale = 2.0 * s.beta - 1.0;
  const Eigen::MatrixXd rhs =
      (2.0 * (s.k + s.beta) - s.params.v) * s.j_hat + 2.0 * (s.alpha + s.beta) * s.p;
  EXPECT_LT((lhs_scale * g - rhs).cwiseAbs().maxCoeff(), 1e-9);
  const Eigen::MatrixXd& y = sp.certificate;
  for (int i = 0; i < 15; ++i) {
    for (int j = 0; j < 15; ++j) {
      if (i == j || std::abs(y(i, j)) < 1e-12) continue;
      EXPECT_EQ(y(i, j) > 0, g(i, j) > 0) << i << " " << j;
    }
  }
  EXPECT_EQ(catalog_entry(6, 15).mu_code, coherence_code(coherence(sp.packing)));
}

TEST(CheckCertificate, TriangularSixIsCertified) {
  const SrgPacking sp = srg_packing(srg_data(oracle::triangular(6)));
  const CertificateReport r = check_certificate(sp.packing, sp.certificate);
  EXPECT_EQ(r.verdict, Verdict::kCertified);
  EXPECT_TRUE(r.nonzero);
  EXPECT_TRUE(r.normal);
  EXPECT_TRUE(r.sign_condition);
  EXPECT_TRUE(r.support_condition);
  EXPECT_TRUE(r.injective);
  EXPECT_EQ(r.injectivity_rank, r.tangent_dimension);
  const double obj = (gram(sp.packing).entries() - Eigen::MatrixXd::Identity(15, 15)).cwiseAbs().maxCoeff();
  EXPECT_NEAR(r.dual_value, obj, 1e-9);
  EXPECT_NEAR(dual_value(sp.packing, sp.certificate), obj, 1e-9);
}

TEST(CheckCertificate, ZeroIsFailed) {
  const SrgPacking sp = srg_packing(srg_data(oracle::triangular(6)));
  const CertificateReport r = check_certificate(sp.packing, Eigen::MatrixXd::Zero(15, 15));
  EXPECT_FALSE(r.nonzero);
  EXPECT_EQ(r.verdict, Verdict::kFailed);
}

TEST(CheckCertificate, DimensionMismatch) {
  const RealPacking p = build("3,6");
  try {
    check_certificate(p, Eigen::MatrixXd::Zero(5, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDimensionMismatch);
  }
  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(6, 6);
  asym(0, 1) = 1.0;
  EXPECT_THROW(check_certificate(p, asym), Error);
}

TEST(CheckCertificate, PerturbationsAreNotCertified) {
  const SrgPacking sp = srg_packing(srg_data(oracle::triangular(6)));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const RealPacking q = Perturb(sp.packing, 1e-3, seed);
    EXPECT_NE(check_certificate(q, sp.certificate).verdict, Verdict::kCertified);
  }
}

TEST(DualValue, ZeroThrows) {
  try {
    dual_value(build("3,6"), Eigen::MatrixXd::Zero(6, 6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kZeroY);
  }
}

TEST(DualValue, WeakDualityOnNormalSamples) {
  // Any normal-space Y meeting the sign condition has dual value at most the
  // objective; sample the normal space and keep sign-compatible parts.
  const RealPacking p = build("3,6");
  const TangentModel t = tangent_model(p);
  const Eigen::MatrixXd g = gram(p).entries() - Eigen::MatrixXd::Identity(6, 6);
  const double obj = g.cwiseAbs().maxCoeff();
  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal;
  for (int s = 0; s < 200; ++s) {
    Eigen::VectorXd w(t.normal.cols());
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = normal(rng);
    const Eigen::MatrixXd y = smat(t.normal * w, 6);
    if (y.cwiseAbs().sum() == 0) continue;
    EXPECT_LE(dual_value(p, y), obj + 1e-12);
  }
}

TEST(LiftedEtf, IdentitiesAndCertificate) {
  const RealPacking a = build("3,6");
  const double theta = std::numbers::pi / 8;
  const LiftedEtf lifted = lifted_etf(a, theta);
  const Eigen::MatrixXd& phi = lifted.packing.vectors();
  ASSERT_EQ(phi.rows(), 6);
  ASSERT_EQ(phi.cols(), 12);
  const Eigen::MatrixXd u = phi.leftCols(6);
  const Eigen::MatrixXd v = phi.rightCols(6);
  const Eigen::MatrixXd ga = a.vectors().transpose() * a.vectors();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      EXPECT_NEAR(u.col(i).dot(u.col(j)), ga(i, j) * std::cos(2 * theta), 1e-10);
      EXPECT_NEAR(u.col(i).dot(v.col(j)), -ga(i, j) * std::sin(2 * theta), 1e-10);
    }
  }
  const Eigen::MatrixXd m = -v.fullPivLu().solve(u);
  const double diag0 = m(0, 0);
  EXPECT_NEAR(std::abs(diag0), 1.0, 1e-10);
  for (int k = 0; k < 6; ++k) {
    EXPECT_NEAR(m(k, k), diag0, 1e-10);
    Eigen::VectorXd z = Eigen::VectorXd::Zero(12);
    z(k) = 1.0;
    z.tail(6) = m.col(k);
    EXPECT_LT((phi * z).norm(), 1e-10);
  }
  const Eigen::MatrixXd g = gram(lifted.packing).entries() - Eigen::MatrixXd::Identity(12, 12);
  EXPECT_LT((lifted.certificate - g).cwiseAbs().maxCoeff(), 1e-12);
  const CertificateReport r = check_certificate(lifted.packing, lifted.certificate);
  EXPECT_EQ(r.verdict, Verdict::kCertified);
  EXPECT_NEAR(r.dual_value, g.cwiseAbs().maxCoeff(), 1e-9);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EXPECT_NE(check_certificate(Perturb(lifted.packing, 1e-3, seed), lifted.certificate).verdict,
              Verdict::kCertified);
  }
}

TEST(LiftedEtf, Errors) {
  try {
    lifted_etf(build("7,28"), std::numbers::pi / 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kWrongRatio);
  }
  try {
    lifted_etf(build("3,6"), 0.3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBadTheta);
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 4);
  m << 1, 0, 1, 1, 0, 1, 1, -1;
  m.colwise().normalize();
  try {
    lifted_etf(RealPacking(m), std::numbers::pi / 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotEtf);
  }
}

TEST(SearchCertificate, FindsKnownCertificates) {
  EXPECT_EQ(search_certificate(build("6,15")).verdict, Verdict::kCertified);
  EXPECT_EQ(search_certificate(build("6,12")).verdict, Verdict::kCertified);
}

TEST(SearchCertificate, NeverCertifiesPerturbed) {
  const RealPacking q = Perturb(build("6,15"), 1e-3, 4);
  EXPECT_NE(search_certificate(q).verdict, Verdict::kCertified);
}

}  // namespace
}  // namespace packlab
