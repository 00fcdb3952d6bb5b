#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "packlab/catalog.hpp"
#include "packlab/error.hpp"
#include "packlab/incidence.hpp"

namespace packlab {
namespace {

int Meet(const std::vector<int>& a, const std::vector<int>& b) {
  int c = 0;
  for (int x : a) c += std::count(b.begin(), b.end(), x);
  return c;
}

TEST(Planes, Fano) {
  const IncidenceStructure c = projective_plane(2);
  EXPECT_EQ(c.num_points(), 7);
  EXPECT_EQ(c.num_lines(), 7);
  EXPECT_EQ(c.uniformity(), 3);
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) EXPECT_EQ(Meet(c.lines()[i], c.lines()[j]), 1);
  }
  // Every pair of points lies on exactly one line.
  for (int p = 0; p < 7; ++p) {
    for (int q = p + 1; q < 7; ++q) {
      int count = 0;
      for (const auto& l : c.lines()) count += Meet(l, {p}) && Meet(l, {q});
      EXPECT_EQ(count, 1);
    }
  }
  EXPECT_EQ(c.intersection_numbers(), std::set<int>{1});
}

TEST(Planes, AffineThree) {
  const IncidenceStructure c = affine_plane(3);
  EXPECT_EQ(c.num_points(), 9);
  EXPECT_EQ(c.num_lines(), 12);
  EXPECT_EQ(c.uniformity(), 3);
  EXPECT_EQ(c.intersection_numbers(), (std::set<int>{0, 1}));
  for (int i = 0; i < 12; ++i) {
    int parallel = 0;
    for (int j = 0; j < 12; ++j) parallel += i != j && Meet(c.lines()[i], c.lines()[j]) == 0;
    EXPECT_EQ(parallel, 2);
  }
}

TEST(Planes, AxiomsForLargerPrimes) {
  for (int q : {3, 5, 7}) {
    const IncidenceStructure p = projective_plane(q);
    EXPECT_EQ(p.num_points(), q * q + q + 1);
    EXPECT_EQ(p.num_lines(), q * q + q + 1);
    EXPECT_EQ(p.uniformity(), q + 1);
    EXPECT_EQ(p.intersection_numbers(), std::set<int>{1});
    const IncidenceStructure a = affine_plane(q);
    EXPECT_EQ(a.num_points(), q * q);
    EXPECT_EQ(a.num_lines(), q * (q + 1));
    EXPECT_EQ(a.uniformity(), q);
  }
}

TEST(Planes, NotPrime) {
  for (int q : {4, 6}) {
    try {
      projective_plane(q);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kNotPrime);
    }
    try {
      affine_plane(q);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kNotPrime);
    }
  }
}

TEST(Dual, Properties) {
  const IncidenceStructure p = projective_plane(3);
  const IncidenceStructure dp = dual(p);
  EXPECT_EQ(dp.num_points(), p.num_lines());
  EXPECT_EQ(dp.num_lines(), p.num_points());
  EXPECT_EQ(dp.uniformity(), 4);
  const IncidenceStructure da = dual(affine_plane(3));
  EXPECT_EQ(da.num_points(), 12);
  EXPECT_EQ(da.num_lines(), 9);
  EXPECT_EQ(da.uniformity(), 4);
  EXPECT_EQ(da.intersection_numbers(), std::set<int>{1});
  EXPECT_EQ(dual(dual(affine_plane(3))), affine_plane(3));
  EXPECT_EQ(dual(dual(p)), p);
}

TEST(StarProduct, LawOnProjectiveThree) {
  const IncidenceStructure c = projective_plane(3);
  const Eigen::MatrixXd h = hadamard(4).matrix.cast<double>();
  const Eigen::MatrixXd raw = star_product_raw(c, h);
  ASSERT_EQ(raw.rows(), 13);
  ASSERT_EQ(raw.cols(), 52);
  const Eigen::MatrixXd g = raw.transpose() * raw;
  std::set<long> values;
  for (int a = 0; a < 52; ++a) {
    for (int b = 0; b < 52; ++b) {
      const double v = g(a, b);
      EXPECT_EQ(v, std::round(v));
      if (a == b) {
        EXPECT_EQ(v, 4.0);
        continue;
      }
      values.insert(std::lround(std::abs(v)));
      const int la = a / 4;
      const int lb = b / 4;
      const double expected = la == lb ? std::abs(h.col(a % 4).dot(h.col(b % 4)))
                                       : Meet(c.lines()[la], c.lines()[lb]);
      EXPECT_EQ(std::abs(v), expected);
    }
  }
  EXPECT_TRUE(std::includes(std::set<long>{0, 1, 4}.begin(), std::set<long>{0, 1, 4}.end(),
                            values.begin(), values.end()));
}

TEST(StarProduct, CompleteGraphGivesD5) {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) edges.push_back({i, j});
  }
  const IncidenceStructure k5(5, edges);
  const RealPacking p = star_product(k5, hadamard(2).matrix.cast<double>());
  EXPECT_EQ(p.dim(), 5);
  EXPECT_EQ(p.size(), 20);
  EXPECT_NEAR(coherence(p), 0.5, 1e-14);
  const CatalogEntry& e = catalog_entry(5, 20);
  EXPECT_TRUE(minimal_poly_check(coherence(p), e.minimal_polynomial, 1e-12));
  // The columns times sqrt 2 are the 20 antipodal classes of D5 minimal vectors.
  for (int j = 0; j < 20; ++j) {
    const Eigen::VectorXd v = p.column(j) * std::sqrt(2.0);
    EXPECT_NEAR(v.cwiseAbs().sum(), 2.0, 1e-12);
    EXPECT_EQ((v.array().abs() > 0.5).count(), 2);
  }
}

TEST(StarProduct, Errors) {
  const IncidenceStructure p = projective_plane(3);
  Eigen::MatrixXd bad = hadamard(4).matrix.cast<double>();
  bad(0, 0) = 2.0;
  try {
    star_product_raw(p, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBadVectorNorms);
  }
  const IncidenceStructure mixed(4, {{0, 1}, {1, 2, 3}});
  try {
    star_product_raw(mixed, hadamard(2).matrix.cast<double>());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBadUniformity);
  }
  const IncidenceStructure doubled(4, {{0, 1, 2}, {0, 1, 3}});
  try {
    star_product_raw(doubled, Eigen::MatrixXd::Ones(3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBadIntersections);
  }
}

struct FamilyExpectation {
  Thm52Case which;
  int d;
  int n;
  int z;
  double mu;
};

TEST(Thm52, FamiliesAtThree) {
  const std::vector<FamilyExpectation> rows = {
      {Thm52Case::kPH, 13, 52, 3, 0.25},
      {Thm52Case::kAHminus, 9, 48, 8, 1.0 / 3.0},
      {Thm52Case::kAstarH, 12, 36, 3, 0.25},
      {Thm52Case::kPHminusT, 12, 39, 2, 0.25},
  };
  for (const auto& row : rows) {
    SCOPED_TRACE(to_string(row.which));
    const Thm52Report r = thm52(row.which, 3);
    EXPECT_EQ(r.d, row.d);
    EXPECT_EQ(r.n, row.n);
    EXPECT_EQ(r.z, row.z);
    EXPECT_EQ(thm52_expected_z(row.which, 3), row.z);
    EXPECT_TRUE(r.tight);
    EXPECT_TRUE(r.orthobiangular);
    EXPECT_NEAR(r.coherence, row.mu, 1e-12);
    EXPECT_NEAR(mu_from_z(r.d, r.n, r.z), row.mu, 1e-12);
    EXPECT_NEAR(r.frobenius_sq, r.frobenius_target, 1e-8 * r.frobenius_target);
    // Independent check of tightness and zero counts from the raw columns.
    const Eigen::MatrixXd g = r.raw.transpose() * r.raw;
    EXPECT_NEAR(g.squaredNorm(), static_cast<double>(r.k) * r.k * r.n * r.n / r.d,
                1e-8 * g.squaredNorm());
    for (int j = 0; j < r.n; ++j) EXPECT_EQ((g.col(j).array().abs() < 1e-9).count(), row.z);
    const CatalogEntry& e = catalog_entry(row.d, row.n);
    EXPECT_EQ(coherence_code(r.coherence), e.mu_code);
  }
}

TEST(Thm52, ZeroCountsAtSeven) {
  for (Thm52Case which : {Thm52Case::kPH, Thm52Case::kPHminusT, Thm52Case::kAHminus, Thm52Case::kAstarH}) {
    const Thm52Report r = thm52(which, 7);
    EXPECT_EQ(r.z, thm52_expected_z(which, 7));
    EXPECT_TRUE(r.tight);
    EXPECT_LT(r.welch_ratio, thm52(which, 3).welch_ratio);
  }
  EXPECT_EQ(thm52_expected_z(Thm52Case::kPH, 7), 7);
  EXPECT_EQ(thm52_expected_z(Thm52Case::kPHminusT, 7), 6);
  EXPECT_EQ(thm52_expected_z(Thm52Case::kAHminus, 7), 48);
  EXPECT_EQ(thm52_expected_z(Thm52Case::kAstarH, 7), 7);
}

TEST(Thm52, PHminusTLiesInHyperplane) {
  const Thm52Report r = thm52(Thm52Case::kPHminusT, 3);
  // The raw columns live in R^13 before the hyperplane coordinates are taken,
  // so check orthogonality through the Gram: rank d.
  EXPECT_EQ(r.d, 12);
  EXPECT_EQ(gram(r.packing).rank(), 12);
}

TEST(Thm52, UnsupportedQ) {
  for (int q : {5, 4}) {
    try {
      thm52(Thm52Case::kPH, q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kUnsupportedQ);
    }
  }
}

TEST(Thm52, CaseNames) {
  EXPECT_EQ(parse_thm52_case("P"), Thm52Case::kPH);
  EXPECT_EQ(parse_thm52_case("PT"), Thm52Case::kPHminusT);
  EXPECT_EQ(parse_thm52_case("A"), Thm52Case::kAHminus);
  EXPECT_EQ(parse_thm52_case("AS"), Thm52Case::kAstarH);
  EXPECT_EQ(parse_thm52_case(to_string(Thm52Case::kAstarH)), Thm52Case::kAstarH);
}

TEST(MuFromZ, Values) {
  EXPECT_NEAR(mu_from_z(13, 52, 3), 0.25, 1e-15);
  EXPECT_NEAR(mu_from_z(9, 48, 8), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(mu_from_z(13, 52, 0), welch_bound(13, 52).value, 1e-15);
  try {
    mu_from_z(13, 52, 51);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidZ);
  }
}

TEST(Integrality, Values) {
  const IntegrityReport a = obtf_integrality(13, 52, 3);
  EXPECT_EQ(a.first, Rational(16));
  EXPECT_EQ(a.second, Rational(144));
  EXPECT_TRUE(a.integral);
  const IntegrityReport b = obtf_integrality(13, 52, 0);
  EXPECT_EQ(b.first, Rational(17));
  EXPECT_FALSE(b.integral);
  try {
    obtf_integrality(6, 12, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kHalfCase);
  }
}

// Perfect-square test on exact rationals, reduced form.
bool SquareRational(const Rational& r) {
  if (r < 0) return false;
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const BigInt sn = boost::multiprecision::sqrt(num);
  const BigInt sd = boost::multiprecision::sqrt(den);
  return sn * sn == num && sd * sd == den && sd == 1;
}

TEST(Minimality, ScansAtThree) {
  const std::vector<std::pair<Thm52Case, std::vector<int>>> expected = {
      {Thm52Case::kPH, {0, 1, 2}},
      {Thm52Case::kAHminus, {0, 1, 2, 3, 4, 5, 6, 7}},
      {Thm52Case::kPHminusT, {0, 1}},
  };
  for (const auto& [which, checked] : expected) {
    const MinimalityReport m = minimality_scan(which, 3);
    EXPECT_EQ(m.checked, checked);
    EXPECT_TRUE(m.integral.empty());
    EXPECT_TRUE(m.minimal);
    const Thm52Report r = thm52(which, 3);
    for (int z : checked) {
      const Rational first = Rational(r.d * (r.n - z - 1)) / (r.n - r.d);
      const Rational second = Rational((r.n - r.d) * (r.n - z - 1)) / r.d;
      EXPECT_FALSE(SquareRational(first) && SquareRational(second)) << z;
    }
  }
}

}  // namespace
}  // namespace packlab
