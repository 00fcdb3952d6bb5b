#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include <unistd.h>

#include <gtest/gtest.h>

#include "packlab/catalog.hpp"
#include "packlab/certify.hpp"
#include "packlab/error.hpp"
#include "packlab/io.hpp"
#include "support/oracles.hpp"

namespace packlab {
namespace {

// Hand transcription of the printed summary table: d, n, coherence times 1e4
// (rounded up), minimal polynomial (descending), optimality tag, number of
// angles, tight.
struct PrintedRow {
  int d;
  int n;
  int code;
  std::vector<std::int64_t> poly;
  const char* opt;
  int angles;
  bool tight;
};

const std::vector<PrintedRow>& PrintedTable() {
  static const std::vector<PrintedRow> rows = {
      {3, 5, 4473, {5, 0, -1}, "C", 1, false},
      {3, 6, 4473, {5, 0, -1}, "W", 1, true},
      {3, 7, 5774, {3, 0, -1}, "O", 3, true},
      {3, 12, 7446, {17, -14, 1}, "", 3, true},
      {4, 6, 3334, {3, -1}, "C", 1, false},
      {4, 12, 5000, {2, -1}, "O", 2, true},
      {4, 60, 8091, {4, -2, -1}, "D", 4, true},
      {5, 7, 2863, {1, -9, -1, 1}, "", 1, false},
      {5, 10, 3334, {3, -1}, "W", 1, true},
      {5, 16, 4473, {5, 0, -1}, "O", 3, true},
      {5, 20, 5000, {2, -1}, "", 2, true},
      {6, 8, 2410, {106, -264, -53, 84, 20, -4, -1}, "", 2, false},
      {6, 12, 3163, {10, 0, -1}, "L", 2, true},
      {6, 15, 3334, {3, -1}, "L", 1, false},
      {6, 16, 3334, {3, -1}, "W", 1, true},
      {6, 22, 4083, {6, 0, -1}, "O", 3, true},
      {6, 24, 4445, {9, -4}, "", 4, true},
      {6, 36, 5000, {2, -1}, "D", 2, true},
      {6, 63, 6124, {8, 0, -3}, "", 4, true},
      {7, 9, 2000, {5, -1}, "", 1, false},
      {7, 10, 2361, {1, 4, -1}, "", 1, false},
      {7, 14, 2774, {13, 0, -1}, "", 1, true},
      {7, 27, 3334, {3, -1}, "L", 1, false},
      {7, 28, 3334, {3, -1}, "W", 1, true},
      {7, 36, 4286, {7, -3}, "", 2, true},
      {7, 63, 5000, {2, -1}, "D", 2, true},
      {7, 91, 5774, {3, 0, -1}, "", 4, true},
      {8, 10, 1828, {19, 2, -1}, "", 1, false},
      {8, 32, 3334, {3, -1}, "", 2, true},
      {8, 36, 3572, {14, -5}, "", 2, true},
      {8, 120, 5000, {2, -1}, "D", 2, true},
      {9, 12, 1828, {19, 2, -1}, "", 1, false},
      {9, 18, 2426, {17, 0, -1}, "W", 1, true},
      {9, 48, 3334, {3, -1}, "O", 2, true},
      {10, 12, 1429, {7, -1}, "", 1, false},
      {10, 16, 2000, {5, -1}, "W", 1, true},
      {10, 20, 2358, {18, 0, -1}, "L", 2, true},
      {10, 40, 3077, {13, -4}, "", 3, true},
      {11, 14, 1578, {1, 21, 3, -1}, "", 1, false},
      {11, 16, 1784, {9, 4, -1}, "", 1, false},
      {11, 18, 2000, {5, -1}, "", 1, false},
      {12, 36, 2500, {4, -1}, "", 2, true},
      {12, 39, 2500, {4, -1}, "", 2, true},
      {13, 15, 1112, {9, -1}, "", 1, false},
      {13, 18, 1590, {27, 2, -1}, "", 1, false},
      {13, 19, 1663, {31, 25, 1, -1}, "", 1, false},
      {13, 26, 2000, {5, -1}, "W", 1, true},
      {13, 52, 2500, {4, -1}, "", 2, true},
      {15, 18, 1149, {41, 4, -1}, "", 1, false},
      {15, 21, 1429, {7, -1}, "", 1, false},
      {15, 30, 1857, {29, 0, -1}, "W", 1, true},
      {15, 35, 2000, {5, -1}, "L", 1, false},
      {15, 36, 2000, {5, -1}, "W", 1, true},
      {16, 18, 910, {11, -1}, "", 1, false},
      {16, 23, 1429, {7, -1}, "", 1, false},
      {16, 40, 2000, {5, -1}, "L", 1, false},
  };
  return rows;
}

class ScopedDataDir {
 public:
  ScopedDataDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("packlab_catalog_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~ScopedDataDir() { std::filesystem::remove_all(path_); }

  std::string path() const { return path_.string(); }
  void put(const std::string& name, const Graph& g) const {
    std::ofstream out(path_ / name);
    write_graph(out, g);
  }

 private:
  std::filesystem::path path_;
};

void WriteFixtures(const ScopedDataDir& dir) {
  dir.put("srg_36_14_7_4.txt", oracle::triangular(9));
  dir.put("srg_35_18_9_9.txt", oracle::pg32_line_graph());
  dir.put("srg_40_27_18_18.txt", oracle::symplectic_noncollinearity_graph());
}

TEST(Catalog, MatchesPrintedTable) {
  const auto& rows = PrintedTable();
  ASSERT_EQ(catalog().size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CatalogEntry& e = catalog()[i];
    const PrintedRow& r = rows[i];
    SCOPED_TRACE(e.key());
    EXPECT_EQ(e.d, r.d);
    EXPECT_EQ(e.n, r.n);
    EXPECT_EQ(e.mu_code, r.code);
    EXPECT_EQ(e.minimal_polynomial.coefficients(),
              IntPolynomial::from_descending(r.poly).coefficients());
    EXPECT_EQ(e.opt, r.opt);
    EXPECT_EQ(e.angles, r.angles);
    EXPECT_EQ(e.tight, r.tight);
  }
}

TEST(Catalog, Availability) {
  std::map<Availability, int> counts;
  for (const CatalogEntry& e : catalog()) ++counts[e.availability];
  EXPECT_GE(counts[Availability::kBuiltin], 24);
  EXPECT_EQ(counts[Availability::kExternal], 3);
  EXPECT_EQ(catalog_entry(7, 36).availability, Availability::kOutOfScope);
  for (const char* key : {"8,36", "15,35", "16,40"}) {
    EXPECT_EQ(catalog_entry(key).availability, Availability::kExternal) << key;
  }
  for (const char* key : {"7,14", "9,18", "10,16", "13,26", "15,30", "15,36"}) {
    EXPECT_EQ(catalog_entry(key).availability, Availability::kReferenceOnly) << key;
  }
}

TEST(Catalog, LookupErrors) {
  for (const char* key : {"99,100", "7,36", "7,14", "nonsense", "7,9"}) {
    try {
      build(key);
      FAIL() << key;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kUnknownKey) << key;
    }
  }
  EXPECT_EQ(&catalog_entry(catalog_entry("6,24").builder), &catalog_entry(6, 24));
}

TEST(Catalog, BuiltinEntriesPassTheirExpectations) {
  for (const CatalogEntry& e : catalog()) {
    if (e.availability != Availability::kBuiltin) continue;
    SCOPED_TRACE(e.key());
    const RealPacking p = build(e.key());
    EXPECT_EQ(p.dim(), e.d);
    EXPECT_EQ(p.size(), e.n);
    // Independent evaluation of the printed expectations.
    const double mu = oracle::naive_coherence(p.vectors());
    const IntPolynomial& poly = e.minimal_polynomial;
    EXPECT_LT(std::abs(poly(mu)) / poly.scale_at(mu), 1e-9);
    EXPECT_EQ(static_cast<int>(std::ceil(mu * 1e4 - 1e-7)), e.mu_code);
    const Eigen::MatrixXd frame = p.vectors() * p.vectors().transpose();
    const double c = static_cast<double>(e.n) / e.d;
    const bool tight = (frame - c * Eigen::MatrixXd::Identity(e.d, e.d)).cwiseAbs().maxCoeff() < 1e-9 * c;
    EXPECT_EQ(tight, e.tight);
    const EntryCheck check = check_entry(e, p);
    EXPECT_TRUE(check.passed());
    EXPECT_EQ(check.angles, e.angles);
  }
}

TEST(Catalog, NoRepeatedLines) {
  for (const CatalogEntry& e : catalog()) {
    if (e.availability != Availability::kBuiltin) continue;
    SCOPED_TRACE(e.key());
    const RealPacking p = build(e.key());
    EXPECT_LT(oracle::naive_coherence(p.vectors()), 1.0 - 1e-9);
  }
}

TEST(Catalog, SporadicValues) {
  EXPECT_NEAR(coherence(build("3,12")), (7.0 + 4.0 * std::sqrt(2.0)) / 17.0, 1e-12);
  EXPECT_NEAR(coherence(build("4,60")), (1.0 + std::sqrt(5.0)) / 4.0, 1e-12);
  EXPECT_NEAR(coherence(build("6,24")), 4.0 / 9.0, 1e-12);
  EXPECT_NEAR(coherence(build("10,40")), 4.0 / 13.0, 1e-12);
  EXPECT_NEAR(coherence(build("8,32")), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(coherence(build("6,63")), std::sqrt(3.0 / 8.0), 1e-12);
  EXPECT_NEAR(coherence(build("7,91")), 1.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(coherence(build("5,16")), 1.0 / std::sqrt(5.0), 1e-12);
  EXPECT_EQ(catalog_entry(5, 16).opt, "O");
}

TEST(Catalog, RootLatticeCounts) {
  EXPECT_EQ(build("8,120").size(), 120);
  EXPECT_EQ(build("7,63").size(), 63);
  EXPECT_EQ(build("6,36").size(), 36);
}

TEST(Catalog, McFarlandMarriage) {
  const RealPacking p = build("6,22");
  const Eigen::MatrixXd& m = p.vectors();
  int signed_columns = 0;
  int axis_columns = 0;
  for (int j = 0; j < 22; ++j) {
    const Eigen::ArrayXd a = m.col(j).array().abs();
    if ((a - 1.0 / std::sqrt(6.0)).abs().maxCoeff() < 1e-12) {
      ++signed_columns;
    } else if ((a > 1e-12).count() == 1) {
      ++axis_columns;
    }
  }
  EXPECT_EQ(signed_columns, 16);
  EXPECT_EQ(axis_columns, 6);
  for (int i = 0; i < 22; ++i) {
    for (int j = 0; j < 22; ++j) {
      const bool cross = ((m.col(i).array().abs() > 1e-12).count() == 1) !=
                         ((m.col(j).array().abs() > 1e-12).count() == 1);
      if (cross) EXPECT_NEAR(std::abs(m.col(i).dot(m.col(j))), 1.0 / std::sqrt(6.0), 1e-12);
    }
  }
}

TEST(Catalog, ConjecturedGrams) {
  const RealGram g5 = conjectured_gram(5);
  EXPECT_EQ(g5.order(), 7);
  EXPECT_EQ(g5.rank(), 5);
  EXPECT_TRUE(g5.is_psd());
  EXPECT_NEAR(g5.coherence(), conjectured_a(), 1e-15);
  EXPECT_EQ(coherence_code(conjectured_a()), 2863);
  const RealGram g6 = conjectured_gram(6);
  EXPECT_EQ(g6.order(), 8);
  EXPECT_EQ(g6.rank(), 6);
  EXPECT_TRUE(g6.is_psd());
  EXPECT_NEAR(g6.coherence(), conjectured_b(), 1e-15);
  EXPECT_EQ(coherence_code(conjectured_b()), 2410);
  EXPECT_GT(conjectured_c(), 0.0);
  EXPECT_LT(conjectured_c(), conjectured_b());
  try {
    conjectured_gram(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnsupportedD);
  }
}

TEST(Catalog, MissingExternalData) {
  ::unsetenv("PACKLAB_DATA");
  for (const char* key : {"8,36", "15,35", "16,40"}) {
    try {
      build(key);
      FAIL() << key;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kMissingExternalData) << key;
    }
  }
}

TEST(Catalog, FixtureGraphsAreStronglyRegular) {
  const std::vector<std::pair<Graph, SrgParameters>> cases = {
      {oracle::triangular(9), {36, 14, 7, 4}},
      {oracle::pg32_line_graph(), {35, 18, 9, 9}},
      {oracle::symplectic_noncollinearity_graph(), {40, 27, 18, 18}},
  };
  for (const auto& [g, params] : cases) {
    const oracle::SrgCounts c = oracle::srg_counts(g);
    EXPECT_EQ(g.order(), params.v);
    EXPECT_TRUE(c.regular);
    EXPECT_EQ(c.k, params.k);
    EXPECT_EQ(c.lambdas, std::set<int>{params.lambda});
    EXPECT_EQ(c.mus, std::set<int>{params.mu});
  }
}

TEST(Catalog, ExternalEntriesFromFixtures) {
  const ScopedDataDir dir;
  WriteFixtures(dir);
  const CatalogOptions options{dir.path()};
  for (const char* key : {"8,36", "15,35", "16,40"}) {
    SCOPED_TRACE(key);
    const CatalogEntry& e = catalog_entry(key);
    const RealPacking p = build(key, options);
    EXPECT_EQ(p.dim(), e.d);
    EXPECT_EQ(p.size(), e.n);
    EXPECT_TRUE(check_entry(e, p).passed());
  }
  EXPECT_NEAR(coherence(build("8,36", options)), 5.0 / 14.0, 1e-12);
  const Table1Report report = table1_report(options);
  EXPECT_EQ(report.failed(), 0);
  EXPECT_EQ(report.built(), 34);
}

TEST(Catalog, ExternalFileWithWrongParameters) {
  const ScopedDataDir dir;
  dir.put("srg_35_18_9_9.txt", oracle::triangular(9));
  try {
    build("15,35", CatalogOptions{dir.path()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotStronglyRegular);
  }
}

TEST(Catalog, RegressionReportWithoutData) {
  ::unsetenv("PACKLAB_DATA");
  const Table1Report report = table1_report();
  EXPECT_EQ(report.rows.size(), catalog().size());
  EXPECT_EQ(report.failed(), 0);
  EXPECT_GE(report.passed(), 24);
  EXPECT_EQ(report.built() + report.skipped(), static_cast<int>(catalog().size()));
  for (const ReportRow& row : report.rows) {
    if (!row.built) {
      EXPECT_FALSE(row.skip_reason.empty()) << row.entry->key();
    }
  }
}

TEST(Catalog, CoherenceCode) {
  EXPECT_EQ(coherence_code(0.5), 5000);
  EXPECT_EQ(coherence_code(1.0 / 3.0), 3334);
  EXPECT_EQ(coherence_code(0.25 + 1e-15), 2500);
  EXPECT_EQ(coherence_code(4.0 / 13.0), 3077);
}

}  // namespace
}  // namespace packlab
