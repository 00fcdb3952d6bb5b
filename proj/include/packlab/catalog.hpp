#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packlab/algebra.hpp"
#include "packlab/frames.hpp"

namespace packlab {

enum class Availability {
  kBuiltin,        // exact construction shipped with the library
  kExternal,       // needs a strongly regular graph from the data directory
  kUnprinted,      // perfected equiangular packing whose sign pattern is not known
  kReferenceOnly,  // known ETF family, not rebuilt here
  kOutOfScope,
};

std::string to_string(Availability a);

struct CatalogEntry {
  int d = 0;
  int n = 0;
  std::string builder;
  int mu_code = 0;  // printed coherence times 1e4, rounded up
  IntPolynomial minimal_polynomial;
  std::string opt;  // C, W, O, D, L or empty
  int angles = 0;
  bool tight = false;
  std::string notes;
  Availability availability = Availability::kBuiltin;
  std::string data_file;  // for kExternal

  std::string key() const { return std::to_string(d) + "," + std::to_string(n); }
};

// All rows of the low-dimensional summary table, ascending in (d, n).
const std::vector<CatalogEntry>& catalog();

// Looks up "d,n" or a builder name. Throws Errc::kUnknownKey.
const CatalogEntry& catalog_entry(const std::string& key);
const CatalogEntry& catalog_entry(int d, int n);

struct CatalogOptions {
  // Directory holding srg_<v>_<k>_<lambda>_<mu>.txt adjacency files. Empty
  // means the PACKLAB_DATA environment variable.
  std::string data_dir;
};

// Throws Errc::kUnknownKey for missing or non-buildable keys and
// Errc::kMissingExternalData when an adjacency file is needed but absent.
RealPacking build(const std::string& key, const CatalogOptions& options = {});
RealPacking build(int d, int n, const CatalogOptions& options = {});

// Exact-pattern Gram matrices for 7 lines in R^5 and 8 lines in R^6.
// Throws Errc::kUnsupportedD for other d.
RealGram conjectured_gram(int d);

// Coherence values appearing in the 5- and 6-dimensional Gram patterns.
double conjectured_a();
double conjectured_b();
double conjectured_c();

// The 4 x 6 equiangular Gram matrix at mu = 1/3, as integers times 1/3.
Eigen::MatrixXi gram_6in4_pattern();

struct EntryCheck {
  double mu = 0.0;
  double residual = 0.0;
  int mu_code = 0;
  int angles = 0;
  bool tight = false;
  bool residual_ok = false;
  bool code_ok = false;
  bool angles_ok = false;
  bool tight_ok = false;

  bool passed() const { return residual_ok && code_ok && angles_ok && tight_ok; }
};

// Compares a packing against a row's printed expectations: minimal-polynomial
// residual below 1e-9, rounded-up coherence code, angle count, tightness.
EntryCheck check_entry(const CatalogEntry& entry, const RealPacking& p);

// ceil(mu * 1e4) with a 1e-7 guard against values just above a multiple.
int coherence_code(double mu);

struct ReportRow {
  const CatalogEntry* entry = nullptr;
  bool built = false;
  std::string skip_reason;
  std::string error;
  EntryCheck check;
  double seconds = 0.0;
};

struct Table1Report {
  std::vector<ReportRow> rows;

  int built() const;
  int passed() const;
  int failed() const;
  int skipped() const;
};

// Never throws: build failures are reported per row.
Table1Report table1_report(const CatalogOptions& options = {});

}  // namespace packlab
