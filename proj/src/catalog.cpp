#include "packlab/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "packlab/certify.hpp"
#include "packlab/error.hpp"
#include "packlab/incidence.hpp"
#include "packlab/io.hpp"

namespace packlab {

std::string to_string(Availability a) {
  switch (a) {
    case Availability::kBuiltin:
      return "builtin";
    case Availability::kExternal:
      return "external";
    case Availability::kUnprinted:
      return "unprinted";
    case Availability::kReferenceOnly:
      return "reference-only";
    case Availability::kOutOfScope:
      break;
  }
  return "out-of-scope";
}

namespace {

using A = Availability;

CatalogEntry row(int d, int n, std::string builder, int code, std::vector<std::int64_t> poly,
                 std::string opt, int angles, bool tight, std::string notes,
                 Availability availability = A::kBuiltin, std::string data_file = "") {
  CatalogEntry e;
  e.d = d;
  e.n = n;
  e.builder = std::move(builder);
  e.mu_code = code;
  e.minimal_polynomial = IntPolynomial::from_descending(std::move(poly));
  e.opt = std::move(opt);
  e.angles = angles;
  e.tight = tight;
  e.notes = std::move(notes);
  e.availability = availability;
  e.data_file = std::move(data_file);
  return e;
}

std::vector<CatalogEntry> make_catalog() {
  return {
      row(3, 5, "icosahedron-5", 4473, {5, 0, -1}, "C", 1, false, "equiangular"),
      row(3, 6, "icosahedron", 4473, {5, 0, -1}, "W", 1, true, "ETF"),
      row(3, 7, "marriage-3-7", 5774, {3, 0, -1}, "O", 3, true, "marriage"),
      row(3, 12, "rhombicuboctahedron", 7446, {17, -14, 1}, "", 3, true, "rhombicuboctahedron"),
      row(4, 6, "gram-6in4", 3334, {3, -1}, "C", 1, false, "equiangular"),
      row(4, 12, "real-mub-4", 5000, {2, -1}, "O", 2, true, "mutually unbiased bases"),
      row(4, 60, "600-cell", 8091, {4, -2, -1}, "D", 4, true, "600-cell"),
      row(5, 7, "conjectured-5", 2863, {1, -9, -1, 1}, "", 1, false, "provably optimal?"),
      row(5, 10, "etf-5-10", 3334, {3, -1}, "W", 1, true, "ETF"),
      row(5, 16, "marriage-5-16", 4473, {5, 0, -1}, "O", 3, true, "marriage"),
      row(5, 20, "d5", 5000, {2, -1}, "", 2, true, "D5"),
      row(6, 8, "conjectured-6", 2410, {106, -264, -53, 84, 20, -4, -1}, "", 2, false,
          "provably optimal?"),
      row(6, 12, "lifted-3-6", 3163, {10, 0, -1}, "L", 2, true, "lifted ETF"),
      row(6, 15, "srg-15-8-4-4", 3334, {3, -1}, "L", 1, false, "srg(15,8,4,4)"),
      row(6, 16, "mcfarland", 3334, {3, -1}, "W", 1, true, "ETF"),
      row(6, 22, "marriage-6-22", 4083, {6, 0, -1}, "O", 3, true, "marriage"),
      row(6, 24, "misfit-6-24", 4445, {9, -4}, "", 4, true, "misfit"),
      row(6, 36, "e6", 5000, {2, -1}, "D", 2, true, "E6"),
      row(6, 63, "marriage-6-63", 6124, {8, 0, -3}, "", 4, true, "marriage"),
      row(7, 9, "", 2000, {5, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(7, 10, "", 2361, {1, 4, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(7, 14, "", 2774, {13, 0, -1}, "", 1, true, "ETF", A::kReferenceOnly),
      row(7, 27, "srg-27-16-10-8", 3334, {3, -1}, "L", 1, false, "srg(27,16,10,8)"),
      row(7, 28, "etf-7-28", 3334, {3, -1}, "W", 1, true, "ETF"),
      row(7, 36, "", 4286, {7, -3}, "", 2, true, "misfit", A::kOutOfScope),
      row(7, 63, "e7", 5000, {2, -1}, "D", 2, true, "E7"),
      row(7, 91, "marriage-7-91", 5774, {3, 0, -1}, "", 4, true, "marriage"),
      row(8, 10, "", 1828, {19, 2, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(8, 32, "misfit-8-32", 3334, {3, -1}, "", 2, true, "misfit"),
      row(8, 36, "srg-eigenspace-36", 3572, {14, -5}, "", 2, true, "misfit", A::kExternal,
          "srg_36_14_7_4.txt"),
      row(8, 120, "e8", 5000, {2, -1}, "D", 2, true, "E8"),
      row(9, 12, "", 1828, {19, 2, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(9, 18, "", 2426, {17, 0, -1}, "W", 1, true, "ETF", A::kReferenceOnly),
      row(9, 48, "obtf-A3-Hminus", 3334, {3, -1}, "O", 2, true, "(A2,H-)"),
      row(10, 12, "", 1429, {7, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(10, 16, "", 2000, {5, -1}, "W", 1, true, "ETF", A::kReferenceOnly),
      row(10, 20, "lifted-5-10", 2358, {18, 0, -1}, "L", 2, true, "lifted ETF"),
      row(10, 40, "petersen", 3077, {13, -4}, "", 3, true, "misfit"),
      row(11, 14, "", 1578, {1, 21, 3, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(11, 16, "", 1784, {9, 4, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(11, 18, "", 2000, {5, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(12, 36, "obtf-A3star-H", 2500, {4, -1}, "", 2, true, "(A3*,H)"),
      row(12, 39, "obtf-P3-HminusT", 2500, {4, -1}, "", 2, true, "(P3,H-^T)"),
      row(13, 15, "", 1112, {9, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(13, 18, "", 1590, {27, 2, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(13, 19, "", 1663, {31, 25, 1, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(13, 26, "", 2000, {5, -1}, "W", 1, true, "ETF", A::kReferenceOnly),
      row(13, 52, "obtf-P3-H", 2500, {4, -1}, "", 2, true, "(P3,H)"),
      row(15, 18, "", 1149, {41, 4, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(15, 21, "", 1429, {7, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(15, 30, "", 1857, {29, 0, -1}, "W", 1, true, "ETF", A::kReferenceOnly),
      row(15, 35, "srg-35-18-9-9", 2000, {5, -1}, "L", 1, false, "srg(35,18,9,9)",
          A::kExternal, "srg_35_18_9_9.txt"),
      row(15, 36, "", 2000, {5, -1}, "W", 1, true, "ETF", A::kReferenceOnly),
      row(16, 18, "", 910, {11, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(16, 23, "", 1429, {7, -1}, "", 1, false, "equiangular", A::kUnprinted),
      row(16, 40, "srg-40-27-18-18", 2000, {5, -1}, "L", 1, false, "srg(40,27,18,18)",
          A::kExternal, "srg_40_27_18_18.txt"),
  };
}

// ---------------------------------------------------------------------------
// Vector-set helpers

constexpr double kZero = 1e-12;

// One representative per line: the sign whose first nonzero coordinate is
// positive. Repeated lines are dropped; first occurrences keep their order.
Eigen::MatrixXd antipodal_representatives(const std::vector<Eigen::VectorXd>& vectors) {
  std::vector<Eigen::VectorXd> kept;
  for (Eigen::VectorXd v : vectors) {
    Eigen::Index first = 0;
    while (first < v.size() && std::abs(v(first)) <= kZero) ++first;
    if (first == v.size()) continue;
    if (v(first) < 0) v = -v;
    const bool seen = std::any_of(kept.begin(), kept.end(),
                                  [&](const Eigen::VectorXd& w) { return (w - v).norm() <= 1e-9; });
    if (!seen) kept.push_back(v);
  }
  Eigen::MatrixXd out(vectors.empty() ? 0 : vectors.front().size(), kept.size());
  for (size_t j = 0; j < kept.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = kept[j];
  return out;
}

Eigen::MatrixXd normalize_columns(Eigen::MatrixXd m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j).normalize();
  return m;
}

// All sign patterns of the nonzero entries of v.
std::vector<Eigen::VectorXd> signings(const Eigen::VectorXd& v) {
  std::vector<Eigen::Index> slots;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > kZero) slots.push_back(i);
  }
  std::vector<Eigen::VectorXd> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    Eigen::VectorXd w = v;
    for (size_t b = 0; b < slots.size(); ++b) {
      if (mask & (1u << b)) w(slots[b]) = -w(slots[b]);
    }
    out.push_back(w);
  }
  return out;
}

bool is_even(const std::vector<int>& perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    for (size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 == 0;
}

std::vector<Eigen::VectorXd> even_permutations(const Eigen::VectorXd& v) {
  std::vector<int> perm(static_cast<size_t>(v.size()));
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::vector<Eigen::VectorXd> out;
  do {
    if (!is_even(perm)) continue;
    Eigen::VectorXd w(v.size());
    for (size_t i = 0; i < perm.size(); ++i) w(static_cast<Eigen::Index>(i)) = v(perm[i]);
    out.push_back(w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Distinct permutations of a multiset, in lexicographic order.
std::vector<Eigen::VectorXd> permutations(std::vector<double> entries) {
  std::sort(entries.begin(), entries.end());
  std::vector<Eigen::VectorXd> out;
  do {
    out.push_back(Eigen::Map<const Eigen::VectorXd>(entries.data(),
                                                    static_cast<Eigen::Index>(entries.size())));
  } while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

Eigen::MatrixXd hadamard_d(int order) { return hadamard(order).matrix.cast<double>(); }

// Rows 2..order of the normalized Hadamard matrix.
Eigen::MatrixXd hadamard_minus(int order) { return hadamard_d(order).bottomRows(order - 1); }

Eigen::MatrixXd concat(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

// Coordinates of the columns of m in an orthonormal basis of the complement
// of span(constraints).
Eigen::MatrixXd restrict_to_complement(const Eigen::MatrixXd& m, const Eigen::MatrixXd& constraints) {
  return orthonormal_complement(constraints).transpose() * m;
}

// ---------------------------------------------------------------------------
// Builders

RealPacking build_icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::VectorXd> vs;
  for (const Eigen::Vector3d& base : {Eigen::Vector3d(0, 1, phi), Eigen::Vector3d(1, phi, 0),
                                     Eigen::Vector3d(phi, 0, 1)}) {
    for (const auto& s : signings(base)) vs.push_back(s);
  }
  return RealPacking(normalize_columns(antipodal_representatives(vs)));
}

RealPacking build_icosahedron5() {
  return RealPacking(build_icosahedron().vectors().leftCols(5));
}

RealPacking build_marriage_3_7() {
  return RealPacking(concat(hadamard_minus(4) / std::sqrt(3.0), Eigen::MatrixXd::Identity(3, 3)));
}

RealPacking build_rhombicuboctahedron() {
  std::vector<Eigen::VectorXd> vs;
  for (const auto& p : even_permutations(Eigen::Vector3d(1, 1, 1 + std::sqrt(2.0)))) {
    for (const auto& s : signings(p)) vs.push_back(s);
  }
  return RealPacking(normalize_columns(antipodal_representatives(vs)));
}

RealPacking build_gram_6in4() {
  const Eigen::MatrixXd g = gram_6in4_pattern().cast<double>() / 3.0;
  return factor_gram(RealGram(g), 4);
}

RealPacking build_real_mub4() {
  const Eigen::MatrixXd h = hadamard_d(4) / 2.0;
  Eigen::Vector4d bent(1, 1, 1, -1);
  Eigen::MatrixXd m(4, 12);
  m << Eigen::MatrixXd::Identity(4, 4), h, bent.asDiagonal() * h;
  return RealPacking(m);
}

RealPacking build_600_cell() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::VectorXd> vs;
  for (const auto& s : signings(Eigen::Vector4d(1, 1, 1, 1))) vs.push_back(s);
  for (const auto& p : permutations({2, 0, 0, 0})) {
    for (const auto& s : signings(p)) vs.push_back(s);
  }
  for (const auto& p : even_permutations(Eigen::Vector4d(phi, 1, 1 / phi, 0))) {
    for (const auto& s : signings(p)) vs.push_back(s);
  }
  return RealPacking(normalize_columns(antipodal_representatives(vs)));
}

RealPacking build_conjectured(int d) { return factor_gram(conjectured_gram(d), d); }

// Lines spanned by permutations of (1, 1, 1, -1, -1, -1), in R^6.
Eigen::MatrixXd etf_5_10_ambient() {
  return normalize_columns(antipodal_representatives(permutations({1, 1, 1, -1, -1, -1})));
}

RealPacking build_etf_5_10() {
  return RealPacking(restrict_to_complement(etf_5_10_ambient(), Eigen::VectorXd::Ones(6)));
}

RealPacking build_marriage_5_16() {
  const Eigen::MatrixXd simplex =
      normalize_columns(antipodal_representatives(permutations({5, -1, -1, -1, -1, -1})));
  return RealPacking(
      restrict_to_complement(concat(etf_5_10_ambient(), simplex), Eigen::VectorXd::Ones(6)));
}

RealPacking build_d5() {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) edges.push_back({i, j});
  }
  return star_product(IncidenceStructure(5, edges), hadamard_d(2));
}

RealPacking build_lifted(const RealPacking& etf) {
  return lifted_etf(etf, std::numbers::pi / 8).packing;
}

RealPacking build_t6() { return srg_packing(srg_data(triangular_graph(6))).packing; }

Eigen::MatrixXd mcfarland_rows() {
  // Row u is the character x -> (-1)^{u.x} of (Z/2Z)^4.
  Eigen::MatrixXd chars(16, 16);
  for (int u = 0; u < 16; ++u) {
    for (int x = 0; x < 16; ++x) chars(u, x) = (__builtin_popcount(u & x) % 2) ? -1.0 : 1.0;
  }
  const int set[] = {0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b1111};
  Eigen::MatrixXd out(6, 16);
  for (int r = 0; r < 6; ++r) out.row(r) = chars.row(set[r]);
  return out;
}

RealPacking build_mcfarland() {
  RealPacking p(mcfarland_rows() / std::sqrt(6.0));
  if (std::abs(coherence(p) - welch_bound(6, 16).value) > 1e-12) {
    throw Error(Errc::kNotEtf, "McFarland rows do not give an equiangular tight frame");
  }
  return p;
}

RealPacking build_marriage_6_22() {
  return RealPacking(concat(build_mcfarland().vectors(), Eigen::MatrixXd::Identity(6, 6)));
}

RealPacking build_misfit_6_24() {
  const Eigen::RowVector4d a(2, 2, 2, 2);
  const Eigen::RowVector4d b(2, -2, -1, 1);
  const Eigen::RowVector4d c(1, -1, 2, -2);
  const Eigen::RowVector4d z = Eigen::RowVector4d::Zero();
  const Eigen::RowVector4d blocks[6][6] = {
      {a, z, z, z, b, b},   {z, a, z, z, c, -c}, {b, b, a, z, z, z},
      {c, -c, z, a, z, z},  {z, z, b, b, a, z},  {z, z, c, -c, z, a},
  };
  Eigen::MatrixXd m(6, 24);
  for (int r = 0; r < 6; ++r) {
    for (int k = 0; k < 6; ++k) m.block(r, 4 * k, 1, 4) = blocks[r][k];
  }
  return RealPacking(m / 3.0);
}

// Minimal vectors of E8: +-e_i +- e_j and (+-1/2)^8 with an even number of
// minus signs.
std::vector<Eigen::VectorXd> e8_roots() {
  std::vector<Eigen::VectorXd> out;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          Eigen::VectorXd v = Eigen::VectorXd::Zero(8);
          v(i) = si;
          v(j) = sj;
          out.push_back(v);
        }
      }
    }
  }
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    Eigen::VectorXd v(8);
    for (int i = 0; i < 8; ++i) v(i) = (mask & (1u << i)) ? -0.5 : 0.5;
    out.push_back(v);
  }
  return out;
}

std::vector<Eigen::VectorXd> orthogonal_to(const std::vector<Eigen::VectorXd>& vs,
                                           const Eigen::MatrixXd& constraints) {
  std::vector<Eigen::VectorXd> out;
  for (const auto& v : vs) {
    if ((constraints.transpose() * v).cwiseAbs().maxCoeff() <= kZero) out.push_back(v);
  }
  return out;
}

Eigen::MatrixXd e7_constraints() { return Eigen::VectorXd::Ones(8); }

Eigen::MatrixXd e6_constraints() {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(8, 2);
  c.col(0).setOnes();
  c(0, 1) = c(1, 1) = 1;
  return c;
}

Eigen::MatrixXd root_lines(const Eigen::MatrixXd& constraints) {
  auto roots = e8_roots();
  if (constraints.cols() > 0) roots = orthogonal_to(roots, constraints);
  return normalize_columns(antipodal_representatives(roots));
}

RealPacking build_e8() { return RealPacking(root_lines(Eigen::MatrixXd(8, 0))); }

RealPacking build_e7() {
  return RealPacking(restrict_to_complement(root_lines(e7_constraints()), e7_constraints()));
}

RealPacking build_e6() {
  return RealPacking(restrict_to_complement(root_lines(e6_constraints()), e6_constraints()));
}

// The 28 permutations of (3, 3, -1, ..., -1), normalized, in R^8.
Eigen::MatrixXd etf_7_28_ambient() {
  return normalize_columns(antipodal_representatives(permutations({3, 3, -1, -1, -1, -1, -1, -1})));
}

RealPacking build_etf_7_28() {
  return RealPacking(restrict_to_complement(etf_7_28_ambient(), e7_constraints()));
}

RealPacking build_srg_27() {
  const EtfGraph eg = etf_to_srg(build_etf_7_28());
  return srg_packing(srg_data(eg.graph)).packing;
}

RealPacking build_marriage_7_91() {
  return RealPacking(restrict_to_complement(
      concat(etf_7_28_ambient(), root_lines(e7_constraints())), e7_constraints()));
}

RealPacking build_marriage_6_63() {
  Eigen::VectorXd x = -Eigen::VectorXd::Ones(8);
  x(0) = x(1) = 3;
  const Eigen::VectorXd xhat = x.normalized();
  const Eigen::MatrixXd etf = etf_7_28_ambient();
  Eigen::MatrixXd projected(8, 27);
  int k = 0;
  for (Eigen::Index j = 0; j < etf.cols(); ++j) {
    if ((etf.col(j) - xhat).norm() <= 1e-9) continue;
    if (k == 27) throw Error(Errc::kInvalidArgument, "(3, 3, -1, ...) missing from the ETF");
    projected.col(k++) = (etf.col(j) - etf.col(j).dot(xhat) * xhat).normalized();
  }
  Eigen::MatrixXd constraints(8, 2);
  constraints << Eigen::VectorXd::Ones(8), x;
  return RealPacking(restrict_to_complement(concat(projected, root_lines(e6_constraints())),
                                            constraints));
}

RealPacking build_misfit_8_32() {
  const IncidenceStructure plane = affine_plane(3);
  constexpr int kRemoved = 0;
  std::vector<std::vector<int>> lines;
  for (const auto& line : plane.lines()) {
    if (std::find(line.begin(), line.end(), kRemoved) != line.end()) continue;
    std::vector<int> relabeled;
    for (int p : line) relabeled.push_back(p > kRemoved ? p - 1 : p);
    lines.push_back(relabeled);
  }
  return star_product(IncidenceStructure(8, lines), hadamard_minus(4));
}

RealPacking build_petersen() {
  std::vector<std::pair<int, int>> vertices;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) vertices.emplace_back(i, j);
  }
  auto adjacent = [&](int u, int v) {
    const auto [a, b] = vertices[static_cast<size_t>(u)];
    const auto [c, d] = vertices[static_cast<size_t>(v)];
    return a != c && a != d && b != c && b != d;
  };
  const Eigen::MatrixXd h = hadamard_d(4);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(10, 40);
  for (int v = 0; v < 10; ++v) {
    std::vector<int> line;
    for (int u = 0; u < 10; ++u) {
      if (u == v || adjacent(u, v)) line.push_back(u);
    }
    for (int j = 0; j < 4; ++j) {
      for (size_t slot = 0; slot < line.size(); ++slot) {
        const int point = line[slot];
        const double weight = point == v ? 1.0 : 2.0;
        m(point, 4 * v + j) = weight * h(static_cast<Eigen::Index>(slot), j);
      }
    }
  }
  return RealPacking(m / std::sqrt(13.0));
}

RealPacking build_obtf(Thm52Case which) { return thm52(which, 3).packing; }

std::string data_dir(const CatalogOptions& options) {
  if (!options.data_dir.empty()) return options.data_dir;
  const char* env = std::getenv("PACKLAB_DATA");
  return env ? env : "";
}

Graph load_external_graph(const CatalogEntry& e, const CatalogOptions& options,
                          const SrgParameters& expected) {
  const std::string dir = data_dir(options);
  if (dir.empty()) {
    throw Error(Errc::kMissingExternalData,
                e.key() + " needs " + e.data_file + "; set PACKLAB_DATA or pass --data");
  }
  const std::filesystem::path path = std::filesystem::path(dir) / e.data_file;
  if (!std::filesystem::exists(path)) {
    throw Error(Errc::kMissingExternalData, "missing " + path.string());
  }
  const Graph g = load_graph(path.string());
  const auto params = srg_parameters(g);
  if (!params || !(*params == expected)) {
    throw Error(Errc::kNotStronglyRegular,
                path.string() + " is not a (" + std::to_string(expected.v) + "," +
                    std::to_string(expected.k) + "," + std::to_string(expected.lambda) + "," +
                    std::to_string(expected.mu) + ") strongly regular graph");
  }
  return g;
}

RealPacking build_srg_eigenspace_36(const CatalogEntry& e, const CatalogOptions& options) {
  const Graph g = load_external_graph(e, options, {36, 14, 7, 4});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.adjacency().cast<double>());
  // Eigenvalue 5 has multiplicity 8.
  std::vector<Eigen::Index> cols;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (std::abs(es.eigenvalues()(i) - 5.0) < 1e-6) cols.push_back(i);
  }
  if (cols.size() != 8) throw Error(Errc::kNotStronglyRegular, "eigenvalue 5 must have multiplicity 8");
  Eigen::MatrixXd basis(36, 8);
  for (int k = 0; k < 8; ++k) basis.col(k) = es.eigenvectors().col(cols[static_cast<size_t>(k)]);
  Eigen::MatrixXd projection = basis * basis.transpose();
  projection *= 36.0 / 8.0;
  projection.diagonal().setOnes();
  return factor_gram(RealGram((projection + projection.transpose()) / 2.0), 8);
}

RealPacking build_srg_external(const CatalogEntry& e, const CatalogOptions& options,
                               const SrgParameters& expected) {
  return srg_packing(srg_data(load_external_graph(e, options, expected))).packing;
}

using Builder = std::function<RealPacking(const CatalogEntry&, const CatalogOptions&)>;

template <typename F>
Builder simple(F f) {
  return [f](const CatalogEntry&, const CatalogOptions&) { return f(); };
}

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"icosahedron-5", simple(build_icosahedron5)},
      {"icosahedron", simple(build_icosahedron)},
      {"marriage-3-7", simple(build_marriage_3_7)},
      {"rhombicuboctahedron", simple(build_rhombicuboctahedron)},
      {"gram-6in4", simple(build_gram_6in4)},
      {"real-mub-4", simple(build_real_mub4)},
      {"600-cell", simple(build_600_cell)},
      {"conjectured-5", simple([] { return build_conjectured(5); })},
      {"etf-5-10", simple(build_etf_5_10)},
      {"marriage-5-16", simple(build_marriage_5_16)},
      {"d5", simple(build_d5)},
      {"conjectured-6", simple([] { return build_conjectured(6); })},
      {"lifted-3-6", simple([] { return build_lifted(build_icosahedron()); })},
      {"srg-15-8-4-4", simple(build_t6)},
      {"mcfarland", simple(build_mcfarland)},
      {"marriage-6-22", simple(build_marriage_6_22)},
      {"misfit-6-24", simple(build_misfit_6_24)},
      {"e6", simple(build_e6)},
      {"marriage-6-63", simple(build_marriage_6_63)},
      {"srg-27-16-10-8", simple(build_srg_27)},
      {"etf-7-28", simple(build_etf_7_28)},
      {"e7", simple(build_e7)},
      {"marriage-7-91", simple(build_marriage_7_91)},
      {"misfit-8-32", simple(build_misfit_8_32)},
      {"srg-eigenspace-36", build_srg_eigenspace_36},
      {"e8", simple(build_e8)},
      {"obtf-A3-Hminus", simple([] { return build_obtf(Thm52Case::kAHminus); })},
      {"lifted-5-10", simple([] { return build_lifted(build_etf_5_10()); })},
      {"petersen", simple(build_petersen)},
      {"obtf-A3star-H", simple([] { return build_obtf(Thm52Case::kAstarH); })},
      {"obtf-P3-HminusT", simple([] { return build_obtf(Thm52Case::kPHminusT); })},
      {"obtf-P3-H", simple([] { return build_obtf(Thm52Case::kPH); })},
      {"srg-35-18-9-9",
       [](const CatalogEntry& e, const CatalogOptions& o) {
         return build_srg_external(e, o, {35, 18, 9, 9});
       }},
      {"srg-40-27-18-18",
       [](const CatalogEntry& e, const CatalogOptions& o) {
         return build_srg_external(e, o, {40, 27, 18, 18});
       }},
  };
  return table;
}

std::string skip_reason(const CatalogEntry& e) {
  switch (e.availability) {
    case A::kUnprinted:
      return "sign pattern not published; polynomial kept for user-supplied packings";
    case A::kReferenceOnly:
      return "reference ETF family, not rebuilt";
    case A::kOutOfScope:
      return "group-representation construction out of scope";
    case A::kBuiltin:
    case A::kExternal:
      break;
  }
  return "";
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(int d, int n) {
  for (const auto& e : catalog()) {
    if (e.d == d && e.n == n) return e;
  }
  throw Error(Errc::kUnknownKey, "no catalog entry (" + std::to_string(d) + "," + std::to_string(n) + ")");
}

const CatalogEntry& catalog_entry(const std::string& key) {
  const auto comma = key.find(',');
  if (comma != std::string::npos) {
    try {
      size_t used_d = 0;
      size_t used_n = 0;
      const int d = std::stoi(key.substr(0, comma), &used_d);
      const std::string rest = key.substr(comma + 1);
      const int n = std::stoi(rest, &used_n);
      if (used_d == comma && used_n == rest.size()) return catalog_entry(d, n);
    } catch (const std::logic_error&) {
    }
  }
  for (const auto& e : catalog()) {
    if (!e.builder.empty() && e.builder == key) return e;
  }
  throw Error(Errc::kUnknownKey, "no catalog entry '" + key + "'");
}

RealPacking build(const std::string& key, const CatalogOptions& options) {
  const CatalogEntry& e = catalog_entry(key);
  if (e.availability != A::kBuiltin && e.availability != A::kExternal) {
    throw Error(Errc::kUnknownKey, e.key() + " is not buildable: " + skip_reason(e));
  }
  return builders().at(e.builder)(e, options);
}

RealPacking build(int d, int n, const CatalogOptions& options) {
  return build(std::to_string(d) + "," + std::to_string(n), options);
}

double conjectured_a() {
  static const double a = real_roots(IntPolynomial::from_descending({1, -9, -1, 1})).at(1);
  return a;
}

double conjectured_b() {
  static const double b =
      real_roots(IntPolynomial::from_descending({106, -264, -53, 84, 20, -4, -1})).at(1);
  return b;
}

double conjectured_c() {
  static const double c =
      real_roots(IntPolynomial::from_descending({53, 484, 814, -860, -347, 352, -32})).at(3);
  return c;
}

Eigen::MatrixXi gram_6in4_pattern() {
  Eigen::MatrixXi s(6, 6);
  s << 3, 1, 1, -1, -1, 1,
       1, 3, -1, -1, 1, 1,
       1, -1, 3, -1, 1, 1,
       -1, -1, -1, 3, -1, 1,
       -1, 1, 1, -1, 3, 1,
       1, 1, 1, 1, 1, 3;
  return s;
}

RealGram conjectured_gram(int d) {
  Eigen::MatrixXd g;
  if (d == 5) {
    Eigen::MatrixXi s(7, 7);
    s << 0, -1, 1, -1, 1, -1, 1,
         -1, 0, 1, 1, 1, -1, 1,
         1, 1, 0, -1, 1, 1, -1,
         -1, 1, -1, 0, 1, -1, -1,
         1, 1, 1, 1, 0, 1, 1,
         -1, -1, 1, -1, 1, 0, -1,
         1, 1, -1, -1, 1, -1, 0;
    g = Eigen::MatrixXd::Identity(7, 7) + conjectured_a() * s.cast<double>();
  } else if (d == 6) {
    // +-1 marks b, +-2 marks c.
    Eigen::MatrixXi s(8, 8);
    s << 0, 1, 1, -1, 1, 2, 1, -1,
         1, 0, -1, -1, -1, -1, -2, -1,
         1, -1, 0, -1, -1, -1, -1, -1,
         -1, -1, -1, 0, 1, -1, 1, -1,
         1, -1, -1, 1, 0, -1, -1, 1,
         2, -1, -1, -1, -1, 0, 1, -1,
         1, -2, -1, 1, -1, 1, 0, 1,
         -1, -1, -1, -1, 1, -1, 1, 0;
    g = Eigen::MatrixXd::Identity(8, 8);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        if (std::abs(s(i, j)) == 1) g(i, j) = s(i, j) * conjectured_b();
        if (std::abs(s(i, j)) == 2) g(i, j) = (s(i, j) / 2) * conjectured_c();
      }
    }
  } else {
    throw Error(Errc::kUnsupportedD, "conjectured Gram matrices exist for d = 5 and 6 only");
  }
  RealGram gram(g);
  if (!gram.is_psd(1e-9) || gram.rank() != d) {
    throw Error(Errc::kNotPsd, "conjectured Gram matrix failed its PSD/rank check");
  }
  return gram;
}

int coherence_code(double mu) { return static_cast<int>(std::ceil(mu * 1e4 - 1e-7)); }

EntryCheck check_entry(const CatalogEntry& entry, const RealPacking& p) {
  EntryCheck c;
  const RealGram g = gram(p);
  c.mu = coherence(p);
  c.residual = minimal_poly_residual(c.mu, entry.minimal_polynomial);
  c.mu_code = coherence_code(c.mu);
  c.angles = classify_angles(g).count();
  c.tight = is_tight(p, 1e-9).tight;
  c.residual_ok = c.residual < 1e-9;
  c.code_ok = c.mu_code == entry.mu_code;
  c.angles_ok = c.angles == entry.angles;
  c.tight_ok = c.tight == entry.tight;
  return c;
}

int Table1Report::built() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.built; }));
}

int Table1Report::passed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                        [](const auto& r) { return r.built && r.check.passed(); }));
}

int Table1Report::failed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) {
    return r.skip_reason.empty() && (!r.built || !r.check.passed());
  }));
}

int Table1Report::skipped() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.skip_reason.empty(); }));
}

Table1Report table1_report(const CatalogOptions& options) {
  Table1Report report;
  for (const auto& e : catalog()) {
    ReportRow r;
    r.entry = &e;
    r.skip_reason = skip_reason(e);
    if (r.skip_reason.empty()) {
      const auto start = std::chrono::steady_clock::now();
      try {
        const RealPacking p = build(e.key(), options);
        r.check = check_entry(e, p);
        r.built = true;
      } catch (const Error& err) {
        if (err.code() == Errc::kMissingExternalData) {
          r.skip_reason = "external adjacency data not supplied (" + e.data_file + ")";
        } else {
          r.error = err.what();
        }
      } catch (const std::exception& err) {
        r.error = err.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    report.rows.push_back(std::move(r));
  }
  return report;
}

}  // namespace packlab
