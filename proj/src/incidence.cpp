#include "packlab/incidence.hpp"

#include <algorithm>
#include <cmath>

#include "packlab/error.hpp"

namespace packlab {

IncidenceStructure::IncidenceStructure(int num_points, std::vector<std::vector<int>> lines)
    : num_points_(num_points), lines_(std::move(lines)) {
  if (num_points < 0) throw Error(Errc::kInvalidArgument, "negative point count");
  for (auto& line : lines_) {
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
    for (int p : line) {
      if (p < 0 || p >= num_points) {
        throw Error(Errc::kInvalidArgument, "line point " + std::to_string(p) + " out of range");
      }
    }
  }
}

std::optional<int> IncidenceStructure::uniformity() const {
  if (lines_.empty()) return std::nullopt;
  const auto k = static_cast<int>(lines_[0].size());
  for (const auto& line : lines_) {
    if (static_cast<int>(line.size()) != k) return std::nullopt;
  }
  return k;
}

std::set<int> IncidenceStructure::intersection_numbers() const {
  std::set<int> out;
  std::vector<int> common;
  for (size_t a = 0; a < lines_.size(); ++a) {
    for (size_t b = a + 1; b < lines_.size(); ++b) {
      common.clear();
      std::set_intersection(lines_[a].begin(), lines_[a].end(), lines_[b].begin(), lines_[b].end(),
                            std::back_inserter(common));
      out.insert(static_cast<int>(common.size()));
    }
  }
  return out;
}

namespace {

void require_prime(int q) {
  if (!is_prime(q)) throw Error(Errc::kNotPrime, "planes are built over prime q only, got " + std::to_string(q));
}

std::vector<std::vector<int>> affine_lines(int q) {
  std::vector<std::vector<int>> lines;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(x * q + (a * x + b) % q);
      lines.push_back(std::move(line));
    }
  }
  for (int c = 0; c < q; ++c) {
    std::vector<int> line;
    for (int y = 0; y < q; ++y) line.push_back(c * q + y);
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

IncidenceStructure affine_plane(int q) {
  require_prime(q);
  return IncidenceStructure(q * q, affine_lines(q));
}

IncidenceStructure projective_plane(int q) {
  require_prime(q);
  auto lines = affine_lines(q);
  const int inf = q * q;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) lines[static_cast<size_t>(a * q + b)].push_back(inf + a);
  }
  for (int c = 0; c < q; ++c) lines[static_cast<size_t>(q * q + c)].push_back(inf + q);
  std::vector<int> at_infinity;
  for (int t = 0; t <= q; ++t) at_infinity.push_back(inf + t);
  lines.push_back(std::move(at_infinity));
  return IncidenceStructure(q * q + q + 1, std::move(lines));
}

IncidenceStructure dual(const IncidenceStructure& c) {
  std::vector<std::vector<int>> lines(static_cast<size_t>(c.num_points()));
  for (int l = 0; l < c.num_lines(); ++l) {
    for (int p : c.lines()[static_cast<size_t>(l)]) lines[static_cast<size_t>(p)].push_back(l);
  }
  return IncidenceStructure(c.num_lines(), std::move(lines));
}

std::vector<SuperEmbedding> default_embeddings(const IncidenceStructure& c) {
  std::vector<SuperEmbedding> out;
  for (const auto& line : c.lines()) out.push_back({line, std::vector<int>(line.size(), 1)});
  return out;
}

Eigen::MatrixXd star_product_raw(const IncidenceStructure& c, const Eigen::MatrixXd& vectors,
                                 const std::vector<SuperEmbedding>& embeddings) {
  const auto k = c.uniformity();
  if (!k || *k != vectors.rows()) {
    throw Error(Errc::kBadUniformity, "structure must be k-uniform with k = vector length");
  }
  for (int x : c.intersection_numbers()) {
    if (x > 1) throw Error(Errc::kBadIntersections, "intersection numbers must lie in {0, 1}");
  }
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    const double sq = vectors.col(j).squaredNorm();
    const double inf = vectors.col(j).cwiseAbs().maxCoeff();
    if (std::abs(sq - *k) > 1e-9 || std::abs(inf - 1.0) > 1e-12) {
      throw Error(Errc::kBadVectorNorms, "vectors need squared norm k and max-norm 1");
    }
  }
  if (static_cast<int>(embeddings.size()) != c.num_lines()) {
    throw Error(Errc::kInvalidArgument, "one super embedding per line is required");
  }
  const auto m = vectors.cols();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(c.num_points(), c.num_lines() * m);
  for (int l = 0; l < c.num_lines(); ++l) {
    const auto& e = embeddings[static_cast<size_t>(l)];
    const auto& line = c.lines()[static_cast<size_t>(l)];
    std::vector<int> sorted = e.points;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != line || e.signs.size() != line.size()) {
      throw Error(Errc::kInvalidArgument, "super embedding must be a signed bijection onto its line");
    }
    for (size_t i = 0; i < e.points.size(); ++i) {
      if (std::abs(e.signs[i]) != 1) throw Error(Errc::kInvalidArgument, "embedding signs must be +-1");
      out.block(e.points[i], l * m, 1, m) = e.signs[i] * vectors.row(static_cast<Eigen::Index>(i));
    }
  }
  return out;
}

Eigen::MatrixXd star_product_raw(const IncidenceStructure& c, const Eigen::MatrixXd& vectors) {
  return star_product_raw(c, vectors, default_embeddings(c));
}

RealPacking star_product(const IncidenceStructure& c, const Eigen::MatrixXd& vectors,
                         const std::vector<SuperEmbedding>& embeddings) {
  const auto k = static_cast<double>(vectors.rows());
  return RealPacking(star_product_raw(c, vectors, embeddings) / std::sqrt(k));
}

RealPacking star_product(const IncidenceStructure& c, const Eigen::MatrixXd& vectors) {
  return star_product(c, vectors, default_embeddings(c));
}

// ---------------------------------------------------------------------------
// Four families

std::string to_string(Thm52Case c) {
  switch (c) {
    case Thm52Case::kPH:
      return "PH";
    case Thm52Case::kPHminusT:
      return "PHminusT";
    case Thm52Case::kAHminus:
      return "AHminus";
    case Thm52Case::kAstarH:
      break;
  }
  return "AstarH";
}

Thm52Case parse_thm52_case(const std::string& name) {
  if (name == "P" || name == "PH") return Thm52Case::kPH;
  if (name == "PT" || name == "PHminusT") return Thm52Case::kPHminusT;
  if (name == "A" || name == "AHminus") return Thm52Case::kAHminus;
  if (name == "AS" || name == "AstarH") return Thm52Case::kAstarH;
  throw Error(Errc::kUnknownKey, "unknown family '" + name + "'");
}

namespace {

struct FamilyShape {
  int d;
  int n;
};

FamilyShape shape(Thm52Case which, int q) {
  switch (which) {
    case Thm52Case::kPH:
      return {q * q + q + 1, (q + 1) * (q * q + q + 1)};
    case Thm52Case::kPHminusT:
      return {q * (q + 1), q * (q * q + q + 1)};
    case Thm52Case::kAHminus:
      return {q * q, q * (q + 1) * (q + 1)};
    case Thm52Case::kAstarH:
      break;
  }
  return {q * (q + 1), q * q * (q + 1)};
}

}  // namespace

int thm52_expected_z(Thm52Case which, int q) {
  switch (which) {
    case Thm52Case::kPH:
      return q;
    case Thm52Case::kPHminusT:
      return q - 1;
    case Thm52Case::kAHminus:
      return q * q - 1;
    case Thm52Case::kAstarH:
      break;
  }
  return q;
}

Thm52Report thm52(Thm52Case which, int q) {
  if (!is_prime(q)) throw Error(Errc::kUnsupportedQ, "q must be prime");
  HadamardSource h;
  try {
    h = hadamard(q + 1);
  } catch (const Error&) {
    throw Error(Errc::kUnsupportedQ, "no built-in Hadamard matrix of order " + std::to_string(q + 1));
  }
  const Eigen::MatrixXd hd = h.matrix.cast<double>();
  const Eigen::MatrixXd h_minus = hd.bottomRows(q);

  Thm52Report r;
  r.which = which;
  r.q = q;
  switch (which) {
    case Thm52Case::kPH:
      r.raw = star_product_raw(projective_plane(q), hd);
      break;
    case Thm52Case::kPHminusT: {
      // All + signs give E_l^* 1 = 1, so every vector is orthogonal to 1.
      const Eigen::MatrixXd ambient = star_product_raw(projective_plane(q), h_minus.transpose());
      const Eigen::MatrixXd basis =
          orthonormal_complement(Eigen::VectorXd::Ones(ambient.rows()));
      r.raw = basis.transpose() * ambient;
      break;
    }
    case Thm52Case::kAHminus:
      r.raw = star_product_raw(affine_plane(q), h_minus);
      break;
    case Thm52Case::kAstarH:
      r.raw = star_product_raw(dual(affine_plane(q)), hd);
      break;
  }
  r.d = static_cast<int>(r.raw.rows());
  r.n = static_cast<int>(r.raw.cols());
  r.k = static_cast<int>(std::lround(r.raw.col(0).squaredNorm()));
  const Eigen::MatrixXd raw_gram = r.raw.transpose() * r.raw;
  r.frobenius_sq = raw_gram.squaredNorm();
  r.frobenius_target = static_cast<double>(r.k) * r.k * r.n * r.n / r.d;
  r.packing = RealPacking(r.raw / std::sqrt(static_cast<double>(r.k)));
  r.tight = is_tight(r.packing, 1e-9).tight;
  const RealGram g = gram(r.packing);
  r.zero_counts = g.zero_counts(1e-9);
  r.z = r.zero_counts.minCoeff() == r.zero_counts.maxCoeff() ? r.zero_counts(0) : -1;
  r.coherence = g.coherence();
  r.welch_ratio = r.coherence / welch_bound(r.d, r.n).value;
  r.orthobiangular = classify_angles(g).tag == AngleTag::kOrthobiangular;
  return r;
}

double mu_from_z(int d, int n, int z) {
  if (n <= d || z < 0 || z > n - 2) {
    throw Error(Errc::kInvalidZ, "need n > d and 0 <= z <= n - 2");
  }
  return std::sqrt(static_cast<double>(n - d) / (static_cast<double>(d) * (n - z - 1)));
}

namespace {

bool is_integer_square(const Rational& r) {
  if (denominator(r) != 1 || r < 0) return false;
  const BigInt num = numerator(r);
  const BigInt root = sqrt(num);
  return root * root == num;
}

}  // namespace

IntegrityReport obtf_integrality(int d, int n, int z) {
  if (n == 2 * d) throw Error(Errc::kHalfCase, "integrality conditions need n != 2d");
  if (n <= d || z < 0 || z > n - 2) throw Error(Errc::kInvalidZ, "need n > d and 0 <= z <= n - 2");
  IntegrityReport r;
  const Rational rest(n - z - 1);
  r.first = Rational(d) * rest / Rational(n - d);
  r.second = Rational(n - d) * rest / Rational(d);
  r.integral = is_integer_square(r.first) && is_integer_square(r.second);
  return r;
}

MinimalityReport minimality_scan(Thm52Case which, int q) {
  const FamilyShape s = shape(which, q);
  MinimalityReport r;
  r.z = thm52_expected_z(which, q);
  for (int zp = 0; zp < r.z; ++zp) {
    r.checked.push_back(zp);
    if (obtf_integrality(s.d, s.n, zp).integral) r.integral.push_back(zp);
  }
  r.minimal = r.integral.empty();
  return r;
}

}  // namespace packlab
