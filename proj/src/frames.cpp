#include "packlab/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "packlab/error.hpp"

namespace packlab {

namespace {

constexpr double kRenormalizeTol = 1e-6;
constexpr double kGramTol = 1e-12;
constexpr double kRankTol = 1e-8;
constexpr int kBlock = 256;

template <typename Scalar>
void fix_phase(VectorX<Scalar>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > 1e-12) {
      if constexpr (std::is_same_v<Scalar, double>) {
        if (v(i) < 0) v = -v;
      } else {
        v *= std::conj(v(i)) / m;
      }
      return;
    }
  }
}

template <typename Scalar>
double max_offdiag(const MatrixX<Scalar>& block, Eigen::Index col_offset) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < block.rows(); ++i) {
    for (Eigen::Index j = 0; j < block.cols(); ++j) {
      if (j == i + col_offset) continue;
      best = std::max(best, static_cast<double>(std::abs(block(i, j))));
    }
  }
  return best;
}

}  // namespace

std::string to_string(Field field) {
  return field == Field::kReal ? "real" : "complex";
}

std::string to_string(AngleTag tag) {
  switch (tag) {
    case AngleTag::kEquiangular:
      return "equiangular";
    case AngleTag::kOrthobiangular:
      return "orthobiangular";
    case AngleTag::kBiangular:
      return "biangular";
    case AngleTag::kMultiAngle:
      break;
  }
  return "multi-angle";
}

// ---------------------------------------------------------------------------
// Packing

template <typename Scalar>
Packing<Scalar>::Packing(Matrix vectors) : vectors_(std::move(vectors)) {
  if (vectors_.rows() == 0 || vectors_.cols() == 0) {
    throw Error(Errc::kEmptyInput, "packing needs d >= 1 and n >= 1");
  }
  for (Eigen::Index j = 0; j < vectors_.cols(); ++j) {
    const double norm = vectors_.col(j).norm();
    if (!(std::abs(norm - 1.0) <= kRenormalizeTol)) {
      throw Error(Errc::kNonUnitColumn,
                  "column " + std::to_string(j) + " has norm " + std::to_string(norm));
    }
    if (std::abs(norm - 1.0) > 4 * std::numeric_limits<double>::epsilon()) vectors_.col(j) /= norm;
  }
}

RealPacking build_packing(const Eigen::MatrixXd& vectors) { return RealPacking(vectors); }
ComplexPacking build_packing(const Eigen::MatrixXcd& vectors) { return ComplexPacking(vectors); }

// ---------------------------------------------------------------------------
// GramMatrix

template <typename Scalar>
GramMatrix<Scalar>::GramMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw Error(Errc::kInvalidArgument, "Gram matrix must be square");
  }
  const Eigen::Index n = entries_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(entries_(i, i) - Scalar(1)) > kGramTol) {
      throw Error(Errc::kInvalidArgument, "Gram matrix needs a unit diagonal");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(entries_(i, j) - Eigen::numext::conj(entries_(j, i))) > kGramTol) {
        throw Error(Errc::kInvalidArgument, "Gram matrix must be Hermitian");
      }
    }
  }
}

template <typename Scalar>
double GramMatrix<Scalar>::coherence() const {
  if (order() < 2) throw Error(Errc::kTooFewVectors, "coherence needs n >= 2");
  return max_offdiag<Scalar>(entries_, 0);
}

template <typename Scalar>
int GramMatrix<Scalar>::rank() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double top = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
  return static_cast<int>((ev.array().abs() > kRankTol * top).count());
}

template <typename Scalar>
bool GramMatrix<Scalar>::is_psd(double tol) const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

template <typename Scalar>
Eigen::VectorXi GramMatrix<Scalar>::zero_counts(double tol) const {
  const Eigen::Index n = order();
  Eigen::VectorXi z = Eigen::VectorXi::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != j && std::abs(entries_(i, j)) < tol) ++z(j);
    }
  }
  return z;
}

template <typename Scalar>
GramMatrix<Scalar> gram(const Packing<Scalar>& p) {
  MatrixX<Scalar> g = p.vectors().adjoint() * p.vectors();
  MatrixX<Scalar> sym = (g + g.adjoint()) / 2.0;
  return GramMatrix<Scalar>(std::move(sym));
}

// ---------------------------------------------------------------------------
// Coherence

template <typename Scalar>
double coherence(const Packing<Scalar>& p) {
  const int n = p.size();
  if (n < 2) throw Error(Errc::kTooFewVectors, "coherence needs n >= 2");
  double best = 0.0;
  for (int j0 = 0; j0 < n; j0 += kBlock) {
    const int b = std::min(kBlock, n - j0);
    // Only columns from j0 on: the lower triangle repeats the upper one.
    const MatrixX<Scalar> block =
        p.vectors().middleCols(j0, b).adjoint() * p.vectors().rightCols(n - j0);
    best = std::max(best, max_offdiag<Scalar>(block, 0));
  }
  return best;
}

template <typename Scalar>
double sampled_coherence(const Packing<Scalar>& p, std::int64_t pairs, std::uint64_t seed) {
  const int n = p.size();
  if (n < 2) throw Error(Errc::kTooFewVectors, "coherence needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  double best = 0.0;
  for (std::int64_t s = 0; s < pairs; ++s) {
    const int i = pick(rng);
    int j = pick(rng);
    while (j == i) j = pick(rng);
    best = std::max(best, static_cast<double>(std::abs(p.column(i).dot(p.column(j)))));
  }
  return best;
}

template <typename Scalar>
double partial_coherence(const Packing<Scalar>& p, const std::vector<int>& rows) {
  double best = 0.0;
  for (int i : rows) {
    const VectorX<Scalar> c = p.vectors().adjoint() * p.column(i);
    for (int j = 0; j < p.size(); ++j) {
      if (j != i) best = std::max(best, static_cast<double>(std::abs(c(j))));
    }
  }
  return best;
}

WelchBound welch_bound(int d, int n) {
  if (d < 1 || n < 1) throw Error(Errc::kInvalidArgument, "welch_bound needs d, n >= 1");
  if (n <= d) return {0.0, true};
  return {std::sqrt(static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1))), false};
}

GerzonRange gerzon_range(int d) {
  if (d < 2) throw Error(Errc::kInvalidArgument, "gerzon_range needs d >= 2");
  return {d + std::sqrt(2.0 * d + 0.25) + 0.5, d * (d + 1) / 2.0};
}

OrthoplexBound orthoplex_bound(int d, int n) {
  if (d < 1) throw Error(Errc::kInvalidArgument, "orthoplex_bound needs d >= 1");
  const auto cap = static_cast<std::int64_t>(d) * (d + 1) / 2;
  return {1.0 / std::sqrt(static_cast<double>(d)), n > cap};
}

BoundReport bound_report(int d, int n) {
  BoundReport r;
  r.welch = welch_bound(d, n);
  if (d >= 2) {
    r.gerzon = gerzon_range(d);
    r.in_gerzon = r.gerzon.contains(n);
  }
  r.orthoplex = orthoplex_bound(d, n);
  return r;
}

// ---------------------------------------------------------------------------
// Tightness and complements

template <typename Scalar>
TightReport is_tight(const Packing<Scalar>& p, double tol) {
  const double c = static_cast<double>(p.size()) / p.dim();
  const MatrixX<Scalar> frame = p.vectors() * p.vectors().adjoint();
  const MatrixX<Scalar> target = MatrixX<Scalar>::Identity(p.dim(), p.dim()) * Scalar(c);
  const double dev = (frame - target).cwiseAbs().maxCoeff();
  return {dev <= tol * std::max(1.0, c), c, dev};
}

template <typename Scalar>
Packing<Scalar> naimark_complement(const Packing<Scalar>& p) {
  const int d = p.dim();
  const int n = p.size();
  if (n <= d) throw Error(Errc::kNoComplement, "Naimark complement needs n > d");
  if (!is_tight(p).tight) throw Error(Errc::kNotTight, "Naimark complement needs a tight frame");
  const MatrixX<Scalar> g = p.vectors().adjoint() * p.vectors();
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es((g + g.adjoint()) / 2.0);
  // Eigenvalues ascending: the first n - d span the null space of Phi.
  MatrixX<Scalar> psi(n - d, n);
  for (int k = 0; k < n - d; ++k) {
    VectorX<Scalar> v = es.eigenvectors().col(k);
    fix_phase(v);
    psi.row(k) = v.transpose();
  }
  psi *= std::sqrt(static_cast<double>(n) / (n - d));
  return Packing<Scalar>(std::move(psi));
}

template <typename Scalar>
Packing<Scalar> factor_gram(const GramMatrix<Scalar>& g, int d, double tol) {
  const int n = g.order();
  if (d < 1) throw Error(Errc::kInvalidArgument, "factor_gram needs d >= 1");
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(g.entries());
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  if (ev.minCoeff() < -tol * std::max(1.0, top)) {
    throw Error(Errc::kNotPsd, "Gram matrix has eigenvalue " + std::to_string(ev.minCoeff()));
  }
  const int rank = static_cast<int>((ev.array() > kRankTol * top).count());
  if (rank > d) {
    throw Error(Errc::kRankExceedsD,
                "Gram rank " + std::to_string(rank) + " exceeds d = " + std::to_string(d));
  }
  MatrixX<Scalar> phi = MatrixX<Scalar>::Zero(d, n);
  for (int r = 0; r < std::min(d, n); ++r) {
    const int k = n - 1 - r;
    const double lambda = std::max(ev(k), 0.0);
    VectorX<Scalar> v = es.eigenvectors().col(k);
    fix_phase(v);
    phi.row(r) = std::sqrt(lambda) * v.adjoint();
  }
  return Packing<Scalar>(std::move(phi));
}

RealPacking c_to_r(const ComplexPacking& p) {
  const int d = p.dim();
  const int n = p.size();
  Eigen::MatrixXd out(2 * d, 2 * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) {
      const Complex z = p.vectors()(i, j);
      out(2 * i, 2 * j) = z.real();
      out(2 * i, 2 * j + 1) = -z.imag();
      out(2 * i + 1, 2 * j) = z.imag();
      out(2 * i + 1, 2 * j + 1) = z.real();
    }
  }
  return RealPacking(std::move(out));
}

RealPacking c_to_r(const AnyPacking& p) {
  if (std::holds_alternative<RealPacking>(p)) {
    throw Error(Errc::kAlreadyReal, "c_to_r needs a complex packing");
  }
  return c_to_r(std::get<ComplexPacking>(p));
}

Eigen::MatrixXd orthonormal_complement(const Eigen::MatrixXd& a) {
  const Eigen::Index d = a.rows();
  if (a.cols() == 0) return Eigen::MatrixXd::Identity(d, d);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU);
  const Eigen::VectorXd& s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  const Eigen::Index rank = top > 0 ? (s.array() > kRankTol * top).count() : 0;
  Eigen::MatrixXd basis = svd.matrixU().rightCols(d - rank);
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    Eigen::VectorXd v = basis.col(k);
    fix_phase(v);
    basis.col(k) = v;
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Angles

template <typename Scalar>
AngleClass classify_angles(const GramMatrix<Scalar>& g, double tol) {
  const int n = g.order();
  std::vector<double> values;
  values.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) values.push_back(std::abs(g.entries()(i, j)));
  }
  std::sort(values.begin(), values.end());
  AngleClass out;
  size_t start = 0;
  for (size_t k = 1; k <= values.size(); ++k) {
    if (k == values.size() || values[k] - values[k - 1] > tol) {
      double sum = 0.0;
      for (size_t t = start; t < k; ++t) sum += values[t];
      const auto count = static_cast<std::int64_t>(k - start);
      out.levels.push_back({sum / static_cast<double>(count), count});
      start = k;
    }
  }
  if (out.levels.size() == 1) {
    out.tag = AngleTag::kEquiangular;
  } else if (out.levels.size() == 2) {
    out.tag = out.levels[0].value < tol ? AngleTag::kOrthobiangular : AngleTag::kBiangular;
  } else {
    out.tag = AngleTag::kMultiAngle;
  }
  return out;
}

// ---------------------------------------------------------------------------
// ETF to graph

EtfGraph etf_to_srg(const RealPacking& p, double tol) {
  const int n = p.size();
  if (n < 3 || n <= p.dim()) throw Error(Errc::kNotEtf, "ETF needs n > d and n >= 3");
  const RealGram g = gram(p);
  const AngleClass angles = classify_angles(g, 1e-6);
  if (angles.tag != AngleTag::kEquiangular || angles.levels[0].value < tol ||
      !is_tight(p, tol).tight) {
    throw Error(Errc::kNotEtf, "packing is not an equiangular tight frame");
  }
  Eigen::VectorXd sign(n);
  for (int i = 0; i < n; ++i) sign(i) = g.entries()(i, n - 1) < 0 ? -1.0 : 1.0;
  const Eigen::MatrixXd switched = sign.asDiagonal() * g.entries() * sign.asDiagonal();
  Graph graph(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n - 1; ++j) {
      if (switched(i, j) > 0) graph.add_edge(i, j);
    }
  }
  const auto params = srg_parameters(graph);
  if (!params) throw Error(Errc::kNotStronglyRegular, "sign graph is not strongly regular");
  return {std::move(graph), *params};
}

// ---------------------------------------------------------------------------
// Minimal polynomials

double minimal_poly_residual(double value, const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::kInvalidArgument, "empty polynomial");
  const double scale = p.scale_at(value);
  return std::abs(p(value)) / std::max(scale, 1e-300);
}

bool minimal_poly_check(double value, const IntPolynomial& p, double tol) {
  return minimal_poly_residual(value, p) <= tol;
}

// ---------------------------------------------------------------------------
// Explicit instantiations

#define PACKLAB_INSTANTIATE(S)                                                       \
  template class Packing<S>;                                                         \
  template class GramMatrix<S>;                                                      \
  template GramMatrix<S> gram(const Packing<S>&);                                    \
  template double coherence(const Packing<S>&);                                      \
  template double sampled_coherence(const Packing<S>&, std::int64_t, std::uint64_t); \
  template double partial_coherence(const Packing<S>&, const std::vector<int>&);     \
  template TightReport is_tight(const Packing<S>&, double);                          \
  template Packing<S> naimark_complement(const Packing<S>&);                         \
  template Packing<S> factor_gram(const GramMatrix<S>&, int, double);                \
  template AngleClass classify_angles(const GramMatrix<S>&, double);

PACKLAB_INSTANTIATE(double)
PACKLAB_INSTANTIATE(Complex)

#undef PACKLAB_INSTANTIATE

}  // namespace packlab
