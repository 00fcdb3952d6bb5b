#include "packlab/secure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>
#include "json.hpp"

#include "packlab/error.hpp"

namespace packlab {

template <typename Scalar>
Graph contact_graph(const Packing<Scalar>& p, double tol) {
  const GramMatrix<Scalar> g = gram(p);
  const double mu = g.coherence();
  if (mu <= tol) throw Error(Errc::kZeroCoherence, "contact graph undefined at zero coherence");
  const double cut = mu - tol * std::max(1.0, mu);
  Graph out(p.size());
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (std::abs(g.entries()(i, j)) >= cut) out.add_edge(i, j);
    }
  }
  return out;
}

template Graph contact_graph(const Packing<double>&, double);
template Graph contact_graph(const Packing<Complex>&, double);

SecureReport is_d_secure(const Graph& g, int d) {
  const int n = g.order();
  std::vector<int> degree(static_cast<size_t>(n));
  std::vector<bool> alive(static_cast<size_t>(n), true);
  for (int i = 0; i < n; ++i) degree[static_cast<size_t>(i)] = g.degree(i);
  SecureReport report;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (alive[static_cast<size_t>(i)] &&
          (best < 0 || degree[static_cast<size_t>(i)] < degree[static_cast<size_t>(best)])) {
        best = i;
      }
    }
    if (degree[static_cast<size_t>(best)] >= d) break;
    alive[static_cast<size_t>(best)] = false;
    report.deletion_order.push_back(best);
    for (int j = 0; j < n; ++j) {
      if (alive[static_cast<size_t>(j)] && g.adjacent(best, j)) --degree[static_cast<size_t>(j)];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (alive[static_cast<size_t>(i)]) report.residual.push_back(i);
  }
  report.secure = !report.residual.empty();
  return report;
}

std::pair<Graph, Graph> minimal_d_secure_graphs(int d) {
  if (d < 2) throw Error(Errc::kInvalidArgument, "minimal d-secure graphs need d >= 2");
  const int n = d + 2;
  Graph clique(n);
  for (int i = 0; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) clique.add_edge(i, j);
  }
  Graph matching(n);
  for (int i = 0; i + 1 < n; i += 2) matching.add_edge(i, i + 1);
  return {std::move(clique), matching.complement()};
}

// ---------------------------------------------------------------------------
// Seidel matrices

SeidelMatrix::SeidelMatrix(Eigen::MatrixXi entries) : s_(std::move(entries)) {
  if (s_.rows() != s_.cols()) throw Error(Errc::kInvalidArgument, "Seidel matrix must be square");
  for (Eigen::Index i = 0; i < s_.rows(); ++i) {
    if (s_(i, i) != 0) throw Error(Errc::kInvalidArgument, "Seidel matrix needs a zero diagonal");
    for (Eigen::Index j = 0; j < s_.cols(); ++j) {
      if (s_(i, j) != s_(j, i) || std::abs(s_(i, j)) > 1) {
        throw Error(Errc::kInvalidArgument, "Seidel matrix must be symmetric with entries in {0, +-1}");
      }
    }
  }
}

double seidel_mu(const SeidelMatrix& s) {
  if (s.order() == 0) throw Error(Errc::kSingularInput, "empty Seidel matrix");
  const Eigen::MatrixXd m = s.entries().cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  if (lmin >= -1e-12) throw Error(Errc::kSingularInput, "lambda_min(S) is not negative");
  return -1.0 / lmin;
}

SeidelMatrix conjugate(const SeidelMatrix& s, const std::vector<int>& perm,
                       const std::vector<int>& signs) {
  const int n = s.order();
  if (static_cast<int>(perm.size()) != n || static_cast<int>(signs.size()) != n) {
    throw Error(Errc::kInvalidArgument, "signed permutation has the wrong size");
  }
  Eigen::MatrixXi out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = signs[static_cast<size_t>(i)] * signs[static_cast<size_t>(j)] *
                  s.entries()(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
  }
  return SeidelMatrix(std::move(out));
}

namespace {

// Sign patterns on a fixed set of nonzero pairs, encoded so that the first
// pair (row-major) is the most significant bit and bit 1 means +1. Smaller
// codes are then lexicographically smaller matrices.
class PatternSpace {
 public:
  PatternSpace(int n, const std::set<std::pair<int, int>>& zero_pairs) : n_(n) {
    index_.assign(static_cast<size_t>(n * n), -1);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (zero_pairs.count({i, j})) continue;
        pairs_.emplace_back(i, j);
      }
    }
    m_ = static_cast<int>(pairs_.size());
    for (int t = 0; t < m_; ++t) {
      const auto [i, j] = pairs_[static_cast<size_t>(t)];
      index_[static_cast<size_t>(i * n + j)] = index_[static_cast<size_t>(j * n + i)] = t;
    }
    // Permutations preserving the zero pattern.
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (const auto& [i, j] : zero_pairs) {
        int a = perm[static_cast<size_t>(i)];
        int b = perm[static_cast<size_t>(j)];
        if (a > b) std::swap(a, b);
        if (!zero_pairs.count({a, b})) ok = false;
      }
      if (ok) perms_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Switching by a vertex subset flips the pairs across the cut. Subsets
    // containing vertex n-1 duplicate their complements.
    for (std::uint32_t subset = 0; subset < (1u << (n - 1)); ++subset) {
      std::uint32_t mask = 0;
      for (int t = 0; t < m_; ++t) {
        const auto [i, j] = pairs_[static_cast<size_t>(t)];
        if (((subset >> i) & 1u) != ((subset >> j) & 1u)) mask |= bit(t);
      }
      cuts_.push_back(mask);
    }
  }

  int bits() const { return m_; }
  std::uint32_t bit(int t) const { return 1u << (m_ - 1 - t); }

  // Code of the pattern S'(i, j) = S(perm[i], perm[j]).
  std::uint32_t permute(std::uint32_t code, const std::vector<int>& perm) const {
    std::uint32_t out = 0;
    for (int t = 0; t < m_; ++t) {
      const auto [i, j] = pairs_[static_cast<size_t>(t)];
      const int src = index_[static_cast<size_t>(perm[static_cast<size_t>(i)] * n_ +
                                                 perm[static_cast<size_t>(j)])];
      if (code & bit(src)) out |= bit(t);
    }
    return out;
  }

  template <typename Visit>
  void for_each_image(std::uint32_t code, Visit&& visit) const {
    for (const auto& perm : perms_) {
      const std::uint32_t p = permute(code, perm);
      for (std::uint32_t cut : cuts_) visit(p ^ cut);
    }
  }

  std::uint32_t canonical(std::uint32_t code) const {
    std::uint32_t best = code;
    for_each_image(code, [&](std::uint32_t c) { best = std::min(best, c); });
    return best;
  }

  Eigen::MatrixXi decode(std::uint32_t code) const {
    Eigen::MatrixXi s = Eigen::MatrixXi::Zero(n_, n_);
    for (int t = 0; t < m_; ++t) {
      const auto [i, j] = pairs_[static_cast<size_t>(t)];
      s(i, j) = s(j, i) = (code & bit(t)) ? 1 : -1;
    }
    return s;
  }

  std::uint32_t encode(const Eigen::MatrixXi& s) const {
    std::uint32_t code = 0;
    for (int t = 0; t < m_; ++t) {
      const auto [i, j] = pairs_[static_cast<size_t>(t)];
      if (s(i, j) > 0) code |= bit(t);
    }
    return code;
  }

  std::vector<std::uint32_t> orbit_representatives() const {
    const std::uint32_t total = 1u << m_;
    std::vector<bool> seen(total, false);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t code = 0; code < total; ++code) {
      if (seen[code]) continue;
      // Codes are scanned in increasing order, so the first unseen code is
      // the minimum of its orbit.
      reps.push_back(code);
      for_each_image(code, [&](std::uint32_t c) { seen[c] = true; });
    }
    return reps;
  }

 private:
  int n_;
  int m_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> index_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::uint32_t> cuts_;
};

SwitchingClasses classes_for(int n, const std::set<std::pair<int, int>>& zeros) {
  const PatternSpace space(n, zeros);
  SwitchingClasses out;
  out.order = n;
  out.patterns = std::int64_t{1} << space.bits();
  for (std::uint32_t code : space.orbit_representatives()) {
    out.representatives.emplace_back(space.decode(code));
  }
  return out;
}

std::set<std::pair<int, int>> matching_pairs(int n) {
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; i += 2) pairs.insert({i, i + 1});
  return pairs;
}

}  // namespace

SwitchingClasses seidel_switching_classes(int n) {
  if (n < 3 || n > 7) {
    throw Error(Errc::kTooLarge, "switching classes enumerated for 3 <= n <= 7 only");
  }
  return classes_for(n, {});
}

SeidelMatrix canonical_seidel(const SeidelMatrix& s) {
  const int n = s.order();
  if (n < 2 || n > 7) throw Error(Errc::kTooLarge, "canonical form computed for n <= 7 only");
  const PatternSpace space(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (s.entries()(i, j) == 0) throw Error(Errc::kInvalidArgument, "canonical form needs a full Seidel matrix");
    }
  }
  return SeidelMatrix(space.decode(space.canonical(space.encode(s.entries()))));
}

SwitchingClasses form2_sign_classes(int d) {
  if (d < 2 || d > 4) throw Error(Errc::kTooLarge, "form-II classes enumerated for d in {2, 3, 4}");
  return classes_for(d + 2, matching_pairs(d + 2));
}

// ---------------------------------------------------------------------------
// Gram forms

bool GramForm::is_free(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::find(free_pairs.begin(), free_pairs.end(), std::make_pair(i, j)) != free_pairs.end();
}

GramForm gram_form(FormTag tag, int d) {
  if (d < 2) throw Error(Errc::kInvalidArgument, "Gram forms need d >= 2");
  GramForm form;
  form.tag = tag;
  form.d = d;
  form.order = d + 2;
  if (tag == FormTag::kI) {
    for (int i = 0; i <= d; ++i) form.free_pairs.emplace_back(i, d + 1);
  } else {
    for (int i = 0; i + 1 < form.order; i += 2) form.free_pairs.emplace_back(i, i + 1);
  }
  return form;
}

Eigen::MatrixXi signs_from_gram(const GramForm& form, const Eigen::MatrixXd& g) {
  if (g.rows() != form.order || g.cols() != form.order) {
    throw Error(Errc::kDimensionMismatch, "Gram order does not match the form");
  }
  Eigen::MatrixXi s = Eigen::MatrixXi::Zero(form.order, form.order);
  for (int i = 0; i < form.order; ++i) {
    for (int j = i + 1; j < form.order; ++j) {
      if (form.is_free(i, j)) continue;
      s(i, j) = s(j, i) = g(i, j) < 0 ? -1 : 1;
    }
  }
  return s;
}

PolynomialMatrix symbolic_gram(const GramForm& form, const Eigen::MatrixXi& signs) {
  const int n = form.order;
  if (signs.rows() != n || signs.cols() != n) {
    throw Error(Errc::kInconsistentForm, "sign matrix has the wrong order");
  }
  const int k = static_cast<int>(form.free_pairs.size());
  const int nv = k + 1;
  const int mu = k;
  PolynomialMatrix m(static_cast<size_t>(n), std::vector<Polynomial>(static_cast<size_t>(n), Polynomial(nv)));
  for (int i = 0; i < n; ++i) {
    if (signs(i, i) != 0) throw Error(Errc::kInconsistentForm, "sign matrix diagonal must be 0");
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Polynomial::Constant(nv, 1);
  }
  for (int t = 0; t < k; ++t) {
    const auto [i, j] = form.free_pairs[static_cast<size_t>(t)];
    if (signs(i, j) != 0 || signs(j, i) != 0) {
      throw Error(Errc::kInconsistentForm, "free entries must carry sign 0");
    }
    m[static_cast<size_t>(i)][static_cast<size_t>(j)] = m[static_cast<size_t>(j)][static_cast<size_t>(i)] =
        Polynomial::Variable(nv, t);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (form.is_free(i, j)) continue;
      const int s = signs(i, j);
      if ((s != 1 && s != -1) || signs(j, i) != s) {
        throw Error(Errc::kInconsistentForm, "fixed entries need symmetric signs +-1");
      }
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = m[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          Polynomial::Variable(nv, mu, s);
    }
  }
  return m;
}

namespace {

void combinations(int n, int r, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(static_cast<size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

PolynomialSystem cad_query(const GramForm& form, const Eigen::MatrixXi& signs,
                           const CadOptions& options) {
  const PolynomialMatrix m = symbolic_gram(form, signs);
  const int n = form.order;
  const int k = static_cast<int>(form.free_pairs.size());
  const int nv = k + 1;
  PolynomialSystem sys;
  for (int t = 0; t < k; ++t) sys.variables.push_back("x" + std::to_string(t + 1));
  sys.variables.emplace_back("mu");

  std::vector<std::vector<int>> subsets;
  combinations(n, form.d + 1, subsets);
  for (const auto& rows : subsets) {
    for (const auto& cols : subsets) sys.equalities.push_back(minor(m, rows, cols));
  }
  for (int r = 2; r <= n; ++r) {
    std::vector<std::vector<int>> principal;
    combinations(n, r, principal);
    for (const auto& idx : principal) sys.inequalities.push_back(minor(m, idx, idx));
  }
  const Polynomial mu = Polynomial::Variable(nv, k);
  for (int t = 0; t < k; ++t) {
    const Polynomial x = Polynomial::Variable(nv, t);
    sys.inequalities.push_back(mu - x);
    sys.inequalities.push_back(x + mu);
  }
  if (options.welch) {
    sys.welch_strengthening = true;
    const std::int64_t d = form.d;
    sys.inequalities.push_back(Polynomial::Constant(nv, d * (n - 1)) * mu * mu -
                               Polynomial::Constant(nv, n - d));
    sys.inequalities.push_back(mu);
  }
  return sys;
}

// ---------------------------------------------------------------------------
// Export

CadFormat parse_cad_format(const std::string& name) {
  if (name == "json") return CadFormat::kJson;
  if (name == "script") return CadFormat::kScript;
  throw Error(Errc::kUnknownFormat, "unknown CAD export format '" + name + "'");
}

namespace {

nlohmann::json poly_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"coefficient", it->second}, {"exponents", it->first}});
  }
  return terms;
}

Polynomial poly_from_json(const nlohmann::json& j, int nv) {
  Polynomial p(nv);
  for (const auto& term : j) {
    p.add_term(term.at("exponents").get<std::vector<int>>(), term.at("coefficient").get<std::int64_t>());
  }
  return p;
}

}  // namespace

std::string export_cad(const PolynomialSystem& sys, CadFormat format) {
  if (format == CadFormat::kJson) {
    nlohmann::json j;
    j["vars"] = sys.variables;
    j["equalities"] = nlohmann::json::array();
    j["inequalities"] = nlohmann::json::array();
    for (const auto& p : sys.equalities) j["equalities"].push_back(poly_to_json(p));
    for (const auto& p : sys.inequalities) j["inequalities"].push_back(poly_to_json(p));
    j["welch_strengthening"] = sys.welch_strengthening;
    return j.dump(1) + "\n";
  }
  std::vector<std::string> bound;
  for (const auto& v : sys.variables) {
    if (v != "mu") bound.push_back(v);
  }
  std::vector<std::string> clauses;
  for (const auto& p : sys.equalities) clauses.push_back(p.to_string(sys.variables) + " == 0");
  for (const auto& p : sys.inequalities) clauses.push_back(p.to_string(sys.variables) + " >= 0");
  std::ostringstream body;
  if (clauses.empty()) body << "True";
  for (size_t i = 0; i < clauses.size(); ++i) {
    if (i) body << " && ";
    body << clauses[i];
  }
  std::ostringstream os;
  os << "Resolve[";
  if (!bound.empty()) {
    os << "Exists[{";
    for (size_t i = 0; i < bound.size(); ++i) os << (i ? ", " : "") << bound[i];
    os << "}, " << body.str() << "]";
  } else {
    os << body.str();
  }
  os << ", Reals]\n";
  return os.str();
}

PolynomialSystem parse_cad_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    PolynomialSystem sys;
    sys.variables = j.at("vars").get<std::vector<std::string>>();
    const int nv = static_cast<int>(sys.variables.size());
    for (const auto& p : j.at("equalities")) sys.equalities.push_back(poly_from_json(p, nv));
    for (const auto& p : j.at("inequalities")) sys.inequalities.push_back(poly_from_json(p, nv));
    sys.welch_strengthening = j.value("welch_strengthening", false);
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParseError, e.what());
  }
}

}  // namespace packlab
