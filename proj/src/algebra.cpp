#include "packlab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "packlab/error.hpp"

namespace packlab {

// ---------------------------------------------------------------------------
// Primes

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  if (x < 4) return true;
  if (x % 2 == 0) return false;
  for (std::int64_t f = 3; f * f <= x; f += 2) {
    if (x % f == 0) return false;
  }
  return true;
}

std::int64_t largest_prime_leq(std::int64_t x) {
  if (x < 2) throw Error(Errc::kNoPrime, "no prime <= " + std::to_string(x));
  while (!is_prime(x)) --x;
  return x;
}

std::int64_t smallest_prime_geq(std::int64_t x) {
  if (x < 2) x = 2;
  while (!is_prime(x)) ++x;
  return x;
}

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(std::int64_t modulus) : p_(modulus) {
  if (!is_prime(modulus)) {
    throw Error(Errc::kNotPrime, std::to_string(modulus) + " is not prime");
  }
}

std::int64_t PrimeField::pow(std::int64_t a, std::int64_t e) const {
  std::int64_t base = reduce(a);
  std::int64_t result = 1 % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
  if (reduce(a) == 0) throw Error(Errc::kInvalidArgument, "zero has no inverse");
  return pow(a, p_ - 2);
}

int PrimeField::quadratic_character(std::int64_t a) const {
  const std::int64_t r = reduce(a);
  if (r == 0) return 0;
  if (p_ == 2) return 1;
  return pow(r, (p_ - 1) / 2) == 1 ? 1 : -1;
}

AdditiveCharacter::AdditiveCharacter(const PrimeField& field, std::int64_t a)
    : p_(field.modulus()), a_(field.reduce(a)), table_(static_cast<size_t>(p_)) {
  for (std::int64_t x = 0; x < p_; ++x) {
    // Reduce a*x first so the angle stays in [0, 2 pi).
    const double t = 2.0 * std::numbers::pi * static_cast<double>(field.mul(a_, x)) /
                     static_cast<double>(p_);
    table_[static_cast<size_t>(x)] = {std::cos(t), std::sin(t)};
  }
}

std::complex<double> AdditiveCharacter::operator()(std::int64_t x) const {
  std::int64_t r = x % p_;
  if (r < 0) r += p_;
  return table_[static_cast<size_t>(r)];
}

AdditiveCharacter additive_character(const PrimeField& field, std::int64_t a) {
  return AdditiveCharacter(field, a);
}

// ---------------------------------------------------------------------------
// Hadamard

bool is_hadamard(const Eigen::MatrixXi& h) {
  if (h.rows() != h.cols()) return false;
  if ((h.array().abs() != 1).any()) return false;
  const Eigen::MatrixXi gram = h * h.transpose();
  return gram == static_cast<int>(h.rows()) * Eigen::MatrixXi::Identity(h.rows(), h.rows());
}

namespace {

Eigen::MatrixXi sylvester_double(const Eigen::MatrixXi& h) {
  const auto m = h.rows();
  Eigen::MatrixXi out(2 * m, 2 * m);
  out << h, h, h, -h;
  return out;
}

Eigen::MatrixXi paley_one(int q) {
  const PrimeField f(q);
  Eigen::MatrixXi s = Eigen::MatrixXi::Zero(q + 1, q + 1);
  for (int j = 1; j <= q; ++j) {
    s(0, j) = 1;
    s(j, 0) = -1;
  }
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) s(i + 1, j + 1) = f.quadratic_character(j - i);
  }
  return Eigen::MatrixXi::Identity(q + 1, q + 1) + s;
}

std::optional<Eigen::MatrixXi> raw_hadamard(int m) {
  if (m == 1) return Eigen::MatrixXi::Ones(1, 1);
  if (m == 2) {
    Eigen::MatrixXi h(2, 2);
    h << 1, 1, 1, -1;
    return h;
  }
  if (m % 4 != 0) return std::nullopt;
  if (auto half = raw_hadamard(m / 2)) return sylvester_double(*half);
  const int q = m - 1;
  if (q % 4 == 3 && is_prime(q)) return paley_one(q);
  return std::nullopt;
}

}  // namespace

HadamardSource hadamard(int order) {
  auto raw = order >= 1 ? raw_hadamard(order) : std::nullopt;
  if (!raw) {
    throw Error(Errc::kOrderUnavailable,
                "no built-in Hadamard construction of order " + std::to_string(order));
  }
  Eigen::MatrixXi h = std::move(*raw);
  for (int i = 0; i < order; ++i) {
    if (h(i, 0) < 0) h.row(i) *= -1;
  }
  for (int j = 0; j < order; ++j) {
    if (h(0, j) < 0) h.col(j) *= -1;
  }
  std::vector<Eigen::VectorXi> rows;
  for (int i = 1; i < order; ++i) rows.emplace_back(h.row(i).transpose());
  std::sort(rows.begin(), rows.end(), [](const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  for (int i = 1; i < order; ++i) h.row(i) = rows[static_cast<size_t>(i - 1)].transpose();
  return {order, std::move(h), true};
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_descending(std::vector<std::int64_t> descending) {
  std::reverse(descending.begin(), descending.end());
  return IntPolynomial(std::move(descending));
}

double IntPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + static_cast<double>(*it);
  }
  return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::scale_at(double x) const {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * ax + std::abs(static_cast<double>(*it));
  }
  return acc;
}

std::int64_t IntPolynomial::max_abs_coefficient() const {
  std::int64_t m = 0;
  for (auto c : coeffs_) m = std::max(m, c < 0 ? -c : c);
  return m;
}

std::string IntPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    const std::int64_t a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Real roots via Sturm sequences

namespace {

using RatPoly = std::vector<Rational>;  // ascending

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Polynomial long division; returns {quotient, remainder}.
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  RatPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  while (!num.empty() && num.size() >= den.size()) {
    const size_t shift = num.size() - den.size();
    const Rational factor = num.back() / den.back();
    quot[shift] = factor;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  trim(quot);
  return {quot, num};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& p) {
    seq_.push_back(p);
    seq_.push_back(derivative(p));
    while (!seq_.back().empty()) {
      auto r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
      for (auto& c : r) c = -c;
      if (r.empty()) break;
      seq_.push_back(std::move(r));
    }
  }

  int sign_changes(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& s : seq_) {
      const int sg = sign_of(eval(s, x));
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  }

  // Number of distinct roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const {
    return sign_changes(a) - sign_changes(b);
  }

 private:
  std::vector<RatPoly> seq_;
};

double refine(const RatPoly& p, double lo, double hi) {
  // p has exactly one simple root in (lo, hi].
  if (eval(p, Rational(hi)) == 0) return hi;
  const int sign_hi = sign_of(eval(p, Rational(hi)));
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const int s = sign_of(eval(p, Rational(mid)));
    if (s == 0) return mid;
    if (s == sign_hi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // Pick the endpoint with the smaller residual.
  const auto rlo = abs(eval(p, Rational(lo)));
  const auto rhi = abs(eval(p, Rational(hi)));
  return rlo < rhi ? lo : hi;
}

void isolate(const SturmSequence& sturm, const RatPoly& p, double lo, double hi,
             std::vector<double>& roots) {
  const int n = sturm.count(Rational(lo), Rational(hi));
  if (n == 0) return;
  if (n == 1) {
    roots.push_back(refine(p, lo, hi));
    return;
  }
  const double mid = lo + (hi - lo) / 2;
  isolate(sturm, p, lo, mid, roots);
  isolate(sturm, p, mid, hi, roots);
}

}  // namespace

std::vector<double> real_roots(const IntPolynomial& poly) {
  if (poly.degree() < 1) {
    throw Error(Errc::kInvalidArgument, "real_roots needs degree >= 1");
  }
  RatPoly p;
  for (auto c : poly.coefficients()) p.emplace_back(c);
  // Square-free part collapses multiplicities.
  const RatPoly g = gcd(p, derivative(p));
  RatPoly sqfree = g.size() > 1 ? divmod(p, g).first : p;
  const Rational lead = sqfree.back();
  for (auto& c : sqfree) c /= lead;

  // Cauchy bound: all roots lie in (-bound, bound).
  Rational m = 0;
  for (size_t i = 0; i + 1 < sqfree.size(); ++i) m = std::max(m, Rational(abs(sqfree[i])));
  double bound = 2.0;
  while (Rational(bound) <= m + 1) bound *= 2.0;

  const SturmSequence sturm(sqfree);
  std::vector<double> roots;
  isolate(sturm, sqfree, -bound, bound, roots);
  if (roots.empty()) {
    throw Error(Errc::kNoRealRoots, poly.to_string() + " has no real roots");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace packlab
