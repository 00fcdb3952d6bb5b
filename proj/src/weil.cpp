#include "packlab/weil.hpp"

#include <cmath>
#include <numbers>

#include "packlab/algebra.hpp"
#include "packlab/error.hpp"

namespace packlab {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

void check_weil_args(int q, int r) {
  if (!is_prime(q)) throw Error(Errc::kNotPrime, std::to_string(q) + " is not prime");
  if (r < 1) throw Error(Errc::kInvalidArgument, "degree cap must be >= 1");
  if (r >= q) {
    throw Error(Errc::kDegreeTooLarge,
                "r = " + std::to_string(r) + " must be below q = " + std::to_string(q));
  }
}

}  // namespace

Eigen::MatrixXcd weil_vectors(int q, int r, std::int64_t count) {
  check_weil_args(q, r);
  const std::int64_t total = ipow(q, r);
  if (count < 0 || count > total) {
    throw Error(Errc::kInvalidArgument, "S(r) has only " + std::to_string(total) + " vectors");
  }
  const PrimeField field(q);
  const AdditiveCharacter psi(field, 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  // powers(x, e) = x^e mod q
  Eigen::MatrixXi powers(q, r + 1);
  for (int x = 0; x < q; ++x) {
    for (int e = 0; e <= r; ++e) powers(x, e) = static_cast<int>(field.pow(x, e));
  }
  Eigen::MatrixXcd out(q, count);
  std::vector<int> coeff(static_cast<size_t>(r), 0);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::int64_t rest = idx;
    for (int e = 0; e < r; ++e) {
      coeff[static_cast<size_t>(e)] = static_cast<int>(rest % q);
      rest /= q;
    }
    for (int x = 0; x < q; ++x) {
      std::int64_t value = 0;
      for (int e = 0; e < r; ++e) value += coeff[static_cast<size_t>(e)] * powers(x, e + 1);
      out(x, idx) = psi(value % q) * scale;
    }
  }
  return out;
}

WeilFamily weil_packing(int q, int r) {
  check_weil_args(q, r);
  return {q, r, ComplexPacking(weil_vectors(q, r, ipow(q, r)))};
}

MubFamily mub_family(int p, int k) {
  if (k < 2) throw Error(Errc::kInvalidArgument, "mub_family needs k >= 2");
  if (k > p + 1) {
    throw Error(Errc::kTooManyBases,
                std::to_string(k) + " bases requested, at most p + 1 = " + std::to_string(p + 1));
  }
  MubFamily out{p, {}};
  out.bases.push_back(Eigen::MatrixXcd::Identity(p, p));
  const Eigen::MatrixXcd s2 = weil_vectors(p, 2, static_cast<std::int64_t>(p) * (k - 1));
  for (int b = 0; b + 1 < k; ++b) out.bases.push_back(s2.middleCols(b * p, p));
  return out;
}

std::string to_string(ApproxCase c) {
  switch (c) {
    case ApproxCase::kI:
      return "I";
    case ApproxCase::kII:
      return "II";
    case ApproxCase::kIII:
      break;
  }
  return "III";
}

ApproxCase approx_case(int d, int n) {
  const GerzonRange range = gerzon_range(d);
  if (!range.contains(n)) {
    throw Error(Errc::kOutOfGerzonRange,
                "n = " + std::to_string(n) + " outside the Gerzon range of d = " + std::to_string(d));
  }
  if (n >= 1.25 * d) return ApproxCase::kI;
  if (n >= d + std::sqrt(2.0 * d + 1.0) + 1.0) return ApproxCase::kII;
  return ApproxCase::kIII;
}

Eigen::MatrixXcd approx_block_matrix(int p, int k) {
  const MubFamily mubs = mub_family(p, k);
  Eigen::MatrixXcd a(2 * p, k * p);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int b = 0; b < k; ++b) {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * b / k);
    a.block(0, b * p, p, p) = inv_sqrt2 * mubs.bases[static_cast<size_t>(b)];
    a.block(p, b * p, p, p) = (inv_sqrt2 * w) * mubs.bases[static_cast<size_t>(b)];
  }
  return a;
}

namespace {

RealPacking embed(const Eigen::MatrixXd& cols, int d) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, cols.cols());
  out.topRows(cols.rows()) = cols;
  return RealPacking(std::move(out));
}

ApproxResult case_one(int d, int n) {
  ApproxResult res;
  res.which = ApproxCase::kI;
  res.p = static_cast<int>(largest_prime_leq(d / 2));
  if (res.p < 5) {
    throw Error(Errc::kPrimeUnavailable,
                "case I needs a prime p >= 5 with 2p <= d = " + std::to_string(d));
  }
  const std::int64_t available = 2 * ipow(res.p, 3);
  if (n > available) {
    throw Error(Errc::kPrimeUnavailable, "S(3) over p = " + std::to_string(res.p) +
                                             " yields fewer than " + std::to_string(n) + " vectors");
  }
  const std::int64_t complex_count = (n + 1) / 2;
  const ComplexPacking weil(weil_vectors(res.p, 3, complex_count));
  const RealPacking real = c_to_r(weil);
  res.packing = embed(real.vectors().leftCols(n), d);
  res.constructed_n = n;
  res.case_bound = 2.0 / std::sqrt(static_cast<double>(res.p));
  return res;
}

ApproxResult case_two(int d, int n) {
  ApproxResult res;
  res.which = ApproxCase::kII;
  res.p = static_cast<int>(smallest_prime_geq((n - d + 1) / 2));
  if (res.p < 3) {
    throw Error(Errc::kPrimeUnavailable, "case II needs an odd prime, got p = " + std::to_string(res.p));
  }
  res.k = (n + 2 * res.p - 1) / (2 * res.p);
  if (res.k <= 2) {
    throw Error(Errc::kDegenerateK, "k = " + std::to_string(res.k) + " leaves no complement");
  }
  const ComplexPacking block(approx_block_matrix(res.p, res.k));
  const RealPacking complement = naimark_complement(c_to_r(block));
  if (complement.dim() > d) {
    throw Error(Errc::kInvalidArgument, "complement dimension exceeds d");
  }
  res.packing = embed(complement.vectors().leftCols(n), d);
  res.constructed_n = n;
  res.case_bound = 2.0 / ((res.k - 2) * std::sqrt(static_cast<double>(res.p)));
  return res;
}

}  // namespace

ApproxResult approx_packing(int d, int n) {
  const ApproxCase which = approx_case(d, n);
  ApproxResult res;
  if (which == ApproxCase::kI) {
    res = case_one(d, n);
  } else if (which == ApproxCase::kII) {
    res = case_two(d, n);
  } else {
    res = case_two(d, n + 1);
    res.which = ApproxCase::kIII;
    res.packing = RealPacking(res.packing.vectors().leftCols(n));
  }
  const WelchBound welch = welch_bound(d, n);
  res.guarantee = 20.0 * std::sqrt(6.0) * welch.value;
  res.guarantee_nontrivial = res.guarantee < 1.0;
  return res;
}

}  // namespace packlab
