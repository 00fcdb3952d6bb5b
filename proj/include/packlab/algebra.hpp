#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace packlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Primes

bool is_prime(std::int64_t x);

// Largest prime <= x. Throws Errc::kNoPrime when x < 2.
std::int64_t largest_prime_leq(std::int64_t x);

// Smallest prime >= x (x <= 2 yields 2).
std::int64_t smallest_prime_geq(std::int64_t x);

// ---------------------------------------------------------------------------
// Prime fields and additive characters

class PrimeField {
 public:
  explicit PrimeField(std::int64_t modulus);

  std::int64_t modulus() const { return p_; }

  std::int64_t reduce(std::int64_t x) const {
    const std::int64_t r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(a * b); }
  std::int64_t neg(std::int64_t a) const { return reduce(-a); }
  std::int64_t pow(std::int64_t a, std::int64_t e) const;
  std::int64_t inv(std::int64_t a) const;

  // Legendre symbol chi(a) in {-1, 0, 1}.
  int quadratic_character(std::int64_t a) const;

 private:
  std::int64_t p_;
};

// x -> exp(2 pi i a x / p). Requesting a == 0 mod p gives the trivial
// character; that is allowed and reported through trivial().
class AdditiveCharacter {
 public:
  AdditiveCharacter(const PrimeField& field, std::int64_t a);

  std::complex<double> operator()(std::int64_t x) const;
  bool trivial() const { return a_ == 0; }
  std::int64_t modulus() const { return p_; }
  std::int64_t scale() const { return a_; }

 private:
  std::int64_t p_;
  std::int64_t a_;
  std::vector<std::complex<double>> table_;
};

AdditiveCharacter additive_character(const PrimeField& field, std::int64_t a);

// ---------------------------------------------------------------------------
// Hadamard matrices

struct HadamardSource {
  int order = 0;
  Eigen::MatrixXi matrix;
  bool normalized = false;
};

// Sylvester doubling or Paley type I (order q + 1, q = 3 mod 4 prime),
// normalized so that the first row and column are all ones; remaining rows are
// sorted lexicographically. Throws Errc::kOrderUnavailable otherwise.
HadamardSource hadamard(int order);

bool is_hadamard(const Eigen::MatrixXi& h);

// ---------------------------------------------------------------------------
// Integer polynomials

class IntPolynomial {
 public:
  IntPolynomial() = default;
  // Coefficients in ascending degree; trailing zeros are trimmed.
  explicit IntPolynomial(std::vector<std::int64_t> ascending);
  IntPolynomial(std::initializer_list<std::int64_t> ascending)
      : IntPolynomial(std::vector<std::int64_t>(ascending)) {}

  // Convenience for the usual way polynomials are written down.
  static IntPolynomial from_descending(std::vector<std::int64_t> descending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  double operator()(double x) const;
  Rational operator()(const Rational& x) const;

  // sum |c_i| |x|^i, the natural magnitude to compare a residual against.
  double scale_at(double x) const;
  std::int64_t max_abs_coefficient() const;

  std::string to_string(char var = 'x') const;

 private:
  std::vector<std::int64_t> coeffs_;
};

// All distinct real roots in ascending order. Roots are isolated with an exact
// rational Sturm sequence of the square-free part and refined by bisection to
// the limit of double precision. Throws Errc::kNoRealRoots.
std::vector<double> real_roots(const IntPolynomial& p);

}  // namespace packlab
