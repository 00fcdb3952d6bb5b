#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "packlab/algebra.hpp"

namespace packlab {

// Sparse multivariate polynomial with integer coefficients over a fixed number
// of variables. Terms are keyed by exponent vectors.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

  static Polynomial Constant(int num_vars, std::int64_t c);
  static Polynomial Variable(int num_vars, int index, std::int64_t c = 1);

  int num_vars() const { return num_vars_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  // Adds c * x^e, dropping the term when the coefficient cancels.
  void add_term(const Exponents& e, std::int64_t c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const = default;

  Rational evaluate(const std::vector<Rational>& values) const;
  double evaluate(const std::vector<double>& values) const;

  // Highest degree terms first, e.g. "2*x1^2*mu - x2 + 1".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int num_vars_ = 0;
  std::map<Exponents, std::int64_t> terms_;
};

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

// Determinant by cofactor expansion with memoization over column subsets.
Polynomial determinant(const PolynomialMatrix& m);

// Minor on the given (sorted) rows and columns.
Polynomial minor(const PolynomialMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols);

}  // namespace packlab
