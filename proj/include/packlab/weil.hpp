#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "packlab/frames.hpp"

namespace packlab {

// Vectors phi_f(x) = exp(2 pi i f(x) / q) / sqrt(q), x in F_q, over all
// polynomials f(x) = a_1 x + ... + a_r x^r. Vector index a_1 + a_2 q + a_3 q^2 + ...
// so that S(r - 1) is a prefix of S(r).
struct WeilFamily {
  int q = 0;
  int r = 0;
  ComplexPacking packing;
};

// Throws Errc::kDegreeTooLarge when r >= q, Errc::kNotPrime for composite q.
WeilFamily weil_packing(int q, int r);

// The first `count` vectors of S(r) as a q x count matrix.
Eigen::MatrixXcd weil_vectors(int q, int r, std::int64_t count);

struct MubFamily {
  int p = 0;
  std::vector<Eigen::MatrixXcd> bases;
};

// The identity basis followed by the first k - 1 bases of S(2).
// Throws Errc::kTooManyBases when k > p + 1.
MubFamily mub_family(int p, int k);

enum class ApproxCase { kI = 1, kII = 2, kIII = 3 };

std::string to_string(ApproxCase c);

struct ApproxResult {
  RealPacking packing;
  ApproxCase which = ApproxCase::kI;
  int p = 0;
  int k = 0;             // number of MUBs used (cases II and III)
  int constructed_n = 0; // n' = n + 1 in case III
  double case_bound = 0.0;
  double guarantee = 0.0;  // 20 sqrt(6) times the Welch bound
  bool guarantee_nontrivial = false;
};

// Integer n in the Gerzon range of d decides the case.
ApproxCase approx_case(int d, int n);

// Throws Errc::kOutOfGerzonRange, Errc::kPrimeUnavailable, Errc::kDegenerateK.
ApproxResult approx_packing(int d, int n);

// The tight 2p x kp block matrix with (a, b) block (1/sqrt 2) w^{ab} U_b,
// w = exp(2 pi i / k), before the real conversion.
Eigen::MatrixXcd approx_block_matrix(int p, int k);

}  // namespace packlab
