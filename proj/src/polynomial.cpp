#include "packlab/polynomial.hpp"

#include <sstream>
#include <unordered_map>

#include "packlab/error.hpp"

namespace packlab {

Polynomial Polynomial::Constant(int num_vars, std::int64_t c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(static_cast<size_t>(num_vars), 0), c);
  return p;
}

Polynomial Polynomial::Variable(int num_vars, int index, std::int64_t c) {
  if (index < 0 || index >= num_vars) throw Error(Errc::kInvalidArgument, "variable index out of range");
  Polynomial p(num_vars);
  Exponents e(static_cast<size_t>(num_vars), 0);
  e[static_cast<size_t>(index)] = 1;
  p.add_term(e, c);
  return p;
}

int Polynomial::total_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (int v : e) deg += v;
    best = std::max(best, deg);
  }
  return best;
}

void Polynomial::add_term(const Exponents& e, std::int64_t c) {
  if (static_cast<int>(e.size()) != num_vars_) {
    throw Error(Errc::kInvalidArgument, "exponent vector has the wrong length");
  }
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  out.num_vars_ = std::max(num_vars_, o.num_vars_);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (num_vars_ != o.num_vars_) throw Error(Errc::kInvalidArgument, "variable count mismatch");
  Polynomial out(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != num_vars_) {
    throw Error(Errc::kInvalidArgument, "wrong number of values");
  }
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    }
    acc += t;
  }
  return acc;
}

double Polynomial::evaluate(const std::vector<double>& values) const {
  if (static_cast<int>(values.size()) != num_vars_) {
    throw Error(Errc::kInvalidArgument, "wrong number of values");
  }
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = static_cast<double>(c);
    for (size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    }
    acc += t;
  }
  return acc;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != num_vars_) {
    throw Error(Errc::kInvalidArgument, "wrong number of variable names");
  }
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::int64_t a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool constant = true;
    for (int v : e) constant = constant && v == 0;
    bool need_star = false;
    if (a != 1 || constant) {
      os << a;
      need_star = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << names[i];
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

namespace {

struct DetMemo {
  const PolynomialMatrix* m;
  int num_vars;
  std::unordered_map<std::uint32_t, Polynomial> cache;

  // Determinant of rows [row, n) against the columns in `mask`.
  Polynomial solve(int row, std::uint32_t mask) {
    const int n = static_cast<int>(m->size());
    if (row == n) return Polynomial::Constant(num_vars, 1);
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    Polynomial acc(num_vars);
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const Polynomial& entry = (*m)[static_cast<size_t>(row)][static_cast<size_t>(c)];
      if (!entry.is_zero()) {
        Polynomial sub = entry * solve(row + 1, mask & ~(1u << c));
        acc = sign > 0 ? acc + sub : acc - sub;
      }
      sign = -sign;
    }
    cache.emplace(mask, acc);
    return acc;
  }
};

}  // namespace

Polynomial determinant(const PolynomialMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw Error(Errc::kInvalidArgument, "empty matrix");
  if (n > 20) throw Error(Errc::kTooLarge, "symbolic determinant limited to order 20");
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw Error(Errc::kInvalidArgument, "matrix not square");
  }
  DetMemo memo{&m, m[0][0].num_vars(), {}};
  return memo.solve(0, (1u << n) - 1);
}

Polynomial minor(const PolynomialMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw Error(Errc::kInvalidArgument, "minor needs a square selection");
  PolynomialMatrix sub(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int c : cols) sub[i].push_back(m[static_cast<size_t>(rows[i])][static_cast<size_t>(c)]);
  }
  return determinant(sub);
}

}  // namespace packlab
