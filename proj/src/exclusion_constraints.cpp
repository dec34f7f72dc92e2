#include "exclusionpoly/exclusion_constraints.hpp"

#include <algorithm>

#include "exclusionpoly/errors.hpp"

namespace exclusionpoly {

Rational SymbolicInequality::bound(const WeightVector& w) const {
  Rational b(constant_n_coeff * static_cast<long>(n) + constant_offset);
  for (int k = 0; k < 4; ++k)
    if (weight_coeffs[k]) b += Rational(weight_coeffs[k]) * w.at(k + 1);
  return b;
}

Rational SymbolicInequality::lhs(const RationalVector& sorted_lambda) const {
  if (static_cast<int>(sorted_lambda.size()) != d) throw DomainError("spectrum length mismatch");
  Rational s;
  for (int i = 0; i < d; ++i)
    if (lambda_coeffs[i]) s += Rational(lambda_coeffs[i]) * sorted_lambda[i];
  return s;
}

namespace {

// Builds one family: coefficient 2 on positions [1, two_end], coefficient 1
// on [two_end+1, one_end] (1-based, clipped at d). Returns false when a
// required position falls below 1, which only happens for family 4 at N = 1.
bool instantiate(int family, int first_r, int n, int d, int two_end, int one_end,
                 std::vector<long> wcoeffs, long ncoeff, long offset, SymbolicInequality& out) {
  if (one_end < 1 || two_end < 0) return false;
  out.family = family;
  out.first_r = first_r;
  out.n = n;
  out.d = d;
  out.lambda_coeffs.assign(d, 0);
  for (int i = 1; i <= std::min(two_end, d); ++i) out.lambda_coeffs[i - 1] = 2;
  for (int i = two_end + 1; i <= std::min(one_end, d); ++i) out.lambda_coeffs[i - 1] = 1;
  out.weight_coeffs = std::move(wcoeffs);
  out.constant_n_coeff = ncoeff;
  out.constant_offset = offset;
  return true;
}

}  // namespace

std::vector<SymbolicInequality> constraints_for_r(int r, int n, int d) {
  if (n < 1 || d < n) throw DomainError("constraints_for_r needs 1 <= N <= d");
  if (r < 1 || r > 4) throw DomainError("constraints_for_r supports r in 1..4 only");

  std::vector<SymbolicInequality> out;
  SymbolicInequality ineq;

  // lambda_1 <= 1
  if (instantiate(1, 1, n, d, 0, 1, {0, 0, 0, 0}, 0, 1, ineq)) out.push_back(ineq);
  if (r >= 2) {
    // lambda_1 + ... + lambda_N <= N - 1 + w_1
    if (instantiate(2, 2, n, d, 0, n, {1, 0, 0, 0}, 1, -1, ineq)) out.push_back(ineq);
  }
  if (r >= 3) {
    // 2(lambda_1 + ... + lambda_{N-1}) + lambda_N + lambda_{N+1}
    //   <= 2(N-1) + w_1 + w_2
    if (instantiate(3, 3, n, d, n - 1, n + 1, {1, 1, 0, 0}, 2, -2, ineq)) out.push_back(ineq);
  }
  if (r >= 4) {
    // 2(lambda_1 + ... + lambda_{N-2}) + lambda_{N-1} + lambda_N + lambda_{N+1}
    //   <= 2(N-2) + 1 + w_1 + w_2 + w_3; undefined at N = 1
    if (n >= 2 && instantiate(4, 4, n, d, n - 2, n + 1, {1, 1, 1, 0}, 2, -3, ineq)) out.push_back(ineq);
    // 2(lambda_1 + ... + lambda_{N-1}) + lambda_N + lambda_{N+1} + lambda_{N+2}
    //   <= 2(N-1) + w_1 + w_2 + w_3
    if (instantiate(5, 4, n, d, n - 1, n + 2, {1, 1, 1, 0}, 2, -2, ineq)) out.push_back(ineq);
  }
  return out;
}

EvaluationResult evaluate(const SymbolicInequality& ineq, const RationalVector& lambda,
                          const WeightVector& w) {
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1])
      throw DomainError("evaluate expects a non-increasing spectrum; sort it first");
  const Rational slack = ineq.bound(w) - ineq.lhs(lambda);
  return {slack.sign() >= 0, slack};
}

std::vector<SymbolicInequality> hierarchy_delta(int r, int n, int d) {
  if (r < 2 || r > 4) throw DomainError("hierarchy_delta supports r in 2..4");
  std::vector<SymbolicInequality> out;
  for (const auto& ineq : constraints_for_r(r, n, d))
    if (ineq.first_r == r) out.push_back(ineq);
  return out;
}

bool all_satisfied(const RationalVector& sorted_lambda, const WeightVector& w, int n, int d) {
  const int r = std::min(w.r, 4);
  for (const auto& ineq : constraints_for_r(r, n, d))
    if (!evaluate(ineq, sorted_lambda, w).satisfied) return false;
  return true;
}

}  // namespace exclusionpoly
