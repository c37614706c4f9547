// Deterministic baseline solver: the homogeneous key system built directly
// from the raw samples (no per-point kernel step), minimal-degree kernel
// element, error-locator removal. Unconditionally correct for any error
// pattern once L >= L_BK = df+dg+2e+t+1.
#pragma once

#include <vector>

#include "polsolve/glz.hpp"

namespace polsolve {

// Coefficient matrix of [A_l (phi_1(a_l)..phi_n(a_l))^T - psi(a_l) b_l = 0]:
// mL rows, n(df+e+1)+dg+e+1 columns, same column layout as the key matrix.
inline MatrixF build_bk_matrix(const std::vector<EvaluationSample>& samples, size_t n,
                               int df, int dg, int e) {
  const Field& f = samples.front().A.field();
  const size_t m = samples.front().A.rows();
  const size_t phi_w = static_cast<size_t>(df + e + 1);
  const size_t psi_w = static_cast<size_t>(dg + e + 1);
  MatrixF out(f, m * samples.size(), n * phi_w + psi_w);
  for (size_t l = 0; l < samples.size(); ++l) {
    const auto& s = samples[l];
    std::vector<uint64_t> pw(std::max(phi_w, psi_w));
    pw[0] = 1;
    for (size_t i = 1; i < pw.size(); ++i) pw[i] = f.mul(pw[i - 1], s.alpha);
    for (size_t r = 0; r < m; ++r) {
      const size_t row = l * m + r;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < phi_w; ++j)
          out.at(row, i * phi_w + j) = f.mul(s.A.at(r, i), pw[j]);
      for (size_t j = 0; j < psi_w; ++j)
        out.at(row, n * phi_w + j) = f.neg(f.mul(s.b[r], pw[j]));
    }
  }
  return out;
}

// Minimal-degree solution scan over the canonical kernel basis, ordered by
// (deg psi, max deg phi).
inline DecodeOutcome bk_solve(const std::vector<EvaluationSample>& samples, size_t n, int df,
                              int dg, int e, int t = 0) {
  if (samples.empty()) throw UsageError("no samples");
  if (samples.size() < l_bk(df, dg, e, t))
    throw UsageError("too few evaluation points for the deterministic bound");
  const Field& f = samples.front().A.field();
  MatrixF key = build_bk_matrix(samples, n, df, dg, e);
  auto basis = key.right_kernel_basis();
  if (basis.empty()) return {DecodeStatus::kRankDeficient, {}, Poly(f)};

  std::optional<std::pair<int, int>> best_key;
  std::vector<Poly> best_phi;
  Poly best_psi(f);
  for (const auto& v : basis) {
    auto [phi, psi] = split_key_vector(f, v, n, df, dg, e);
    if (psi.is_zero()) continue;
    int max_phi = -1;
    for (const Poly& q : phi) max_phi = std::max(max_phi, q.degree());
    std::pair<int, int> k{psi.degree(), max_phi};
    if (!best_key || k < *best_key) {
      best_key = k;
      best_phi = std::move(phi);
      best_psi = std::move(psi);
    }
  }
  if (!best_key) return {DecodeStatus::kZeroSolution, {}, Poly(f)};

  const uint64_t scale = f.inv(best_psi.leading());
  best_psi = best_psi.scaled(scale);
  for (Poly& q : best_phi) q = q.scaled(scale);
  Poly locator = common_divisor(best_phi, best_psi);
  std::vector<Poly> num;
  num.reserve(best_phi.size());
  for (const Poly& q : best_phi) num.push_back(Poly::divrem(q, locator).first);
  Poly den = Poly::divrem(best_psi, locator).first;
  return {DecodeStatus::kSuccess, {std::move(num), std::move(den)}, std::move(locator)};
}

}  // namespace polsolve
