// The structured coefficient matrix of the rational-reconstruction key
// equations: unknowns are the coefficients of candidate numerators
// phi_1..phi_n (degree <= df+e) and denominator psi (degree <= dg+e), one
// equation phi_i(alpha_l) - y_{li} psi(alpha_l) = 0 per (i, l). Laid out as n
// diagonal Vandermonde blocks V_{df+e+1} and a stacked last block column
// -D_i V_{dg+e+1}, where D_i carries column i of the y table.
#pragma once

#include <vector>

#include "polsolve/matrix.hpp"
#include "polsolve/poly.hpp"

namespace polsolve {

struct KeyEquationMatrix {
  MatrixF m;
  size_t n;
  size_t num_points;
  int df, dg, e;

  size_t phi_width() const { return static_cast<size_t>(df + e + 1); }
  size_t psi_width() const { return static_cast<size_t>(dg + e + 1); }
  // Expected rank when the kernel is one dimensional.
  size_t full_rank() const { return n * phi_width() + psi_width() - 1; }
};

// y is an L x n table of kernel ratios y_{li}; points are the L abscissas.
inline KeyEquationMatrix build_key_matrix(const Field& f,
                                          const std::vector<std::vector<uint64_t>>& y,
                                          const std::vector<uint64_t>& points, size_t n,
                                          int df, int dg, int e) {
  const size_t L = points.size();
  if (y.size() != L) throw FieldError("y table / point count mismatch");
  const size_t phi_w = static_cast<size_t>(df + e + 1);
  const size_t psi_w = static_cast<size_t>(dg + e + 1);
  MatrixF m(f, n * L, n * phi_w + psi_w);
  for (size_t l = 0; l < L; ++l) {
    std::vector<uint64_t> pw(std::max(phi_w, psi_w));
    pw[0] = 1;
    for (size_t i = 1; i < pw.size(); ++i) pw[i] = f.mul(pw[i - 1], points[l]);
    for (size_t i = 0; i < n; ++i) {
      const size_t row = i * L + l;
      for (size_t j = 0; j < phi_w; ++j) m.at(row, i * phi_w + j) = pw[j];
      const uint64_t yi = y[l][i];
      for (size_t j = 0; j < psi_w; ++j)
        m.at(row, n * phi_w + j) = f.neg(f.mul(yi, pw[j]));
    }
  }
  return KeyEquationMatrix{std::move(m), n, L, df, dg, e};
}

// Splits a kernel vector of the key system into (phi_1..phi_n, psi).
inline std::pair<std::vector<Poly>, Poly> split_key_vector(const Field& f,
                                                           const std::vector<uint64_t>& v,
                                                           size_t n, int df, int dg, int e) {
  const size_t phi_w = static_cast<size_t>(df + e + 1);
  const size_t psi_w = static_cast<size_t>(dg + e + 1);
  if (v.size() != n * phi_w + psi_w) throw FieldError("key vector size mismatch");
  std::vector<Poly> phi;
  phi.reserve(n);
  for (size_t i = 0; i < n; ++i)
    phi.emplace_back(f, std::vector<uint64_t>(v.begin() + i * phi_w,
                                              v.begin() + (i + 1) * phi_w));
  Poly psi(f, std::vector<uint64_t>(v.begin() + n * phi_w, v.end()));
  return {std::move(phi), std::move(psi)};
}

// Coefficient vector of (phi, psi) in key-system layout; the membership
// oracle for "(Lambda f, Lambda g) lies in the kernel of M_y".
inline std::vector<uint64_t> key_vector_of(const std::vector<Poly>& phi, const Poly& psi,
                                           int df, int dg, int e) {
  const size_t phi_w = static_cast<size_t>(df + e + 1);
  const size_t psi_w = static_cast<size_t>(dg + e + 1);
  std::vector<uint64_t> v;
  v.reserve(phi.size() * phi_w + psi_w);
  for (const Poly& p : phi) {
    if (p.degree() >= static_cast<int>(phi_w)) throw FieldError("phi degree overflow");
    for (size_t j = 0; j < phi_w; ++j) v.push_back(p.coeff(j));
  }
  if (psi.degree() >= static_cast<int>(psi_w)) throw FieldError("psi degree overflow");
  for (size_t j = 0; j < psi_w; ++j) v.push_back(psi.coeff(j));
  return v;
}

}  // namespace polsolve
