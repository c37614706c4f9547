// Interleaved Reed-Solomon encoding and the simultaneous-polynomial-
// reconstruction decoder: the A = identity, g = 1 specialization of the
// rational decoder. Also hosts the reference probability bounds used as
// comparison columns in the experiment output.
#pragma once

#include <cmath>
#include <vector>

#include "polsolve/glz.hpp"

namespace polsolve {

struct IRSParams {
  const Field* field = nullptr;
  size_t n_c = 0;  // code length
  size_t k = 0;    // dimension
  size_t r = 1;    // interleaving degree
  std::vector<uint64_t> points;

  static IRSParams make(const Field& f, size_t n_c, size_t k, size_t r) {
    if (k > n_c) throw UsageError("dimension exceeds code length");
    if (n_c > f.q()) throw UsageError("code length exceeds field size");
    IRSParams p{&f, n_c, k, r, {}};
    p.points.resize(n_c);
    for (size_t j = 0; j < n_c; ++j) p.points[j] = j;
    return p;
  }
};

// r x n_c codeword matrix (f_i(alpha_j)).
inline std::vector<std::vector<uint64_t>> irs_encode(const std::vector<Poly>& messages,
                                                     const IRSParams& p) {
  if (messages.size() != p.r) throw UsageError("message count != interleaving degree");
  std::vector<std::vector<uint64_t>> code(p.r, std::vector<uint64_t>(p.n_c));
  for (size_t i = 0; i < p.r; ++i) {
    if (messages[i].degree() > static_cast<int>(p.k) - 1)
      throw UsageError("message degree exceeds k-1");
    for (size_t j = 0; j < p.n_c; ++j) code[i][j] = messages[i].eval(p.points[j]);
  }
  return code;
}

struct SPRInstance {
  std::vector<std::vector<uint64_t>> received;  // r x n_c
  std::vector<size_t> error_set;                // ground truth, 1-based columns
  std::vector<Poly> messages;                   // ground truth
};

// Corrupts e whole columns with uniform symbols, resampled until the column
// actually differs from the codeword.
inline SPRInstance make_spr_instance(const IRSParams& p, std::vector<Poly> messages,
                                     size_t e, Rng& rng) {
  SPRInstance inst{irs_encode(messages, p), rng.subset(p.n_c, e), std::move(messages)};
  const Field& f = *p.field;
  for (size_t col : inst.error_set) {
    const size_t j = col - 1;
    constexpr int kBudget = 200;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= kBudget) throw UsageError("column corruption budget exceeded");
      std::vector<uint64_t> fresh(p.r);
      bool differs = false;
      for (size_t i = 0; i < p.r; ++i) {
        fresh[i] = rng.below(f.q());
        differs = differs || fresh[i] != inst.messages[i].eval(p.points[j]);
      }
      if (!differs) continue;
      for (size_t i = 0; i < p.r; ++i) inst.received[i][j] = fresh[i];
      break;
    }
  }
  return inst;
}

// SPR decoding through the rational decoder with A_l = I_r, df = k-1,
// dg = 0. Returns the r message polynomials on success.
inline DecodeOutcome spr_decode(const std::vector<std::vector<uint64_t>>& received,
                                const IRSParams& p, size_t e) {
  const Field& f = *p.field;
  std::vector<std::vector<uint64_t>> y(p.n_c, std::vector<uint64_t>(p.r));
  for (size_t j = 0; j < p.n_c; ++j)
    for (size_t i = 0; i < p.r; ++i) y[j][i] = received[i][j];
  LocalKernelResult kernels{std::move(y), std::vector<bool>(p.n_c, false)};
  DecodeParams dp;
  dp.n = p.r;
  dp.df = static_cast<int>(p.k) - 1;
  dp.dg = 0;
  dp.e = static_cast<int>(e);
  return decode_from_kernels(f, kernels, p.points, dp);
}

struct ReferenceBounds {
  size_t e_max_collab;  // floor(r(n-k)/(r+1)), collaborative radius
  double p_spr;         // e/q
  double p_bms;         // exp(1/q^(r-2))/(q-1)
  double p_glz;         // (dg+e)/q
};

inline ReferenceBounds reference_bounds(uint64_t q, size_t n_c, size_t k, size_t r, size_t e,
                                        int dg) {
  ReferenceBounds out{};
  out.e_max_collab = r * (n_c - k) / (r + 1);
  out.p_spr = static_cast<double>(e) / static_cast<double>(q);
  out.p_bms = std::exp(std::pow(static_cast<double>(q), 2.0 - static_cast<double>(r))) /
              (static_cast<double>(q) - 1.0);
  out.p_glz = static_cast<double>(dg + static_cast<int>(e)) / static_cast<double>(q);
  return out;
}

}  // namespace polsolve
