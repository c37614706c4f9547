// The black-box evaluation oracle: honest samples (A(alpha_l), b(alpha_l))
// or corrupted ones with uniformly random entries, resampled until the
// corruption is a true error (A_l f(alpha_l) != g(alpha_l) b_l) and A_l keeps
// full rank. Ground-truth corruption flags are carried for harness checks
// only; decoders read just (alpha_l, A_l, b_l).
#pragma once

#include <string>
#include <vector>

#include "polsolve/polsys.hpp"

namespace polsolve {

struct EvaluationSample {
  size_t index = 0;  // 1-based l
  uint64_t alpha = 0;
  MatrixF A;
  std::vector<uint64_t> b;
  bool is_corrupted = false;  // ground truth, harness only
};

struct ErrorPlan {
  size_t L = 0;
  std::vector<size_t> error_set;  // E subset of {1..L}, ascending

  static ErrorPlan random(size_t L, size_t e, Rng& rng) {
    if (e > L) throw UsageError("error count exceeds point count");
    ErrorPlan plan;
    plan.L = L;
    plan.error_set = rng.subset(L, e);
    return plan;
  }
  bool is_error(size_t l) const {
    return std::binary_search(error_set.begin(), error_set.end(), l);
  }
};

namespace detail {

inline MatrixF random_full_rank_matrix(const Field& f, size_t m, size_t n, Rng& rng) {
  constexpr int kBudget = 200;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    MatrixF A(f, m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) A.at(i, j) = rng.below(f.q());
    if (A.rank() == n) return A;
  }
  throw UsageError("could not draw a full-rank corruption matrix");
}

inline bool consistent_with(const MatrixF& A, const std::vector<uint64_t>& b,
                            const std::vector<uint64_t>& f_val, uint64_t g_val) {
  const Field& f = A.field();
  std::vector<uint64_t> lhs = A.apply(f_val);
  for (size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] != f.mul(g_val, b[i])) return false;
  return true;
}

}  // namespace detail

// One sample per point: honest evaluation outside the plan's error set,
// uniform full-rank corruption inside it. The planted solution defines what
// counts as an error, so |E| stays exactly as planned.
inline std::vector<EvaluationSample> sample_black_box(const PolySystem& sys,
                                                      const ReducedRationalSolution& sol,
                                                      const std::vector<uint64_t>& points,
                                                      const ErrorPlan& plan, Rng& rng) {
  if (points.size() != plan.L) throw UsageError("point count does not match the plan");
  const Field& f = *sys.field;
  std::vector<EvaluationSample> samples;
  samples.reserve(plan.L);
  for (size_t l = 1; l <= plan.L; ++l) {
    const uint64_t alpha = points[l - 1];
    if (!plan.is_error(l)) {
      samples.push_back({l, alpha, sys.eval_A(alpha), sys.eval_b(alpha), false});
      continue;
    }
    std::vector<uint64_t> f_val(sys.n);
    for (size_t j = 0; j < sys.n; ++j) f_val[j] = sol.f[j].eval(alpha);
    const uint64_t g_val = sol.g.eval(alpha);
    constexpr int kBudget = 200;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= kBudget) throw UsageError("corruption resampling budget exceeded");
      MatrixF A = detail::random_full_rank_matrix(f, sys.m, sys.n, rng);
      std::vector<uint64_t> b(sys.m);
      for (auto& v : b) v = rng.below(f.q());
      if (detail::consistent_with(A, b, f_val, g_val)) continue;
      samples.push_back({l, alpha, std::move(A), std::move(b), true});
      break;
    }
  }
  return samples;
}

// Structured, non-random errors: points in E get the honest evaluation of a
// different system of the same shape.
inline std::vector<EvaluationSample> adversarial_corrupt(const PolySystem& sys,
                                                         const std::vector<uint64_t>& points,
                                                         const std::vector<size_t>& error_set,
                                                         const PolySystem& alt) {
  if (alt.m != sys.m || alt.n != sys.n || *alt.field != *sys.field)
    throw UsageError("alternate system shape mismatch");
  std::vector<EvaluationSample> samples;
  samples.reserve(points.size());
  for (size_t l = 1; l <= points.size(); ++l) {
    const uint64_t alpha = points[l - 1];
    const bool corrupt = std::binary_search(error_set.begin(), error_set.end(), l);
    const PolySystem& src = corrupt ? alt : sys;
    samples.push_back({l, alpha, src.eval_A(alpha), src.eval_b(alpha), corrupt});
  }
  return samples;
}

// True error positions of a sample list relative to a known solution.
inline std::vector<size_t> effective_error_set(const std::vector<EvaluationSample>& samples,
                                               const ReducedRationalSolution& sol) {
  std::vector<size_t> errors;
  for (const auto& s : samples) {
    std::vector<uint64_t> f_val(sol.f.size());
    for (size_t j = 0; j < sol.f.size(); ++j) f_val[j] = sol.f[j].eval(s.alpha);
    if (!detail::consistent_with(s.A, s.b, f_val, sol.g.eval(s.alpha)))
      errors.push_back(s.index);
  }
  return errors;
}

// ---------------------------------------------------------------------------
// Samples text format:
//   FIELD ...
//   DIMS m n
//   SAMPLE l : alpha | a11,a12,...,amn | b1,...,bm
// Entries are element indices, A row-major.
// ---------------------------------------------------------------------------

struct SampleFile {
  std::shared_ptr<const Field> field;
  size_t m = 0, n = 0;
  std::vector<EvaluationSample> samples;
};

inline std::string serialize_samples(const Field& field, size_t m, size_t n,
                                     const std::vector<EvaluationSample>& samples) {
  std::string out = "FIELD " + field.to_string() + "\n";
  out += "DIMS " + std::to_string(m) + " " + std::to_string(n) + "\n";
  for (const auto& s : samples) {
    out += "SAMPLE " + std::to_string(s.index) + " : " + std::to_string(s.alpha) + " | ";
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j)
        out += (i + j ? "," : "") + std::to_string(s.A.at(i, j));
    out += " | ";
    for (size_t i = 0; i < m; ++i) out += (i ? "," : "") + std::to_string(s.b[i]);
    out += "\n";
  }
  return out;
}

inline SampleFile parse_samples(const std::string& text) {
  SampleFile out;
  std::stringstream ss(text);
  std::string line;
  size_t line_no = 0;
  auto split_csv = [](const std::string& s, size_t line) {
    std::vector<uint64_t> vals;
    std::stringstream cs(s);
    std::string item;
    while (std::getline(cs, item, ',')) {
      try {
        size_t pos = 0;
        vals.push_back(std::stoull(item, &pos));
        if (pos != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ParseError(line, "bad entry: " + item);
      }
    }
    return vals;
  };
  while (std::getline(ss, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "FIELD") {
      std::string spec;
      for (size_t i = 1; i < tokens.size(); ++i) spec += tokens[i];
      try {
        out.field = std::make_shared<const Field>(Field::parse(spec));
      } catch (const FieldError& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    if (tokens[0] == "DIMS") {
      if (tokens.size() != 3) throw ParseError(line_no, "DIMS needs m and n");
      out.m = detail::parse_index(tokens[1], SIZE_MAX, line_no, "row") + 1;
      out.n = detail::parse_index(tokens[2], SIZE_MAX, line_no, "column") + 1;
      continue;
    }
    if (tokens[0] == "SAMPLE") {
      if (!out.field || out.m == 0) throw ParseError(line_no, "SAMPLE before FIELD/DIMS");
      // Re-join and split on '|' since entries may be spaced arbitrarily.
      std::string rest;
      for (size_t i = 1; i < tokens.size(); ++i) rest += tokens[i] + " ";
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw ParseError(line_no, "expected ':'");
      auto strip = [](std::string s) {
        std::string r;
        for (char c : s)
          if (!std::isspace(static_cast<unsigned char>(c))) r += c;
        return r;
      };
      size_t l =
          detail::parse_index(strip(rest.substr(0, colon)), SIZE_MAX, line_no, "sample") + 1;
      std::vector<std::string> parts;
      std::string seg;
      std::stringstream ps(rest.substr(colon + 1));
      while (std::getline(ps, seg, '|')) parts.push_back(seg);
      if (parts.size() != 3) throw ParseError(line_no, "SAMPLE needs alpha | A | b");
      auto alpha_vals = split_csv(strip(parts[0]), line_no);
      auto a_vals = split_csv(strip(parts[1]), line_no);
      auto b_vals = split_csv(strip(parts[2]), line_no);
      if (alpha_vals.size() != 1) throw ParseError(line_no, "expected one alpha");
      if (a_vals.size() != out.m * out.n) throw ParseError(line_no, "wrong A entry count");
      if (b_vals.size() != out.m) throw ParseError(line_no, "wrong b entry count");
      const Field& f = *out.field;
      if (alpha_vals[0] >= f.q()) throw ParseError(line_no, "alpha out of range");
      MatrixF A(f, out.m, out.n);
      for (size_t i = 0; i < out.m; ++i)
        for (size_t j = 0; j < out.n; ++j) {
          if (a_vals[i * out.n + j] >= f.q()) throw ParseError(line_no, "entry out of range");
          A.at(i, j) = a_vals[i * out.n + j];
        }
      for (uint64_t v : b_vals)
        if (v >= f.q()) throw ParseError(line_no, "entry out of range");
      out.samples.push_back({l, alpha_vals[0], std::move(A), std::move(b_vals), false});
      continue;
    }
    throw ParseError(line_no, "unknown line kind: " + tokens[0]);
  }
  if (!out.field) throw ParseError(line_no, "missing FIELD line");
  if (out.m == 0) throw ParseError(line_no, "missing DIMS line");
  return out;
}

}  // namespace polsolve
