// Polynomial linear systems A(x) y = b(x) over F_q, their unique reduced
// rational solution f/g, seeded instance generation with controlled degrees,
// evaluation-point selection, and the error-free evaluation/interpolation
// solver.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polsolve/keymatrix.hpp"
#include "polsolve/matrix.hpp"
#include "polsolve/poly.hpp"
#include "polsolve/rng.hpp"

namespace polsolve {

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

// m x n system with full column rank over F_q(x); m >= n >= 1.
struct PolySystem {
  const Field* field = nullptr;
  size_t m = 0, n = 0;
  std::vector<Poly> A;  // row-major, m*n entries
  std::vector<Poly> b;  // m entries

  const Poly& a(size_t i, size_t j) const { return A[i * n + j]; }
  Poly& a(size_t i, size_t j) { return A[i * n + j]; }

  MatrixF eval_A(uint64_t alpha) const {
    MatrixF out(*field, m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) out.at(i, j) = a(i, j).eval(alpha);
    return out;
  }
  std::vector<uint64_t> eval_b(uint64_t alpha) const {
    std::vector<uint64_t> out(m);
    for (size_t i = 0; i < m; ++i) out[i] = b[i].eval(alpha);
    return out;
  }
};

// The reduced solution (f, g): g monic, GCD(GCD_i(f_i), g) = 1.
struct ReducedRationalSolution {
  std::vector<Poly> f;
  Poly g;

  int df() const {
    int d = -1;
    for (const Poly& p : f) d = std::max(d, p.degree());
    return d;
  }
  int dg() const { return g.degree(); }

  bool operator==(const ReducedRationalSolution& o) const { return f == o.f && g == o.g; }
  bool operator!=(const ReducedRationalSolution& o) const { return !(*this == o); }
};

inline std::vector<Poly> poly_mat_vec(const PolySystem& sys, const std::vector<Poly>& v) {
  std::vector<Poly> out;
  out.reserve(sys.m);
  for (size_t i = 0; i < sys.m; ++i) {
    Poly acc = Poly::zero(*sys.field);
    for (size_t j = 0; j < sys.n; ++j) acc = acc + sys.a(i, j) * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

// A f == g b as a polynomial identity.
inline bool satisfies(const PolySystem& sys, const std::vector<Poly>& f, const Poly& g) {
  if (f.size() != sys.n) return false;
  std::vector<Poly> lhs = poly_mat_vec(sys, f);
  for (size_t i = 0; i < sys.m; ++i)
    if (lhs[i] != sys.b[i] * g) return false;
  return true;
}

// GCD of the numerators and g; zero numerators are skipped.
inline Poly common_divisor(const std::vector<Poly>& f, const Poly& g) {
  Poly acc = g;
  for (const Poly& p : f) {
    if (p.is_zero()) continue;
    acc = Poly::gcd(acc, p);
    if (acc.is_one()) break;
  }
  return acc;
}

// Removes the common factor GCD(GCD_i(f_i), g) and rescales so g is monic.
inline ReducedRationalSolution reduce_fraction(std::vector<Poly> f, Poly g) {
  if (g.is_zero()) throw UsageError("denominator is zero");
  Poly common = common_divisor(f, g);
  if (!common.is_one()) {
    for (Poly& p : f) p = Poly::divrem(p, common).first;
    g = Poly::divrem(g, common).first;
  }
  const uint64_t scale = g.field().inv(g.leading());
  for (Poly& p : f) p = p.scaled(scale);
  g = g.scaled(scale);
  return ReducedRationalSolution{std::move(f), std::move(g)};
}

// Probabilistic full-column-rank check: rank n at any of a few random points.
inline bool has_full_column_rank(const PolySystem& sys, Rng& rng) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    const uint64_t alpha = rng.below(sys.field->q());
    if (sys.eval_A(alpha).rank() == sys.n) return true;
  }
  return false;
}

enum class GeneratorMode { kPlanted, kCramer };

// Random instance with a planted reduced solution: exact deg(g) = dg and
// max_i deg(f_i) <= df. A = g M and b = M f for a random full-rank M, so the
// roots of g are exactly rank-drop points of A and get excluded from
// evaluation. Cramer mode draws A and a polynomial y directly (g = 1).
inline std::pair<PolySystem, ReducedRationalSolution> generate_instance(
    const Field& field, size_t n, size_t m, int degA, int df, int dg, uint64_t seed,
    GeneratorMode mode = GeneratorMode::kPlanted) {
  if (m < n || n < 1) throw UsageError("need m >= n >= 1");
  Rng rng(seed);
  constexpr int kRetryBudget = 100;

  auto random_full_rank = [&](int deg) {
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
      std::vector<Poly> entries;
      entries.reserve(m * n);
      for (size_t i = 0; i < m * n; ++i) entries.push_back(Poly::random(field, deg, rng));
      PolySystem probe{&field, m, n, entries, std::vector<Poly>(m, Poly::zero(field))};
      if (has_full_column_rank(probe, rng)) return entries;
    }
    throw UsageError("could not draw a full-rank polynomial matrix");
  };

  if (mode == GeneratorMode::kCramer) {
    std::vector<Poly> A = random_full_rank(degA);
    std::vector<Poly> y;
    for (size_t j = 0; j < n; ++j) y.push_back(Poly::random(field, df, rng));
    PolySystem sys{&field, m, n, std::move(A), {}};
    sys.b = poly_mat_vec(sys, y);
    return {std::move(sys), ReducedRationalSolution{std::move(y), Poly::one(field)}};
  }

  Poly g = dg == 0 ? Poly::one(field) : Poly::random_monic(field, dg, rng);
  std::vector<Poly> f;
  for (int attempt = 0;; ++attempt) {
    if (attempt >= kRetryBudget)
      throw UsageError("could not draw numerators coprime with the denominator");
    f.clear();
    bool any_nonzero = false;
    for (size_t j = 0; j < n; ++j) {
      f.push_back(Poly::random(field, df, rng));
      any_nonzero = any_nonzero || !f.back().is_zero();
    }
    if (!any_nonzero && dg > 0) continue;
    if (common_divisor(f, g).is_one()) break;
  }
  std::vector<Poly> M = random_full_rank(degA);
  PolySystem sys{&field, m, n, {}, {}};
  sys.A.reserve(m * n);
  for (const Poly& entry : M) sys.A.push_back(entry * g);
  PolySystem m_only{&field, m, n, std::move(M), {}};
  sys.b = poly_mat_vec(m_only, f);
  return {std::move(sys), ReducedRationalSolution{std::move(f), std::move(g)}};
}

// The returned system keeps a pointer to the field, so a temporary would
// dangle; callers must pass an lvalue that outlives the instance.
std::pair<PolySystem, ReducedRationalSolution> generate_instance(
    Field&& field, size_t n, size_t m, int degA, int df, int dg, uint64_t seed,
    GeneratorMode mode = GeneratorMode::kPlanted) = delete;

// Counts the field points usable as evaluation points: g(alpha) != 0 and
// rank A(alpha) = n.
inline size_t count_usable_points(const PolySystem& sys, const Poly& g) {
  size_t count = 0;
  for (uint64_t v = 0; v < sys.field->q(); ++v)
    if (g.eval(v) != 0 && sys.eval_A(v).rank() == sys.n) ++count;
  return count;
}

// L distinct points with g(alpha) != 0 and rank A(alpha) = n, drawn by a
// seeded shuffle of the field enumeration.
inline std::vector<uint64_t> choose_evaluation_points(const PolySystem& sys, const Poly& g,
                                                      size_t L, Rng& rng) {
  const uint64_t q = sys.field->q();
  std::vector<uint64_t> all(q);
  for (uint64_t v = 0; v < q; ++v) all[v] = v;
  rng.shuffle(all);
  std::vector<uint64_t> chosen;
  for (uint64_t v : all) {
    if (g.eval(v) == 0) continue;
    if (sys.eval_A(v).rank() != sys.n) continue;
    chosen.push_back(v);
    if (chosen.size() == L) return chosen;
  }
  throw UsageError("field exhausted: only " + std::to_string(chosen.size()) + " of " +
                   std::to_string(L) + " usable evaluation points available");
}

// Error-free evaluation/interpolation solver: evaluate at df+dg+1 points
// where A keeps full rank, solve each evaluated system, and reconstruct the
// rational solution through the homogeneous key system with e = 0. Bounds
// may overestimate the true degrees; the reduction step strips the slack.
inline ReducedRationalSolution exact_solve(const PolySystem& sys, int df_bound, int dg_bound,
                                           uint64_t seed = 0) {
  if (df_bound < 0 || dg_bound < 0) throw UsageError("negative degree bound");
  Rng rng(seed);
  const size_t L = static_cast<size_t>(df_bound + dg_bound + 1);
  // Full rank of A(alpha) forces g(alpha) != 0 for reduced solutions.
  std::vector<uint64_t> points = choose_evaluation_points(sys, Poly::one(*sys.field), L, rng);
  std::vector<std::vector<uint64_t>> y;
  y.reserve(L);
  for (uint64_t alpha : points) {
    auto sol = sys.eval_A(alpha).solve(sys.eval_b(alpha));
    if (!sol) throw UsageError("inconsistent system at evaluation point");
    y.push_back(std::move(*sol));
  }
  KeyEquationMatrix key = build_key_matrix(*sys.field, y, points, sys.n, df_bound, dg_bound, 0);
  auto basis = key.m.right_kernel_basis();
  if (basis.empty()) throw UsageError("inconsistent system: key system has trivial kernel");
  auto [phi, psi] = split_key_vector(*sys.field, basis.front(), sys.n, df_bound, dg_bound, 0);
  if (psi.is_zero()) throw UsageError("inconsistent system: zero denominator candidate");
  ReducedRationalSolution sol = reduce_fraction(std::move(phi), std::move(psi));
  if (!satisfies(sys, sol.f, sol.g))
    throw UsageError("inconsistent system: interpolated solution fails verification");
  return sol;
}

// ---------------------------------------------------------------------------
// Instance text format (strict, line oriented, 1-based indices):
//   FIELD GF(p) | GF(p^k; m0,...,mk)
//   DIMS m n
//   A i j : c0,c1,...
//   B i : c0,c1,...
//   SOLUTION F i : c0,...      (optional planted solution)
//   SOLUTION G : c0,...
// Blank lines and lines starting with '#' are ignored.
// ---------------------------------------------------------------------------

// Owns its Field on the heap so the system's field pointer survives moves.
struct Instance {
  std::shared_ptr<const Field> field;
  PolySystem sys;
  std::optional<ReducedRationalSolution> solution;
};

inline std::string serialize_instance(const PolySystem& sys,
                                      const ReducedRationalSolution* sol) {
  std::string out = "FIELD " + sys.field->to_string() + "\n";
  out += "DIMS " + std::to_string(sys.m) + " " + std::to_string(sys.n) + "\n";
  for (size_t i = 0; i < sys.m; ++i)
    for (size_t j = 0; j < sys.n; ++j)
      out += "A " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " : " +
             sys.a(i, j).to_string() + "\n";
  for (size_t i = 0; i < sys.m; ++i)
    out += "B " + std::to_string(i + 1) + " : " + sys.b[i].to_string() + "\n";
  if (sol) {
    for (size_t i = 0; i < sol->f.size(); ++i)
      out += "SOLUTION F " + std::to_string(i + 1) + " : " + sol->f[i].to_string() + "\n";
    out += "SOLUTION G : " + sol->g.to_string() + "\n";
  }
  return out;
}

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::stringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

inline size_t parse_index(const std::string& s, size_t limit, size_t line_no,
                          const std::string& what) {
  size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_no, "bad " + what + " index: " + s);
  }
  if (pos != s.size() || v < 1 || v > limit)
    throw ParseError(line_no, what + " index out of range: " + s);
  return static_cast<size_t>(v - 1);
}

}  // namespace detail

// Parses the instance format. The returned Instance owns its Field; the
// PolySystem and solution reference it.
inline Instance parse_instance(const std::string& text) {
  std::optional<Field> field;
  std::optional<std::pair<size_t, size_t>> dims;
  std::vector<std::optional<Poly>> a_entries, b_entries, f_entries;
  std::optional<Poly> g_entry;

  std::stringstream ss(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];
    if (kind == "FIELD") {
      if (field) throw ParseError(line_no, "duplicate FIELD line");
      std::string spec;
      for (size_t i = 1; i < tokens.size(); ++i) spec += tokens[i];
      try {
        field.emplace(Field::parse(spec));
      } catch (const FieldError& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    if (kind == "DIMS") {
      if (!field) throw ParseError(line_no, "DIMS before FIELD");
      if (dims) throw ParseError(line_no, "duplicate DIMS line");
      if (tokens.size() != 3) throw ParseError(line_no, "DIMS needs m and n");
      size_t m = detail::parse_index(tokens[1], SIZE_MAX, line_no, "row") + 1;
      size_t n = detail::parse_index(tokens[2], SIZE_MAX, line_no, "column") + 1;
      if (m < n) throw ParseError(line_no, "need m >= n");
      dims = {m, n};
      a_entries.assign(m * n, std::nullopt);
      b_entries.assign(m, std::nullopt);
      f_entries.assign(n, std::nullopt);
      continue;
    }
    if (!field || !dims) throw ParseError(line_no, "entry before FIELD/DIMS");
    auto [m, n] = *dims;
    auto poly_after_colon = [&](size_t colon_pos) {
      if (colon_pos >= tokens.size() || tokens[colon_pos] != ":")
        throw ParseError(line_no, "expected ':' separator");
      std::string body;
      for (size_t i = colon_pos + 1; i < tokens.size(); ++i) body += tokens[i];
      try {
        return Poly::parse(*field, body);
      } catch (const std::exception& e) {
        throw ParseError(line_no, std::string("bad polynomial: ") + e.what());
      }
    };
    if (kind == "A") {
      if (tokens.size() < 5) throw ParseError(line_no, "malformed A line");
      size_t i = detail::parse_index(tokens[1], m, line_no, "row");
      size_t j = detail::parse_index(tokens[2], n, line_no, "column");
      if (a_entries[i * n + j]) throw ParseError(line_no, "duplicate A entry");
      a_entries[i * n + j] = poly_after_colon(3);
      continue;
    }
    if (kind == "B") {
      if (tokens.size() < 4) throw ParseError(line_no, "malformed B line");
      size_t i = detail::parse_index(tokens[1], m, line_no, "row");
      if (b_entries[i]) throw ParseError(line_no, "duplicate B entry");
      b_entries[i] = poly_after_colon(2);
      continue;
    }
    if (kind == "SOLUTION") {
      if (tokens.size() >= 3 && tokens[1] == "F") {
        size_t i = detail::parse_index(tokens[2], n, line_no, "solution");
        if (f_entries[i]) throw ParseError(line_no, "duplicate SOLUTION F entry");
        f_entries[i] = poly_after_colon(3);
        continue;
      }
      if (tokens.size() >= 2 && tokens[1] == "G") {
        if (g_entry) throw ParseError(line_no, "duplicate SOLUTION G line");
        g_entry = poly_after_colon(2);
        continue;
      }
      throw ParseError(line_no, "malformed SOLUTION line");
    }
    throw ParseError(line_no, "unknown line kind: " + kind);
  }

  if (!field) throw ParseError(line_no, "missing FIELD line");
  if (!dims) throw ParseError(line_no, "missing DIMS line");
  for (const auto& e : a_entries)
    if (!e) throw ParseError(line_no, "missing A entry");
  for (const auto& e : b_entries)
    if (!e) throw ParseError(line_no, "missing B entry");

  Instance inst{std::make_shared<const Field>(*field), {}, std::nullopt};
  inst.sys.field = inst.field.get();
  inst.sys.m = dims->first;
  inst.sys.n = dims->second;
  auto rebind = [&](const Poly& p) { return Poly(*inst.field, p.coeffs()); };
  for (const auto& e : a_entries) inst.sys.A.push_back(rebind(*e));
  for (const auto& e : b_entries) inst.sys.b.push_back(rebind(*e));

  const bool any_f = std::any_of(f_entries.begin(), f_entries.end(),
                                 [](const auto& e) { return e.has_value(); });
  if (any_f || g_entry) {
    for (const auto& e : f_entries)
      if (!e) throw ParseError(line_no, "incomplete SOLUTION F entries");
    if (!g_entry) throw ParseError(line_no, "missing SOLUTION G line");
    ReducedRationalSolution sol;
    for (const auto& e : f_entries) sol.f.push_back(rebind(*e));
    sol.g = rebind(*g_entry);
    inst.solution = std::move(sol);
  }
  return inst;
}

}  // namespace polsolve
