// Univariate polynomials over F_q with exact arithmetic: Horner evaluation,
// Lagrange interpolation, Euclidean division and monic GCD.
//
// Coefficients are stored ascending; the zero polynomial has degree -1.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "polsolve/field.hpp"
#include "polsolve/rng.hpp"

namespace polsolve {

class Poly {
 public:
  Poly() : field_(nullptr) {}
  explicit Poly(const Field& f) : field_(&f) {}

  // Ascending raw coefficient values; trailing zeros are trimmed.
  Poly(const Field& f, std::vector<uint64_t> coeffs) : field_(&f), c_(std::move(coeffs)) {
    for (uint64_t c : c_)
      if (c >= f.q()) throw FieldError("coefficient out of range");
    trim();
  }

  static Poly zero(const Field& f) { return Poly(f); }
  static Poly constant(const Field& f, uint64_t c) { return Poly(f, {c}); }
  static Poly one(const Field& f) { return constant(f, 1); }
  // x - a
  static Poly linear_root(const Field& f, uint64_t a) { return Poly(f, {f.neg(a), 1}); }

  static Poly random(const Field& f, int max_deg, Rng& rng) {
    std::vector<uint64_t> c(static_cast<size_t>(max_deg + 1));
    for (auto& x : c) x = rng.below(f.q());
    return Poly(f, std::move(c));
  }
  static Poly random_monic(const Field& f, int deg, Rng& rng) {
    std::vector<uint64_t> c(static_cast<size_t>(deg + 1));
    for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = rng.below(f.q());
    c.back() = 1;
    return Poly(f, std::move(c));
  }

  const Field& field() const { return *field_; }
  // Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<uint64_t>& coeffs() const { return c_; }
  uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  uint64_t eval(uint64_t alpha) const {
    uint64_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, alpha), c_[i]);
    return acc;
  }
  FieldElement operator()(const FieldElement& alpha) const {
    if (*field_ != alpha.field()) throw FieldError("field mismatch");
    return FieldElement::raw(*field_, eval(alpha.value()));
  }

  Poly operator+(const Poly& o) const {
    check(o);
    std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = field_->add(coeff(i), o.coeff(i));
    return Poly(*field_, std::move(r));
  }
  Poly operator-(const Poly& o) const {
    check(o);
    std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = field_->sub(coeff(i), o.coeff(i));
    return Poly(*field_, std::move(r));
  }
  Poly operator*(const Poly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return zero(*field_);
    std::vector<uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
    }
    return Poly(*field_, std::move(r));
  }
  Poly scaled(uint64_t s) const {
    std::vector<uint64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = field_->mul(c_[i], s);
    return Poly(*field_, std::move(r));
  }

  // a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    a.check(b);
    if (b.is_zero()) throw FieldError("polynomial division by zero");
    const Field& f = *a.field_;
    std::vector<uint64_t> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {zero(f), a};
    std::vector<uint64_t> quo(static_cast<size_t>(a.degree() - db + 1), 0);
    const uint64_t lead_inv = f.inv(b.leading());
    for (int d = a.degree(); d >= db; --d) {
      const uint64_t top = rem[static_cast<size_t>(d)];
      if (top == 0) continue;
      const uint64_t factor = f.mul(top, lead_inv);
      quo[static_cast<size_t>(d - db)] = factor;
      for (int i = 0; i <= db; ++i) {
        auto& slot = rem[static_cast<size_t>(d - db + i)];
        slot = f.sub(slot, f.mul(factor, b.c_[static_cast<size_t>(i)]));
      }
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
  }

  bool divides(const Poly& a) const { return divrem(a, *this).second.is_zero(); }

  Poly monic() const {
    if (is_zero()) throw FieldError("zero polynomial has no monic form");
    return scaled(field_->inv(leading()));
  }

  // Monic GCD by the Euclidean algorithm; gcd(a, 0) = monic(a).
  static Poly gcd(const Poly& a, const Poly& b) {
    a.check(b);
    if (a.is_zero() && b.is_zero()) throw FieldError("gcd(0, 0) undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
      Poly r = divrem(x, y).second;
      x = y;
      y = r;
    }
    return x.monic();
  }

  // Unique polynomial of degree < #points through all (alpha, value) pairs.
  static Poly interpolate(const Field& f,
                          const std::vector<std::pair<uint64_t, uint64_t>>& points) {
    if (points.empty()) throw FieldError("interpolation needs at least one point");
    for (size_t i = 0; i < points.size(); ++i)
      for (size_t j = i + 1; j < points.size(); ++j)
        if (points[i].first == points[j].first)
          throw FieldError("duplicate interpolation abscissa");
    Poly acc = zero(f);
    for (size_t i = 0; i < points.size(); ++i) {
      Poly basis = one(f);
      uint64_t denom = 1;
      for (size_t j = 0; j < points.size(); ++j) {
        if (j == i) continue;
        basis = basis * linear_root(f, points[j].first);
        denom = f.mul(denom, f.sub(points[i].first, points[j].first));
      }
      acc = acc + basis.scaled(f.mul(points[i].second, f.inv(denom)));
    }
    return acc;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Comma-separated ascending coefficients; "0" for the zero polynomial.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c_[i]);
    }
    return out;
  }
  static Poly parse(const Field& f, const std::string& text) {
    std::vector<uint64_t> c;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
      size_t pos = 0;
      unsigned long long v = std::stoull(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw FieldError("bad coefficient: " + item);
      c.push_back(v);
    }
    if (c.empty()) throw FieldError("empty polynomial text");
    return Poly(f, std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void check(const Poly& o) const {
    if (field_ != o.field_ && *field_ != *o.field_) throw FieldError("field mismatch");
  }

  const Field* field_;
  std::vector<uint64_t> c_;
};

}  // namespace polsolve
