// Exact arithmetic over F_q: prime fields GF(p) and binary extensions GF(2^k).
//
// Elements are stored as a single machine word holding the canonical
// representative: the residue for GF(p), the coefficient bitmask for GF(2^k)
// (bit i = coefficient of x^i). The integer encoding sum_i c_i * p^i doubles
// as the element's index in the field enumeration and as its textual form.
#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polsolve {

class FieldError : public std::runtime_error {
 public:
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Multiplication in GF(2)[x] modulo the bit-encoded irreducible of degree k.
inline uint64_t gf2_mul(uint64_t a, uint64_t b, uint64_t modulus, unsigned k) {
  uint64_t acc = 0;
  const uint64_t top = uint64_t(1) << (k - 1);
  while (b != 0) {
    if (b & 1) acc ^= a;
    b >>= 1;
    const bool carry = (a & top) != 0;
    a <<= 1;
    if (carry) a ^= modulus;
  }
  return acc & ((k == 64) ? ~uint64_t(0) : ((uint64_t(1) << k) - 1));
}

}  // namespace detail

// The finite field F_q, q = p^k. Immutable after construction; FieldElement
// values keep a raw pointer to their Field, so the Field must outlive them.
class Field {
 public:
  // Prime field GF(p).
  explicit Field(uint64_t p) : p_(p), k_(1), q_(p) {
    if (!detail::is_prime(p)) throw FieldError("characteristic must be prime");
    build_tables();
  }

  // Extension field GF(p^k), modulus given as ascending coefficients
  // m0..mk of an irreducible degree-k polynomial over GF(p).
  // Only p = 2 extensions are supported for k > 1.
  Field(uint64_t p, unsigned k, std::vector<uint64_t> modulus)
      : p_(p), k_(k), modulus_coeffs_(std::move(modulus)) {
    if (!detail::is_prime(p)) throw FieldError("characteristic must be prime");
    if (k < 1) throw FieldError("extension degree must be >= 1");
    if (k == 1) {
      q_ = p;
      build_tables();
      return;
    }
    if (p != 2) throw FieldError("only GF(2^k) extensions are supported");
    if (k > 32) throw FieldError("extension degree too large");
    if (modulus_coeffs_.size() != k + 1)
      throw FieldError("modulus must have k+1 coefficients");
    q_ = uint64_t(1) << k;
    modulus_bits_ = 0;
    for (unsigned i = 0; i <= k; ++i) {
      if (modulus_coeffs_[i] >= 2) throw FieldError("modulus coefficient out of range");
      modulus_bits_ |= modulus_coeffs_[i] << i;
    }
    if (!(modulus_bits_ >> k)) throw FieldError("modulus must have degree k");
    if (!irreducible_gf2(modulus_bits_, k)) throw FieldError("modulus is reducible");
    build_tables();
  }

  // Default primitive moduli for the small binary extensions used here.
  static Field gf2ext(unsigned k) {
    static const uint64_t kDefault[] = {0,      0,      0b111,       0b1011,
                                        0b10011, 0b100101, 0b1000011, 0b10000011,
                                        0b100011101};
    if (k == 1) return Field(2);
    if (k < 2 || k > 8) throw FieldError("no default modulus for GF(2^" + std::to_string(k) + ")");
    std::vector<uint64_t> m(k + 1);
    for (unsigned i = 0; i <= k; ++i) m[i] = (kDefault[k] >> i) & 1;
    return Field(2, k, std::move(m));
  }

  // Textual forms: "GF(p)", "GF(p^k)" (default modulus), "GF(p^k; m0,...,mk)".
  static Field parse(const std::string& text) {
    auto malformed = [&] { return FieldError("malformed field spec: " + text); };
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')') throw malformed();
    s = s.substr(3, s.size() - 4);
    std::string head = s;
    std::string tail;
    if (auto semi = s.find(';'); semi != std::string::npos) {
      head = s.substr(0, semi);
      tail = s.substr(semi + 1);
    }
    uint64_t p = 0;
    unsigned k = 1;
    if (auto caret = head.find('^'); caret != std::string::npos) {
      p = parse_u64(head.substr(0, caret));
      k = static_cast<unsigned>(parse_u64(head.substr(caret + 1)));
    } else {
      p = parse_u64(head);
    }
    if (tail.empty()) {
      if (k == 1) return Field(p);
      if (p != 2) throw FieldError("explicit modulus required for p != 2 extensions");
      return gf2ext(k);
    }
    std::vector<uint64_t> coeffs;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_u64(item));
    return Field(p, k, std::move(coeffs));
  }

  std::string to_string() const {
    if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
    std::string out = "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + "; ";
    for (unsigned i = 0; i <= k_; ++i) {
      if (i) out += ",";
      out += std::to_string(modulus_coeffs_[i]);
    }
    return out + ")";
  }

  uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  uint64_t q() const { return q_; }
  const std::vector<uint64_t>& modulus() const { return modulus_coeffs_; }

  bool operator==(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_coeffs_ == o.modulus_coeffs_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  // Raw-value arithmetic on canonical representatives.
  uint64_t add(uint64_t a, uint64_t b) const {
    if (k_ > 1) return a ^ b;
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const {
    if (k_ > 1) return a ^ b;
    return a >= b ? a - b : a + p_ - b;
  }
  uint64_t neg(uint64_t a) const {
    if (k_ > 1) return a;
    return a == 0 ? 0 : p_ - a;
  }
  uint64_t mul(uint64_t a, uint64_t b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    if (k_ > 1) return detail::gf2_mul(a, b, modulus_bits_, k_);
    return (static_cast<unsigned __int128>(a) * b) % p_;
  }
  uint64_t inv(uint64_t a) const {
    if (a == 0) throw FieldError("division by zero");
    if (!inv_table_.empty()) return inv_table_[a];
    if (k_ == 1) return prime_inv(a);
    // a^(q-2) by square-and-multiply
    uint64_t result = 1, base = a, exp = q_ - 2;
    while (exp) {
      if (exp & 1) result = mul(result, base);
      base = mul(base, base);
      exp >>= 1;
    }
    return result;
  }
  uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t result = 1;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  // Element with index i in the canonical enumeration 0..q-1.
  uint64_t element(uint64_t index) const {
    if (index >= q_) throw FieldError("element index out of range");
    return index;
  }

 private:
  static uint64_t parse_u64(const std::string& s) {
    if (s.empty()) throw FieldError("empty number in field spec");
    uint64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw FieldError("bad number in field spec: " + s);
      v = v * 10 + static_cast<uint64_t>(c - '0');
    }
    return v;
  }

  uint64_t prime_inv(uint64_t a) const {
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p_), new_r = static_cast<int64_t>(a);
    while (new_r != 0) {
      int64_t qq = r / new_r;
      t -= qq * new_t, std::swap(t, new_t);
      r -= qq * new_r, std::swap(r, new_r);
    }
    if (r != 1) throw FieldError("element not invertible");
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(p_) : t);
  }

  // Brute-force irreducibility over GF(2): no divisor of degree 1..k/2.
  static bool irreducible_gf2(uint64_t poly, unsigned k) {
    for (unsigned d = 1; 2 * d <= k; ++d) {
      for (uint64_t cand = (uint64_t(1) << d); cand < (uint64_t(1) << (d + 1)); ++cand) {
        if (gf2_poly_mod(poly, cand) == 0) return false;
      }
    }
    return true;
  }
  static uint64_t gf2_poly_mod(uint64_t a, uint64_t b) {
    const int db = 63 - __builtin_clzll(b);
    while (true) {
      if (a == 0) return 0;
      const int da = 63 - __builtin_clzll(a);
      if (da < db) return a;
      a ^= b << (da - db);
    }
  }

  void build_tables() {
    if (q_ > kTableLimit) return;
    mul_table_.resize(q_ * q_);
    inv_table_.assign(q_, 0);
    for (uint64_t a = 0; a < q_; ++a) {
      for (uint64_t b = 0; b < q_; ++b) {
        const uint64_t m = (k_ > 1) ? detail::gf2_mul(a, b, modulus_bits_, k_)
                                    : (a * b) % p_;
        mul_table_[a * q_ + b] = m;
        if (m == 1) inv_table_[a] = b;
      }
    }
  }

  static constexpr uint64_t kTableLimit = 1024;

  uint64_t p_;
  unsigned k_;
  uint64_t q_ = 0;
  std::vector<uint64_t> modulus_coeffs_;
  uint64_t modulus_bits_ = 0;
  std::vector<uint64_t> mul_table_;
  std::vector<uint64_t> inv_table_;
};

// A field element: canonical word-sized value plus its owning field.
class FieldElement {
 public:
  FieldElement() : field_(nullptr), v_(0) {}
  FieldElement(const Field& f, uint64_t value) : field_(&f), v_(value) {
    if (value >= f.q()) throw FieldError("element value out of range");
  }

  const Field& field() const { return *field_; }
  uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const {
    check(o);
    return raw(*field_, field_->add(v_, o.v_));
  }
  FieldElement operator-(const FieldElement& o) const {
    check(o);
    return raw(*field_, field_->sub(v_, o.v_));
  }
  FieldElement operator*(const FieldElement& o) const {
    check(o);
    return raw(*field_, field_->mul(v_, o.v_));
  }
  FieldElement operator/(const FieldElement& o) const {
    check(o);
    return raw(*field_, field_->div(v_, o.v_));
  }
  FieldElement operator-() const { return raw(*field_, field_->neg(v_)); }
  FieldElement inverse() const { return raw(*field_, field_->inv(v_)); }

  bool operator==(const FieldElement& o) const { return v_ == o.v_ && same_field(o); }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  static FieldElement raw(const Field& f, uint64_t v) {
    FieldElement e;
    e.field_ = &f;
    e.v_ = v;
    return e;
  }

 private:
  bool same_field(const FieldElement& o) const {
    return field_ == o.field_ || (field_ && o.field_ && *field_ == *o.field_);
  }
  void check(const FieldElement& o) const {
    if (!same_field(o)) throw FieldError("field mismatch");
  }

  const Field* field_;
  uint64_t v_;
};

}  // namespace polsolve
