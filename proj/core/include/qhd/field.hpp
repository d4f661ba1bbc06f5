#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhd {

// Coefficient field for path-algebra elements. Everything downstream
// (reduction, completion, the chain verifier) is exact, so the field must be
// exact too: rationals by default, an odd prime field as the fast option.
template <class K>
concept Field = std::regular<K> && requires(K a, const K b) {
  { K::zero() } -> std::same_as<K>;
  { K::one() } -> std::same_as<K>;
  { a += b } -> std::same_as<K&>;
  { a -= b } -> std::same_as<K&>;
  { a *= b } -> std::same_as<K&>;
  { b.inverse() } -> std::same_as<K>;
  { -b } -> std::same_as<K>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b.str() } -> std::convertible_to<std::string>;
};

// Arbitrary-precision rational, the acceptance-grade coefficient type.
class Rational {
 public:
  using rep = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long n) : v_(n) {}                        // NOLINT: implicit by design
  Rational(long num, long den) : v_(num) { v_ /= den; }
  explicit Rational(rep v) : v_(std::move(v)) {}

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  Rational operator-() const { return Rational(rep(-v_)); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rational(rep(1) / v_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  const rep& value() const { return v_; }

  // "p" for integers, "p/q" otherwise; denominators are kept positive by the
  // backend, so the sign always sits on the numerator.
  std::string str() const { return v_.str(); }

 private:
  rep v_;
};

// Z/p for an odd prime p < 2^31, fixed once per process before any use.
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(long n) {
    long r = n % static_cast<long>(modulus_);
    if (r < 0) r += static_cast<long>(modulus_);
    v_ = static_cast<std::uint64_t>(r);
  }

  static void set_modulus(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31)) throw std::domain_error("modulus out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::domain_error("modulus is not prime");
    modulus_ = p;
  }
  static std::uint64_t modulus() { return modulus_; }

  static PrimeField zero() { return PrimeField(); }
  static PrimeField one() { return PrimeField(1); }
  static PrimeField from_rational(const Rational& q);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  PrimeField& operator+=(const PrimeField& o) {
    v_ += o.v_;
    if (v_ >= modulus_) v_ -= modulus_;
    return *this;
  }
  PrimeField& operator-=(const PrimeField& o) {
    v_ += modulus_ - o.v_;
    if (v_ >= modulus_) v_ -= modulus_;
    return *this;
  }
  PrimeField& operator*=(const PrimeField& o) {
    v_ = (v_ * o.v_) % modulus_;
    return *this;
  }

  friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
  friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
  PrimeField operator-() const { PrimeField r; r.v_ = v_ ? modulus_ - v_ : 0; return r; }

  PrimeField inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero");
    // Fermat: v^(p-2) mod p.
    std::uint64_t e = modulus_ - 2, base = v_, acc = 1;
    while (e) {
      if (e & 1) acc = (acc * base) % modulus_;
      base = (base * base) % modulus_;
      e >>= 1;
    }
    PrimeField r;
    r.v_ = acc;
    return r;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  std::uint64_t raw() const { return v_; }
  std::string str() const { return std::to_string(v_); }

 private:
  static inline std::uint64_t modulus_ = 2147483647;  // until set_modulus
  std::uint64_t v_ = 0;
};

inline PrimeField from_rational(const Rational& q, PrimeField /*tag*/) {
  return PrimeField::from_rational(q);
}
inline Rational from_rational(const Rational& q, Rational /*tag*/) { return q; }

inline PrimeField PrimeField::from_rational(const Rational& q) {
  using boost::multiprecision::cpp_int;
  const cpp_int p(modulus_);
  cpp_int num = numerator(q.value()) % p;
  if (num < 0) num += p;
  cpp_int den = denominator(q.value()) % p;
  PrimeField n(static_cast<long>(num)), d(static_cast<long>(den));
  return n * d.inverse();
}

static_assert(Field<Rational>);
static_assert(Field<PrimeField>);

}  // namespace qhd
