#ifndef WPGL_FIELD_HPP
#define WPGL_FIELD_HPP

#include <gmpxx.h>

#include <cctype>
#include <concepts>
#include <cstdint>
#include <string>

#include "wpgl/common.hpp"

namespace wpgl {

// ---------------------------------------------------------------------------
// Rational numbers (arbitrary precision, always reduced, denominator > 0).
// ---------------------------------------------------------------------------

class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(long num, long den) {
    require(den != 0, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "a" or "a/b" with optional leading '-', no decimals.
  static Rational parse(const std::string& s) {
    auto is_int = [](const std::string& t) {
      if (t.empty()) return false;
      std::size_t i = (t[0] == '-') ? 1 : 0;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      require(is_int(s), "bad rational literal: " + s);
      return Rational(mpq_class(mpz_class(s)));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    require(is_int(num) && is_int(den), "bad rational literal: " + s);
    mpz_class d(den);
    require(d != 0, "rational with zero denominator: " + s);
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  const mpz_class num() const { return v_.get_num(); }
  const mpz_class den() const { return v_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    require(!o.is_zero(), "division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational inverse() const {
    require(!is_zero(), "division by zero");
    return Rational(mpq_class(1 / v_));
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  // Canonical "a" or "a/b".
  std::string str() const { return v_.get_str(); }

private:
  mpq_class v_;
};

struct RationalField {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long n) const { return Rational(n); }
  Elem parse(const std::string& s) const { return Rational::parse(s); }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

// ---------------------------------------------------------------------------
// Prime fields F_p, p < 2^31 so products fit in 64 bits.
// ---------------------------------------------------------------------------

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

class FpElem {
public:
  FpElem(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FpElem operator-() const { return FpElem(v_ == 0 ? 0 : p_ - v_, p_); }
  FpElem operator+(const FpElem& o) const {
    check(o);
    return FpElem((v_ + o.v_) % p_, p_);
  }
  FpElem operator-(const FpElem& o) const {
    check(o);
    return FpElem((v_ + p_ - o.v_) % p_, p_);
  }
  FpElem operator*(const FpElem& o) const {
    check(o);
    return FpElem((v_ * o.v_) % p_, p_);
  }
  FpElem operator/(const FpElem& o) const { return *this * o.inverse(); }
  FpElem inverse() const {
    require(v_ != 0, "division by zero");
    // extended Euclid on (v, p)
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(v_);
    while (nr != 0) {
      const std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return FpElem(static_cast<std::uint64_t>(t), p_);
  }

  bool operator==(const FpElem& o) const {
    check(o);
    return v_ == o.v_;
  }
  bool operator!=(const FpElem& o) const { return !(*this == o); }

  std::string str() const { return std::to_string(v_); }

private:
  void check(const FpElem& o) const { require(p_ == o.p_, "field mismatch"); }
  std::uint64_t v_, p_;
};

class PrimeField {
public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    require(p < (std::uint64_t{1} << 31), "prime field modulus too large");
    require(is_prime_u64(p), "modulus is not prime: " + std::to_string(p));
  }

  using Elem = FpElem;
  std::uint64_t modulus() const { return p_; }
  Elem zero() const { return FpElem(0, p_); }
  Elem one() const { return FpElem(1, p_); }
  Elem from_int(long n) const {
    const long m = static_cast<long>(p_);
    long r = n % m;
    if (r < 0) r += m;
    return FpElem(static_cast<std::uint64_t>(r), p_);
  }
  Elem parse(const std::string& s) const {
    require(!s.empty(), "bad field element literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    require(i < s.size(), "bad field element literal: " + s);
    for (std::size_t k = i; k < s.size(); ++k)
      require(std::isdigit(static_cast<unsigned char>(s[k])) != 0,
              "bad field element literal: " + s);
    // reduce via mpz so arbitrarily long literals work
    mpz_class z(s);
    mpz_class r = z % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return FpElem(r.get_ui(), p_);
  }
  std::string name() const { return "F" + std::to_string(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint64_t p_;
};

template <class F>
concept CoefficientField = requires(const F f, const typename F::Elem a,
                                    const typename F::Elem b) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(long{}) } -> std::same_as<typename F::Elem>;
  { a + b } -> std::same_as<typename F::Elem>;
  { a - b } -> std::same_as<typename F::Elem>;
  { a* b } -> std::same_as<typename F::Elem>;
  { a / b } -> std::same_as<typename F::Elem>;
  { -a } -> std::same_as<typename F::Elem>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { f == f } -> std::convertible_to<bool>;
};

template <class Elem>
Elem elem_pow(Elem base, unsigned long e, Elem acc /* one */) {
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1UL;
  }
  return acc;
}

}  // namespace wpgl

#endif
