// Exact rational scalar for the Eigen-based linear algebra.
//
// Values whose numerator and denominator fit in 64 bits are stored inline and
// combined with 128-bit intermediates; anything larger falls back to a GMP
// rational. Arithmetic never loses precision.
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <Eigen/Core>


namespace hessgkm {

namespace detail {
struct BigRational;
struct BigDeleter {
  void operator()(BigRational* p) const noexcept;
};
}

class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) noexcept : num_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept;
  ~Rational();

  /// Parses "p", "-p" or "p/q" with arbitrary-length integers.
  static Rational parse(const std::string& text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const noexcept { return !big_; }
  int sign() const;

  std::string numerator_string() const;
  std::string denominator_string() const;
  std::string str() const;
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  /// this -= a * b, the elimination kernel.
  void sub_mul(const Rational& a, const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  void set_big(detail::BigRational&& value);
  detail::BigRational to_big() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<detail::BigRational, detail::BigDeleter> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace hessgkm

template <>
struct std::hash<hessgkm::Rational> {
  std::size_t operator()(const hessgkm::Rational& r) const { return r.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<hessgkm::Rational> : GenericNumTraits<hessgkm::Rational> {
  using Real = hessgkm::Rational;
  using NonInteger = hessgkm::Rational;
  using Nested = hessgkm::Rational;
  using Literal = hessgkm::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 8
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
