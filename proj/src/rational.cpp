#include "hessgkm/rational.hpp"

#include <gmpxx.h>

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hessgkm {

namespace detail {
struct BigRational {
  mpq_class value;
};
void BigDeleter::operator()(BigRational* p) const noexcept { delete p; }
}  // namespace detail

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// The most negative value is excluded so negation and abs stay in range.
inline bool fits(i128 v) { return v > kMin && v <= kMax; }

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

inline std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v);
}

inline u128 uabs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) return gcd64(std::uint64_t(a), std::uint64_t(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = uabs128(v);
  mpz_class hi(static_cast<unsigned long>(std::uint64_t(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(std::uint64_t(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_fits_i64(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != mpz_class(static_cast<long>(kMin));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  u128 g = gcd128(uabs128(nn), u128(dd));
  if (g > 1) {
    nn /= i128(g);
    dd /= i128(g);
  }
  if (fits(nn) && fits(dd)) {
    num_ = std::int64_t(nn);
    den_ = std::int64_t(dd);
  } else {
    detail::BigRational b{mpq_class(to_mpz(nn), to_mpz(dd))};
    b.value.canonicalize();
    set_big(std::move(b));
  }
}

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_.reset(new detail::BigRational(*other.big_));
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_)
    big_.reset(new detail::BigRational(*other.big_));
  else
    big_.reset();
  return *this;
}

Rational::~Rational() = default;
Rational::Rational(Rational&& other) noexcept = default;
Rational& Rational::operator=(Rational&& other) noexcept = default;

detail::BigRational Rational::to_big() const {
  if (big_) return *big_;
  return detail::BigRational{
      mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)))};
}

void Rational::set_big(detail::BigRational&& value) {
  const mpz_class& n = value.value.get_num();
  const mpz_class& d = value.value.get_den();
  if (mpz_fits_i64(n) && mpz_fits_i64(d)) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_.reset(new detail::BigRational(std::move(value)));
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q.canonicalize();
  Rational r;
  r.set_big(detail::BigRational{std::move(q)});
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->value.get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(big_->value);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::numerator_string() const {
  return big_ ? big_->value.get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return big_ ? big_->value.get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

double Rational::to_double() const {
  return big_ ? big_->value.get_d() : double(num_) / double(den_);
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational r;
  r.set_big(detail::BigRational{mpq_class(-big_->value)});
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, o.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    } else {
      const std::uint64_t g = gcd64(std::uint64_t(den_), std::uint64_t(o.den_));
      if (g == 1) {
        i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        i128 d = i128(den_) * o.den_;
        if (fits(n) && fits(d)) {
          num_ = std::int64_t(n);
          den_ = std::int64_t(d);
          return *this;
        }
      } else {
        const std::int64_t b = den_ / std::int64_t(g);
        const std::int64_t d = o.den_ / std::int64_t(g);
        i128 t = i128(num_) * d + i128(o.num_) * b;
        if (t == 0) {
          num_ = 0;
          den_ = 1;
          return *this;
        }
        const std::uint64_t g2 = gcd64(std::uint64_t(uabs128(t) % g), g);
        i128 n = t / i128(g2);
        i128 dd = i128(b) * d * i128(g / g2);
        if (fits(n) && fits(dd)) {
          num_ = std::int64_t(n);
          den_ = std::int64_t(dd);
          return *this;
        }
      }
    }
  }
  auto a = to_big();
  a.value += o.to_big().value;
  set_big(std::move(a));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const std::int64_t g1 = std::int64_t(gcd64(uabs(num_), std::uint64_t(o.den_)));
    const std::int64_t g2 = std::int64_t(gcd64(uabs(o.num_), std::uint64_t(den_)));
    i128 n = i128(num_ / g1) * (o.num_ / g2);
    i128 d = i128(den_ / g2) * (o.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = std::int64_t(n);
      den_ = std::int64_t(d);
      return *this;
    }
  }
  auto a = to_big();
  a.value *= o.to_big().value;
  set_big(std::move(a));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!o.big_) {
    Rational inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
  }
  auto a = to_big();
  a.value /= o.big_->value;
  set_big(std::move(a));
  return *this;
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    std::int64_t p, r;
    if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_sub_overflow(num_, p, &r) &&
        r != kMin) {
      num_ = r;
      return;
    }
  }
  Rational t = a;
  t *= b;
  *this -= t;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return a.big_->value == b.big_->value;
  // Canonical forms: a small value never equals a big one.
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_big().value, b.to_big().value);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Rational::hash() const {
  if (!big_) {
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  return std::hash<std::string>{}(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hessgkm
