#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "hessgkm/rational.hpp"

using hessgkm::Rational;
using Ref = boost::multiprecision::cpp_rational;

namespace {

std::string ref_str(const Ref& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace

TEST_CASE("small arithmetic") {
  const Rational a(1, 2), b(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(0, 5).is_zero());
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(3, 3).is_one());
  CHECK(-Rational(2, 5) == Rational(-2, 5));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(abs(Rational(-7, 3)) == Rational(7, 3));
}

TEST_CASE("zero denominator throws") {
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("overflow promotes and results demote") {
  Rational big(std::int64_t(1) << 62);
  Rational sq = big * big;
  CHECK(!sq.is_small());
  CHECK(sq.str() == "21267647932558653966460912964485513216");
  Rational back = sq / big;
  CHECK(back == big);
  CHECK(back.is_small());
  CHECK(Rational::parse("-123456789012345678901234567890/2").str() == "-61728394506172839450617283945");
  CHECK(Rational::parse("10/4").str() == "5/2");
}

TEST_CASE("random arithmetic agrees with an independent rational type") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> small(-50, 50);
  std::uniform_int_distribution<std::int64_t> large(-(std::int64_t(1) << 40), std::int64_t(1) << 40);
  for (int trial = 0; trial < 2000; ++trial) {
    auto draw = [&](bool big) {
      std::int64_t n = big ? large(rng) : small(rng);
      std::int64_t d = big ? large(rng) : small(rng);
      if (d == 0) d = 1;
      // This boost version rejects negative denominators.
      if (d < 0) {
        n = -n;
        d = -d;
      }
      return std::make_pair(n, d);
    };
    const auto [an, ad] = draw(trial % 3 == 0);
    const auto [bn, bd] = draw(trial % 5 == 0);
    Rational a(an, ad), b(bn, bd);
    Ref ra(an, ad), rb(bn, bd);
    Rational acc = a;
    Ref racc = ra;
    for (int step = 0; step < 6; ++step) {
      switch ((trial + step) % 4) {
        case 0: acc += b; racc += rb; break;
        case 1: acc -= b; racc -= rb; break;
        case 2: acc *= b; racc *= rb; break;
        case 3:
          if (!b.is_zero()) {
            acc /= b;
            racc /= rb;
          }
          break;
      }
    }
    REQUIRE(acc.str() == ref_str(racc));
    Rational s = a;
    s.sub_mul(b, b);
    REQUIRE(s.str() == ref_str(ra - rb * rb));
    REQUIRE((a < b) == (ra < rb));
    REQUIRE((a == b) == (ra == rb));
  }
}

TEST_CASE("hash is consistent with equality") {
  CHECK(Rational(2, 4).hash() == Rational(1, 2).hash());
  Rational big = Rational::parse("340282366920938463463374607431768211456");
  Rational same = Rational(std::int64_t(1) << 32) * Rational(std::int64_t(1) << 32) * Rational(std::int64_t(1) << 32) *
                  Rational(std::int64_t(1) << 32);
  CHECK(big == same);
  CHECK(big.hash() == same.hash());
}
