#include <doctest.h>

#include "qsep/rational.hpp"

using namespace qsep;

TEST_SUITE_BEGIN("rational");

TEST_CASE("parse integer, fraction, and decimal forms") {
  CHECK(*parse_scalar("42") == Scalar(42));
  CHECK(*parse_scalar("-7") == Scalar(-7));
  CHECK(*parse_scalar("6/4") == Scalar(3, 2));
  CHECK(*parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(*parse_scalar("6/-4") == Scalar(-3, 2));
  CHECK(*parse_scalar("-1.25") == Scalar(-5, 4));
  CHECK(*parse_scalar("0.5") == Scalar(1, 2));
  CHECK(*parse_scalar(".5") == Scalar(1, 2));
  CHECK(*parse_scalar("-.5") == Scalar(-1, 2));
}

TEST_CASE("parse rejects malformed text") {
  CHECK(!parse_scalar(""));
  CHECK(!parse_scalar("1/0"));
  CHECK(!parse_scalar("abc"));
  CHECK(!parse_scalar("1.2.3"));
  CHECK(!parse_scalar("1/"));
  CHECK(!parse_scalar("/2"));
  CHECK(!parse_scalar("1.-2"));
  CHECK(!parse_scalar("--3"));
}

TEST_CASE("canonical form: positive denominator, reduced") {
  Scalar q = make_scalar(-6, -4);
  CHECK(num(q) == 3);
  CHECK(den(q) == 2);
  CHECK(format_scalar(q) == "3/2");
  CHECK(format_scalar_short(Scalar(8, 4)) == "2");
  CHECK_THROWS_AS((void)make_scalar(1, 0), std::invalid_argument);
}

TEST_CASE("serialization round-trips exactly") {
  const char* samples[] = {"0/1", "-355/113", "123456789123456789/2", "1/3"};
  for (const char* s : samples) {
    Scalar q = *parse_scalar(s);
    CHECK(format_scalar(q) == s);
    CHECK(*parse_scalar(format_scalar(q)) == q);
  }
}

TEST_CASE("floor and ceil") {
  CHECK(floor_big(Scalar(7, 2)) == 3);
  CHECK(ceil_big(Scalar(7, 2)) == 4);
  CHECK(floor_big(Scalar(-7, 2)) == -4);
  CHECK(ceil_big(Scalar(-7, 2)) == -3);
  CHECK(floor_big(Scalar(6)) == 6);
  CHECK(ceil_big(Scalar(6)) == 6);
}

TEST_CASE("sign and hashing") {
  CHECK(sign(Scalar(-3, 7)) == -1);
  CHECK(sign(Scalar(0)) == 0);
  CHECK(sign(Scalar(5)) == 1);
  CHECK(hash_scalar(Scalar(3, 2)) == hash_scalar(*parse_scalar("6/4")));
}

TEST_CASE("i64 fast-path eligibility") {
  CHECK(fits_i64(Scalar(1'000'000'000'000ll)));
  Scalar big = Scalar(BigInt(1) << 80);
  CHECK(!fits_i64(big));
}

TEST_SUITE_END();
