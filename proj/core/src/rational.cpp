#include "qsep/rational.hpp"

#include <boost/functional/hash.hpp>

#include <cctype>
#include <stdexcept>

namespace qsep {

int sign(const Scalar& q) { return q.sign(); }
int sign(const BigInt& v) { return v.sign(); }

Scalar scalar_from_int(long long v) { return Scalar(BigInt(v)); }

Scalar make_scalar(BigInt n, BigInt d) {
  // boost::rational's two-argument constructor rejects negative denominators
  // for unbounded integer types, so normalize the sign before constructing.
  if (d.is_zero()) throw std::invalid_argument("make_scalar: zero denominator");
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  return Scalar(std::move(n), std::move(d));
}

namespace {

bool is_integer_token(std::string_view t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

std::optional<BigInt> parse_big(std::string_view t) {
  if (!is_integer_token(t)) return std::nullopt;
  try {
    return BigInt(std::string(t));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

} // namespace

std::optional<Scalar> parse_scalar(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto n = parse_big(text.substr(0, slash));
    auto d = parse_big(text.substr(slash + 1));
    if (!n || !d || d->is_zero()) return std::nullopt;
    return make_scalar(std::move(*n), std::move(*d));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || !is_integer_token(frac) || frac[0] == '+' || frac[0] == '-')
      return std::nullopt;
    bool neg = !head.empty() && head[0] == '-';
    if (head.empty() || head == "-" || head == "+") head = neg ? "-0" : "0";
    auto whole = parse_big(head);
    auto tail = parse_big(frac);
    if (!whole || !tail) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt n = *whole * scale;
    n += neg ? -*tail : *tail;
    return Scalar(n, scale);
  }
  auto n = parse_big(text);
  if (!n) return std::nullopt;
  return Scalar(*n);
}

std::string format_scalar(const Scalar& q) {
  return num(q).str() + "/" + den(q).str();
}

std::string format_scalar_short(const Scalar& q) {
  if (den(q) == 1) return num(q).str();
  return format_scalar(q);
}

double to_double(const Scalar& q) { return q.convert_to<double>(); }

std::size_t hash_scalar(const Scalar& q) {
  std::size_t seed = boost::multiprecision::hash_value(num(q));
  boost::hash_combine(seed, boost::multiprecision::hash_value(den(q)));
  return seed;
}

bool fits_i64(const Scalar& q) {
  return boost::multiprecision::msb(num(q) == 0 ? BigInt(1) : abs(num(q))) < 62 &&
         boost::multiprecision::msb(den(q)) < 62;
}

BigInt floor_big(const Scalar& q) {
  BigInt n = num(q), d = den(q);
  BigInt quo = n / d;
  if (n.sign() < 0 && quo * d != n) --quo;
  return quo;
}

BigInt ceil_big(const Scalar& q) {
  BigInt n = num(q), d = den(q);
  BigInt quo = n / d;
  if (n.sign() > 0 && quo * d != n) ++quo;
  return quo;
}

} // namespace qsep
