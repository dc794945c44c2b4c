#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qsep {

// Exact arithmetic backbone. cpp_rational keeps every value in canonical
// reduced form with a positive denominator, so equality and hashing are
// structural.
using BigInt = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

inline const BigInt& num(const Scalar& q) { return q.backend().data().numerator(); }
inline const BigInt& den(const Scalar& q) { return q.backend().data().denominator(); }

int sign(const Scalar& q);
int sign(const BigInt& v);

Scalar scalar_from_int(long long v);

// Builds n/d with the denominator sign normalized first; throws
// std::invalid_argument when d == 0. Prefer this over the raw two-argument
// Scalar constructor, which rejects negative denominators.
Scalar make_scalar(BigInt n, BigInt d);

// Parses "num", "num/den", or a decimal literal like "-1.25" (turned into
// -5/4). Returns nullopt on malformed text or a zero denominator.
std::optional<Scalar> parse_scalar(std::string_view text);

// Canonical serialization: always "num/den", denominator positive.
std::string format_scalar(const Scalar& q);

// Shortest-form rendering for human-facing output: "num" when den == 1.
std::string format_scalar_short(const Scalar& q);

double to_double(const Scalar& q);

// Hash over the canonical (num, den) pair, usable in unordered containers.
std::size_t hash_scalar(const Scalar& q);

// True when |q| fits comfortably in the __int128 cross-multiplication fast
// path used by the sign predicates (both num and den below 2^62).
bool fits_i64(const Scalar& q);

// Exact floor/ceil to BigInt.
BigInt floor_big(const Scalar& q);
BigInt ceil_big(const Scalar& q);

} // namespace qsep
