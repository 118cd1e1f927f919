#pragma once

// Exact rational scalars and vectors on top of GMP. All geometry in this
// library is exact; nothing here ever touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosmoform {

using Rational = mpq_class;
using Integer = mpz_class;
using QVec = std::vector<Rational>;

// A precondition or invariant was violated. Maps to CLI exit code 1.
struct contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration exceeded its configured budget. CLI exit code 2.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input could not be read or parsed. CLI exit code 3.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultBudget = 10'000'000;

inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

// Accepts "p" or "p/q" with optional sign, arbitrary precision.
inline Rational parse_rational(const std::string& s) {
  const auto bad = [&]() -> Rational {
    throw contract_error("invalid rational literal: \"" + s + "\"");
  };
  if (s.empty()) return bad();
  const auto slash = s.find('/');
  const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  const auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) return bad();
  // mpz_set_str takes a leading '-' but not a '+'
  const auto strip = [](const std::string& t) {
    return t[0] == '+' ? t.substr(1) : t;
  };
  Integer n(strip(num)), d(strip(den));
  if (d == 0) throw contract_error("zero denominator in rational literal: \"" + s + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size())
    throw contract_error("dot product of vectors of different lengths");
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline Rational coord_sum(const QVec& v) {
  Rational acc(0);
  for (const auto& c : v) acc += c;
  return acc;
}

inline QVec vadd(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw contract_error("vector length mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec vsub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw contract_error("vector length mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec vscale(const Rational& c, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool veq(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline std::string vec_to_string(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace cosmoform
