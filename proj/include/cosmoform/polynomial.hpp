#pragma once

// Sparse multivariate polynomials over the rationals, with the graded
// lexicographic term order fixed for storage, printing, and equality.
// No factorization, no division beyond what hyperplane reduction needs.

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cosmoform/rational.hpp"

namespace cosmoform {

using Exponents = std::vector<int>;

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Polynomial variable(int nvars, int i) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Rational(1));
    return p;
  }

  // c0 + sum_i coeffs[i] x_i
  static Polynomial linear(const QVec& coeffs, const Rational& c0) {
    Polynomial p(static_cast<int>(coeffs.size()));
    p.add_term(Exponents(coeffs.size(), 0), c0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int total_degree() const {  // zero polynomial: -1
    if (terms_.empty()) return -1;
    const Exponents& lead = terms_.begin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw contract_error("polynomial: exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    check_same(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    check_same(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, Rational(-c));
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_same(o);
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, Rational(ca * cb));
      }
    }
    return r;
  }

  Polynomial scaled(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, Rational(c * coef));
    return r;
  }

  // Faster path for the common case of multiplying by c0 + sum coeffs[i] x_i.
  Polynomial times_linear(const QVec& coeffs, const Rational& c0) const {
    if (static_cast<int>(coeffs.size()) != nvars_)
      throw contract_error("polynomial: linear factor length mismatch");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (c0 != 0) r.add_term(e, Rational(c * c0));
      for (int i = 0; i < nvars_; ++i) {
        if (coeffs[i] == 0) continue;
        Exponents e2 = e;
        ++e2[i];
        r.add_term(e2, Rational(c * coeffs[i]));
      }
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Rational evaluate(const QVec& x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw contract_error("polynomial: evaluation point length mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      acc += t;
    }
    return acc;
  }

  // Substitutes x_k := 1 - sum_{j != k} x_j and expands. Idempotent: the
  // result never mentions x_k again.
  Polynomial reduce_mod_hyperplane(int k) const {
    if (k < 0 || k >= nvars_)
      throw contract_error("reduce_mod_hyperplane: variable index out of range");
    QVec lc(nvars_, Rational(-1));
    lc[k] = Rational(0);
    const Polynomial sub = Polynomial::linear(lc, Rational(1));
    std::vector<Polynomial> pow = {Polynomial::constant(nvars_, Rational(1))};
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      const int ek = e[k];
      while (static_cast<int>(pow.size()) <= ek) pow.push_back(pow.back() * sub);
      Exponents base = e;
      base[k] = 0;
      for (const auto& [pe, pc] : pow[ek].terms()) {
        Exponents m(nvars_);
        for (int i = 0; i < nvars_; ++i) m[i] = base[i] + pe[i];
        r.add_term(m, Rational(c * pc));
      }
    }
    return r;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    if (static_cast<int>(names.size()) != nvars_)
      throw contract_error("polynomial: variable name list length mismatch");
    std::string s;
    for (const auto& [e, c] : terms_) {
      const bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      std::string mono;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        s += cosmoform::to_string(a);
      } else if (a == 1) {
        s += mono;
      } else {
        s += cosmoform::to_string(a) + "*" + mono;
      }
    }
    return s;
  }

 private:
  void check_same(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
      throw contract_error("polynomial: mixed variable counts");
  }

  int nvars_;
  TermMap terms_;
};

}  // namespace cosmoform
