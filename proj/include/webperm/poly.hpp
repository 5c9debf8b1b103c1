#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "webperm/bigint.hpp"
#include "webperm/errors.hpp"

namespace webperm {

// Exponents of t, alpha and x, compared in that order.
struct Monomial {
  int t = 0;
  int alpha = 0;
  int x = 0;

  Monomial operator*(const Monomial& o) const { return {t + o.t, alpha + o.alpha, x + o.x}; }
  auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial in t, alpha, x. Zero coefficients are never stored, so
// structural equality is polynomial equality.
template <typename Coeff>
class Poly {
 public:
  using Terms = std::map<Monomial, Coeff>;

  Poly() = default;
  Poly(Coeff c) { add(Monomial{}, std::move(c)); }  // NOLINT: constants convert implicitly.
  Poly(int c) : Poly(Coeff(c)) {}                   // NOLINT

  static Poly monomial(Coeff c, Monomial m) {
    Poly p;
    p.add(m, std::move(c));
    return p;
  }
  static Poly t(int e = 1) { return monomial(Coeff(1), {e, 0, 0}); }
  static Poly alpha(int e = 1) { return monomial(Coeff(1), {0, e, 0}); }
  static Poly x(int e = 1) { return monomial(Coeff(1), {0, 0, e}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add(const Monomial& m, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree_x() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
  }

  // The coefficient of x^k, as a polynomial in t and alpha.
  Poly coeff_x(int k) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
      if (m.x == k) out.add({m.t, m.alpha, 0}, c);
    }
    return out;
  }

  // t = alpha = 1, keeping x.
  Poly at_t_alpha_one() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.add({0, 0, m.x}, c);
    return out;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add(m, Coeff(-c));
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, Coeff(ca * cb));
    }
    return out;
  }

  Poly pow(int k) const {
    require(k >= 0, "Poly::pow: negative exponent");
    Poly out(1);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

  // Terms in ascending monomial order, each as "c*t^a*alpha^b*x^c" with
  // zero exponents omitted and exponent 1 written bare.
  std::vector<std::string> term_strings() const {
    std::vector<std::string> out;
    for (const auto& [m, c] : terms_) {
      std::string s = c.str();
      append_factor(s, "t", m.t);
      append_factor(s, "alpha", m.alpha);
      append_factor(s, "x", m.x);
      out.push_back(std::move(s));
    }
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& term : term_strings()) {
      if (!s.empty()) s += " + ";
      s += term;
    }
    return s;
  }

  bool operator==(const Poly&) const = default;

 private:
  static void append_factor(std::string& s, const char* name, int e) {
    if (e == 0) return;
    s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }

  Terms terms_;
};

using MultiPoly = Poly<BigInt>;
using RationalPoly = Poly<BigRational>;

inline RationalPoly to_rational(const MultiPoly& p) {
  RationalPoly out;
  for (const auto& [m, c] : p.terms()) out.add(m, BigRational(c));
  return out;
}

// Nothing when some coefficient is not an integer.
inline std::optional<MultiPoly> to_integer(const RationalPoly& p) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
    out.add(m, boost::multiprecision::numerator(c));
  }
  return out;
}

}  // namespace webperm
