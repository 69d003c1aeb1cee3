#pragma once

#include <cstddef>
#include <vector>

#include "tiltstab/error.hpp"
#include "tiltstab/rational.hpp"

namespace tiltstab {

// Dense univariate polynomial over Rat, just enough symbolic machinery for
// exact differentiation of the bound functions (they are low-degree).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rat& a) { return Poly({a}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rat(i) * c_[i];
    return Poly(std::move(out));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator-(const Poly& a) {
    std::vector<Rat> out = a.c_;
    for (auto& c : out) c = -c;
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }

  friend Poly operator*(const Rat& s, const Poly& a) { return Poly::constant(s) * a; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;  // c_[i] is the coefficient of x^i
};

// Quotient of polynomials. No gcd normalization; callers only evaluate and
// differentiate, so a common factor in num/den is harmless.
struct RatFunc {
  Poly num;
  Poly den = Poly::constant(Rat(1));

  // (num' den - num den') / den^2
  RatFunc derivative() const {
    return RatFunc{num.derivative() * den - num * den.derivative(), den * den};
  }

  Rat eval(const Rat& x) const {
    Rat q = den.eval(x);
    if (q == 0) fail(Errc::invalid_argument, "rational function evaluated at a pole");
    return num.eval(x) / q;
  }
};

}  // namespace tiltstab
