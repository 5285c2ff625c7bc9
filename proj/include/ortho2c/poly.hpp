#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ortho2c {

using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exponent pair: z^a zbar^b for complex polynomials, x^a y^b for real ones.
struct Expo {
  int a = 0;
  int b = 0;
  friend bool operator==(const Expo& l, const Expo& r) { return l.a == r.a && l.b == r.b; }
};

/// Graded order: total degree first, then second exponent ascending.
/// Within degree n this enumerates k = 0..n as z^{n-k} zbar^k.
struct GradedLess {
  bool operator()(const Expo& l, const Expo& r) const {
    if (l.a + l.b != r.a + r.b) return l.a + l.b < r.a + r.b;
    return l.b < r.b;
  }
};

namespace detail {
inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const Complex& x) { return std::abs(x); }
inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex& x) { return std::conj(x); }

/// Binomial coefficients in double; exact for n <= 56.
inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}
}  // namespace detail

/// Sparse bivariate polynomial with coefficients of type T, stored in graded
/// term order.  Coefficients below kDropTol (relative to the largest) are
/// pruned so the zero polynomial is always the empty term map.
template <class T>
class Poly {
 public:
  static constexpr double kDropTol = 1e-14;
  using TermMap = std::map<Expo, T, GradedLess>;

  Poly() = default;
  explicit Poly(TermMap terms) : terms_(std::move(terms)) { prune(); }

  static Poly monomial(int a, int b, T c = T(1)) {
    if (a < 0 || b < 0) throw Error("poly: negative exponent");
    Poly p;
    if (detail::abs_of(c) != 0.0) p.terms_[{a, b}] = c;
    return p;
  }
  static Poly constant(T c) { return monomial(0, 0, c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.a + terms_.rbegin()->first.b; }

  T coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? T(0) : it->second;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, detail::abs_of(c));
    return m;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) terms_[e] += c;
    prune();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) terms_[e] -= c;
    prune();
    return *this;
  }
  Poly& operator*=(T s) {
    for (auto& [e, c] : terms_) c *= s;
    prune();
    return *this;
  }

  friend Poly operator+(Poly l, const Poly& r) { return l += r; }
  friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
  friend Poly operator*(Poly l, T s) { return l *= s; }
  friend Poly operator*(T s, Poly l) { return l *= s; }

  friend Poly operator*(const Poly& l, const Poly& r) {
    Poly p;
    for (const auto& [el, cl] : l.terms_)
      for (const auto& [er, cr] : r.terms_) p.terms_[{el.a + er.a, el.b + er.b}] += cl * cr;
    p.prune();
    return p;
  }

  /// Multiply by the monomial with exponents (da, db).
  Poly shifted(int da, int db) const {
    Poly p;
    for (const auto& [e, c] : terms_) {
      if (e.a + da < 0 || e.b + db < 0) throw Error("poly: shift below zero exponent");
      p.terms_[{e.a + da, e.b + db}] = c;
    }
    return p;
  }

  friend bool operator==(const Poly& l, const Poly& r) { return l.terms_ == r.terms_; }

 private:
  void prune() {
    double m = max_abs_coeff();
    double cut = m * kDropTol;
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (detail::abs_of(it->second) <= cut)
        it = terms_.erase(it);
      else
        ++it;
    }
  }
  TermMap terms_;
};

using CPoly = Poly<Complex>;
using RPoly = Poly<double>;

/// Value of p at the point z (second variable is the actual conjugate).
inline Complex eval(const CPoly& p, Complex z) {
  const int d = p.degree();
  std::vector<Complex> zp(d + 1), wp(d + 1);
  zp[0] = wp[0] = 1.0;
  const Complex w = std::conj(z);
  for (int i = 1; i <= d; ++i) {
    zp[i] = zp[i - 1] * z;
    wp[i] = wp[i - 1] * w;
  }
  Complex s = 0.0;
  for (const auto& [e, c] : p.terms()) s += c * zp[e.a] * wp[e.b];
  return s;
}

inline double eval(const RPoly& p, double x, double y) {
  const int d = p.degree();
  std::vector<double> xp(d + 1), yp(d + 1);
  xp[0] = yp[0] = 1.0;
  for (int i = 1; i <= d; ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  double s = 0.0;
  for (const auto& [e, c] : p.terms()) s += c * xp[e.a] * yp[e.b];
  return s;
}

/// Complex conjugate as a polynomial identity: conj(p(z)) = (conj_poly(p))(z)
/// for every z; swaps the exponent pair and conjugates coefficients.
inline CPoly conj_poly(const CPoly& p) {
  CPoly::TermMap t;
  for (const auto& [e, c] : p.terms()) t[{e.b, e.a}] = std::conj(c);
  return CPoly(std::move(t));
}

/// p with z replaced by x+iy, zbar by x-iy, split into real and imaginary
/// parts (both real polynomials in (x, y)).
inline std::pair<RPoly, RPoly> complex_to_xy(const CPoly& p) {
  std::map<Expo, Complex, GradedLess> acc;
  for (const auto& [e, c] : p.terms()) {
    // (x+iy)^a (x-iy)^b expanded with two binomial sums
    for (int s = 0; s <= e.a; ++s) {
      for (int t = 0; t <= e.b; ++t) {
        const int ypow = (e.a - s) + (e.b - t);
        Complex iw = std::pow(Complex(0, 1), e.a - s) * std::pow(Complex(0, -1), e.b - t);
        acc[{s + t, ypow}] += c * detail::binom(e.a, s) * detail::binom(e.b, t) * iw;
      }
    }
  }
  double m = 0.0;
  for (const auto& [e, c] : acc) m = std::max(m, std::abs(c));
  RPoly::TermMap re, im;
  for (const auto& [e, c] : acc) {
    if (std::abs(c.real()) > m * CPoly::kDropTol) re[e] = c.real();
    if (std::abs(c.imag()) > m * CPoly::kDropTol) im[e] = c.imag();
  }
  return {RPoly(std::move(re)), RPoly(std::move(im))};
}

/// Real polynomial in (x, y) rewritten in the variables (z, zbar) via
/// x = (z+zbar)/2, y = (z-zbar)/(2i).
inline CPoly to_complex_vars(const RPoly& p) {
  CPoly::TermMap acc;
  for (const auto& [e, c] : p.terms()) {
    // x^a y^b = 2^{-a} (z+w)^a (2i)^{-b} (z-w)^b,  w = zbar
    const double xs = std::pow(0.5, e.a);
    const Complex ys = std::pow(Complex(0, -0.5), e.b);  // 1/(2i) = -i/2
    for (int s = 0; s <= e.a; ++s) {
      for (int t = 0; t <= e.b; ++t) {
        const double sign = ((e.b - t) % 2 == 0) ? 1.0 : -1.0;
        acc[{s + t, (e.a - s) + (e.b - t)}] +=
            c * xs * ys * sign * detail::binom(e.a, s) * detail::binom(e.b, t);
      }
    }
  }
  return CPoly(std::move(acc));
}

/// d/dx of p(z, zbar) as a function on the plane: d/dx = d_z + d_zbar.
inline CPoly dx(const CPoly& p) {
  CPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e.a > 0) r += CPoly::monomial(e.a - 1, e.b, c * double(e.a));
    if (e.b > 0) r += CPoly::monomial(e.a, e.b - 1, c * double(e.b));
  }
  return r;
}

/// d/dy of p(z, zbar): d/dy = i (d_z - d_zbar).
inline CPoly dy(const CPoly& p) {
  CPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e.a > 0) r += CPoly::monomial(e.a - 1, e.b, c * double(e.a) * Complex(0, 1));
    if (e.b > 0) r += CPoly::monomial(e.a, e.b - 1, c * double(e.b) * Complex(0, -1));
  }
  return r;
}

}  // namespace ortho2c
