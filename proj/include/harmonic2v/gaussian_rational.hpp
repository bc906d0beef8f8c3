#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace harmonic2v {

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// GMP keeps both parts canonical (lowest terms, positive denominator), so
/// structural equality is numeric equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re) : re_(std::move(re)) {  // NOLINT(google-explicit-constructor)
    re_.canonicalize();
  }
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator*=(const mpq_class& q) {
    re_ *= q;
    im_ *= q;
    return *this;
  }
  GaussianRational& operator*=(long n) {
    re_ *= n;
    im_ *= n;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator*(GaussianRational a, const mpq_class& q) { return a *= q; }
  friend GaussianRational operator*(const mpq_class& q, GaussianRational a) { return a *= q; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: "a" when real, otherwise "a+bi" / "a-bi" with both parts
  /// as reduced rationals ("p/q" or "p").
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// "p/q" or "p" for a canonical rational.
std::string rational_to_string(const mpq_class& q);

}  // namespace harmonic2v
