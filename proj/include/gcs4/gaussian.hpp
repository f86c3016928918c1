#ifndef GCS4_GAUSSIAN_HPP
#define GCS4_GAUSSIAN_HPP

#include "gcs4/rational.hpp"

#include <iosfwd>
#include <string>

namespace gcs4 {

/// Exact element of Q(i): re + im*i with rational components.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(int n) : re_(n) {}
  GaussianRational(long n) : re_(n) {}
  GaussianRational(const Rational& re) : re_(re) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  /// |z|^2 = re^2 + im^2, an exact rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  GaussianRational inverse() const {
    Rational n = norm2();
    if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    return GaussianRational(re_ / n, -im_ / n);
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// "a+bi" rendering for diagnostics; JSON uses the {"re","im"} object form.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

private:
  Rational re_, im_;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

}  // namespace gcs4

#endif
