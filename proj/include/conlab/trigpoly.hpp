// trigpoly.hpp -- 1-periodic trigonometric polynomials with exact derivatives.
#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conlab {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr int kMaxTrigDegree = 32;

/// f(q) = c0 + sum_k ck cos(2 pi k q) + sk sin(2 pi k q), 1-periodic.
/// Degree capped so coefficient sums bound every derivative.
class TrigPoly {
 public:
  TrigPoly() : cos_(Eigen::ArrayXd::Zero(1)), sin_(Eigen::ArrayXd::Zero(1)) {}

  /// cos_coeffs = (c0..cK), sin_coeffs = (s1..sK); sin part may be shorter.
  TrigPoly(Eigen::ArrayXd cos_coeffs, Eigen::ArrayXd sin_coeffs)
      : cos_(std::move(cos_coeffs)) {
    if (cos_.size() < 1) cos_ = Eigen::ArrayXd::Zero(1);
    if (cos_.size() > kMaxTrigDegree + 1)
      throw std::invalid_argument("TrigPoly: degree above cap");
    if (sin_coeffs.size() > kMaxTrigDegree)
      throw std::invalid_argument("TrigPoly: degree above cap");
    sin_ = Eigen::ArrayXd::Zero(cos_.size());
    for (int k = 1; k <= sin_coeffs.size() && k < (int)cos_.size(); ++k)
      sin_[k] = sin_coeffs[k - 1];
    if (sin_coeffs.size() >= cos_.size()) {
      Eigen::ArrayXd wide = Eigen::ArrayXd::Zero(sin_coeffs.size() + 1);
      wide.head(cos_.size()) = cos_;
      cos_ = wide;
      sin_ = Eigen::ArrayXd::Zero(cos_.size());
      sin_.tail(sin_coeffs.size()) = sin_coeffs;
    }
  }

  static TrigPoly constant(double c) {
    Eigen::ArrayXd c0(1);
    c0 << c;
    return TrigPoly(c0, Eigen::ArrayXd());
  }

  /// c * cos(2 pi k q)
  static TrigPoly cosine(int k, double c = 1.0) {
    if (k < 0 || k > kMaxTrigDegree) throw std::invalid_argument("cosine: bad k");
    Eigen::ArrayXd cc = Eigen::ArrayXd::Zero(k + 1);
    cc[k] = c;
    return TrigPoly(cc, Eigen::ArrayXd());
  }

  /// s * sin(2 pi k q)
  static TrigPoly sine(int k, double s = 1.0) {
    if (k < 1 || k > kMaxTrigDegree) throw std::invalid_argument("sine: bad k");
    Eigen::ArrayXd cc = Eigen::ArrayXd::Zero(k + 1);
    Eigen::ArrayXd ss = Eigen::ArrayXd::Zero(k);
    ss[k - 1] = s;
    return TrigPoly(cc, ss);
  }

  /// cos(2 pi (q - shift)); used to place critical points exactly.
  static TrigPoly shifted_cosine(double shift) {
    Eigen::ArrayXd cc(2), ss(1);
    cc << 0.0, std::cos(kTwoPi * shift);
    ss << std::sin(kTwoPi * shift);
    return TrigPoly(cc, ss);
  }

  int degree() const { return (int)cos_.size() - 1; }
  const Eigen::ArrayXd& cos_coeffs() const { return cos_; }
  const Eigen::ArrayXd& sin_coeffs() const { return sin_; }

  struct Eval {
    double value;
    double derivative;
  };

  /// Value and derivative in one pass; one sin/cos call plus the angle
  /// recurrence cos/sin(k theta) -> cos/sin((k+1) theta).
  Eval eval(double q) const {
    const int K = degree();
    double v = cos_[0];
    double d = 0.0;
    if (K >= 1) {
      const double theta = kTwoPi * q;
      const double c1 = std::cos(theta), s1 = std::sin(theta);
      double ck = c1, sk = s1;
      for (int k = 1;; ++k) {
        v += cos_[k] * ck + sin_[k] * sk;
        d += kTwoPi * k * (sin_[k] * ck - cos_[k] * sk);
        if (k == K) break;
        const double cn = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = cn;
      }
    }
    return {v, d};
  }

  double value(double q) const { return eval(q).value; }
  double derivative(double q) const { return eval(q).derivative; }

  /// Coefficient-sum bound on sup |f^(m)|; exact closed form, no sampling.
  double derivative_bound(int order = 1) const {
    double bound = order == 0 ? std::fabs(cos_[0]) : 0.0;
    for (int k = 1; k <= degree(); ++k)
      bound += std::pow(kTwoPi * k, order) *
               (std::fabs(cos_[k]) + std::fabs(sin_[k]));
    return bound;
  }

  TrigPoly operator+(const TrigPoly& other) const {
    int K = std::max(degree(), other.degree());
    Eigen::ArrayXd cc = Eigen::ArrayXd::Zero(K + 1);
    Eigen::ArrayXd ss = Eigen::ArrayXd::Zero(K + 1);
    cc.head(cos_.size()) += cos_;
    ss.head(sin_.size()) += sin_;
    cc.head(other.cos_.size()) += other.cos_;
    ss.head(other.sin_.size()) += other.sin_;
    return from_padded(cc, ss);
  }

  TrigPoly operator-(const TrigPoly& other) const {
    return *this + (other * -1.0);
  }

  TrigPoly operator*(double s) const { return from_padded(cos_ * s, sin_ * s); }

 private:
  static TrigPoly from_padded(Eigen::ArrayXd cc, Eigen::ArrayXd ss) {
    TrigPoly r;
    r.cos_ = std::move(cc);
    r.sin_ = std::move(ss);
    return r;
  }
  Eigen::ArrayXd cos_, sin_;  // sin_[0] always 0, kept aligned with cos_
};

}  // namespace conlab
