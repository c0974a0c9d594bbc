#pragma once

// Truncated Taylor series scalar.
//
// A Jet of order n holds the coefficients c_0..c_n of f(s0 + e) = sum c_k e^k.
// Arithmetic and the elementary functions below propagate those coefficients
// exactly, so a curve evaluated at Jet::variable(s0, n) yields all of its
// derivatives up to order n at s0 (f^(k)(s0) = k! c_k).
//
// Constants carry order kMaxJetOrder; a binary operation truncates to the
// smaller order of its operands.

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <ostream>

namespace mink {

inline constexpr int kMaxJetOrder = 15;

class Jet {
 public:
  Jet() = default;
  Jet(double value) { c_[0] = value; }  // NOLINT: implicit by design of Eigen scalars

  static Jet variable(double s0, int order) {
    assert(order >= 1 && order <= kMaxJetOrder);
    Jet j(s0);
    j.order_ = order;
    j.c_[1] = 1.0;
    return j;
  }

  static Jet zero(int order) {
    Jet j;
    j.order_ = order;
    return j;
  }

  int order() const { return order_; }
  double value() const { return c_[0]; }
  double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  /// k-th derivative at the expansion point.
  double derivative(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return k <= order_ ? f * c_[static_cast<std::size_t>(k)] : 0.0;
  }

  /// d/ds of the series; the order drops by one.
  Jet differentiated() const {
    assert(order_ >= 1);
    Jet d = zero(order_ - 1);
    for (int k = 0; k < order_; ++k) d[k] = (k + 1) * c_[static_cast<std::size_t>(k + 1)];
    return d;
  }

  /// Antiderivative with the given constant term; the order grows by one.
  Jet integrated(double constant) const {
    Jet r = zero(std::min(order_ + 1, kMaxJetOrder));
    r[0] = constant;
    for (int k = 1; k <= r.order_; ++k) r[k] = c_[static_cast<std::size_t>(k - 1)] / k;
    return r;
  }

  Jet truncated(int order) const {
    Jet r = *this;
    r.order_ = std::min(order_, order);
    for (int k = r.order_ + 1; k <= kMaxJetOrder; ++k) r[k] = 0.0;
    return r;
  }

  Jet operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Jet& operator+=(const Jet& o) {
    order_ = std::min(order_, o.order_);
    for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
    clear_tail();
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    order_ = std::min(order_, o.order_);
    for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
    clear_tail();
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r = zero(std::min(a.order_, b.order_));
    for (int k = 0; k <= r.order_; ++k) {
      double acc = 0.0;
      for (int j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
      r.c_[k] = acc;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet q = zero(std::min(a.order_, b.order_));
    for (int k = 0; k <= q.order_; ++k) {
      double acc = a.c_[k];
      for (int j = 1; j <= k; ++j) acc -= b.c_[j] * q.c_[k - j];
      q.c_[k] = acc / b.c_[0];
    }
    return q;
  }

  // Comparisons look at the value only; Eigen uses them for a few reductions.
  friend bool operator<(const Jet& a, const Jet& b) { return a.value() < b.value(); }
  friend bool operator>(const Jet& a, const Jet& b) { return a.value() > b.value(); }
  friend bool operator<=(const Jet& a, const Jet& b) { return a.value() <= b.value(); }
  friend bool operator>=(const Jet& a, const Jet& b) { return a.value() >= b.value(); }
  friend bool operator==(const Jet& a, const Jet& b) {
    if (a.order_ != b.order_) return false;
    for (int k = 0; k <= a.order_; ++k)
      if (a.c_[k] != b.c_[k]) return false;
    return true;
  }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
    os << "Jet[";
    for (int k = 0; k <= j.order_; ++k) os << (k ? ", " : "") << j.c_[k];
    return os << "]";
  }

 private:
  void clear_tail() {
    for (int k = order_ + 1; k <= kMaxJetOrder; ++k) c_[k] = 0.0;
  }

  std::array<double, kMaxJetOrder + 1> c_{};
  int order_ = kMaxJetOrder;
};

// Elementary functions. Recurrences follow from f' = g(u) u'.

inline Jet sqrt(const Jet& a) {
  Jet r = Jet::zero(a.order());
  r[0] = std::sqrt(a[0]);
  for (int k = 1; k <= r.order(); ++k) {
    double acc = a[k];
    for (int j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc / (2.0 * r[0]);
  }
  return r;
}

inline Jet exp(const Jet& u) {
  Jet e = Jet::zero(u.order());
  e[0] = std::exp(u[0]);
  for (int k = 1; k <= e.order(); ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * u[j] * e[k - j];
    e[k] = acc / k;
  }
  return e;
}

namespace detail {
// Coupled recurrence for (sin, cos) when sign = -1 and (sinh, cosh) when sign = +1.
inline void trig_pair(const Jet& u, double s0, double c0, double sign, Jet& s, Jet& c) {
  s = Jet::zero(u.order());
  c = Jet::zero(u.order());
  s[0] = s0;
  c[0] = c0;
  for (int k = 1; k <= u.order(); ++k) {
    double as = 0.0, ac = 0.0;
    for (int j = 1; j <= k; ++j) {
      as += j * u[j] * c[k - j];
      ac += j * u[j] * s[k - j];
    }
    s[k] = as / k;
    c[k] = sign * ac / k;
  }
}
}  // namespace detail

inline Jet sin(const Jet& u) {
  Jet s, c;
  detail::trig_pair(u, std::sin(u[0]), std::cos(u[0]), -1.0, s, c);
  return s;
}
inline Jet cos(const Jet& u) {
  Jet s, c;
  detail::trig_pair(u, std::sin(u[0]), std::cos(u[0]), -1.0, s, c);
  return c;
}
inline Jet sinh(const Jet& u) {
  Jet s, c;
  detail::trig_pair(u, std::sinh(u[0]), std::cosh(u[0]), 1.0, s, c);
  return s;
}
inline Jet cosh(const Jet& u) {
  Jet s, c;
  detail::trig_pair(u, std::sinh(u[0]), std::cosh(u[0]), 1.0, s, c);
  return c;
}

inline Jet atanh(const Jet& u) {
  if (u.order() == 0) return Jet(std::atanh(u[0])).truncated(0);
  Jet one_minus = Jet(1.0) - u * u;
  return (u.differentiated() / one_minus.truncated(u.order() - 1)).integrated(std::atanh(u[0]));
}

inline Jet asinh(const Jet& u) {
  if (u.order() == 0) return Jet(std::asinh(u[0])).truncated(0);
  Jet root = sqrt(Jet(1.0) + u * u);
  return (u.differentiated() / root.truncated(u.order() - 1)).integrated(std::asinh(u[0]));
}

/// |u| for a series whose value is nonzero.
inline Jet abs(const Jet& u) { return u.value() < 0.0 ? -u : u; }

inline bool isfinite(const Jet& u) {
  for (int k = 0; k <= u.order(); ++k)
    if (!std::isfinite(u[k])) return false;
  return true;
}

}  // namespace mink

namespace Eigen {

template <>
struct NumTraits<mink::Jet> : GenericNumTraits<mink::Jet> {
  using Real = mink::Jet;
  using NonInteger = mink::Jet;
  using Nested = mink::Jet;
  using Literal = mink::Jet;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 16,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(std::numeric_limits<double>::epsilon()); }
  static inline Real dummy_precision() { return Real(1e-12); }
  static inline Real highest() { return Real(std::numeric_limits<double>::max()); }
  static inline Real lowest() { return Real(std::numeric_limits<double>::lowest()); }
  static inline int digits10() { return std::numeric_limits<double>::digits10; }
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<mink::Jet, double, BinaryOp> {
  using ReturnType = mink::Jet;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<double, mink::Jet, BinaryOp> {
  using ReturnType = mink::Jet;
};

}  // namespace Eigen
