#pragma once

// Forward-mode (value, d/dE) pairs. Arithmetic follows the usual first-order
// rules so any recursion or elimination run on Dual<T> carries an exact
// derivative alongside the value.

#include <utility>

namespace rpade {

template <class T>
struct Dual {
  T value;
  T deriv;

  Dual() : value(0), deriv(0) {}
  explicit Dual(long v) : value(v), deriv(0L) {}
  Dual(T v, T d) : value(std::move(v)), deriv(std::move(d)) {}
  static Dual constant(T v) { return Dual(std::move(v), T(0)); }
  static Dual variable(T v) { return Dual(std::move(v), T(1)); }

  Dual& operator+=(const Dual& o) {
    value += o.value;
    deriv += o.deriv;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    deriv -= o.deriv;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    deriv = deriv * o.value + value * o.deriv;
    value *= o.value;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    value /= o.value;
    deriv = (deriv - value * o.deriv) / o.value;
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend Dual operator-(const Dual& a) { return Dual(-a.value, -a.deriv); }
};

}  // namespace rpade
