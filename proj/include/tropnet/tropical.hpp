#pragma once

#include <string>

#include "tropnet/rational.hpp"

namespace tropnet {

/// An element of the tropical semifield T = R ∪ {−∞}, with the exact
/// rational reals. Addition is total and absorbing: finite + finite is the
/// rational sum, anything + NEG_INF is NEG_INF. The order is total with
/// NEG_INF below every finite value (and NEG_INF == NEG_INF).
class TropicalWeight {
 public:
  TropicalWeight() : finite_(true), value_(0) {}
  TropicalWeight(Rat v) : finite_(true), value_(std::move(v)) {}
  TropicalWeight(int v) : finite_(true), value_(v) {}

  static TropicalWeight neg_inf() {
    TropicalWeight w;
    w.finite_ = false;
    w.value_ = 0;
    return w;
  }

  bool is_finite() const { return finite_; }

  const Rat& finite_value() const {
    if (!finite_) fail(Errc::NonFiniteEntry, "value is -inf");
    return value_;
  }

  friend TropicalWeight operator+(const TropicalWeight& a,
                                  const TropicalWeight& b) {
    if (!a.finite_ || !b.finite_) return neg_inf();
    return TropicalWeight(a.value_ + b.value_);
  }

  TropicalWeight& operator+=(const TropicalWeight& o) {
    *this = *this + o;
    return *this;
  }

  friend TropicalWeight operator-(const TropicalWeight& a) {
    if (!a.finite_) fail(Errc::NonFiniteEntry, "cannot negate -inf");
    return TropicalWeight(-a.value_);
  }

  friend bool operator==(const TropicalWeight& a, const TropicalWeight& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const TropicalWeight& a, const TropicalWeight& b) {
    return !(a == b);
  }
  friend bool operator<(const TropicalWeight& a, const TropicalWeight& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator>(const TropicalWeight& a, const TropicalWeight& b) {
    return b < a;
  }
  friend bool operator<=(const TropicalWeight& a, const TropicalWeight& b) {
    return !(b < a);
  }
  friend bool operator>=(const TropicalWeight& a, const TropicalWeight& b) {
    return !(a < b);
  }

  friend TropicalWeight max(const TropicalWeight& a, const TropicalWeight& b) {
    return a < b ? b : a;
  }

  std::string str() const { return finite_ ? rat_str(value_) : "-inf"; }

 private:
  bool finite_;
  Rat value_;
};

using Trop = TropicalWeight;

}  // namespace tropnet
