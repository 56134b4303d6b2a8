#pragma once

#include <cmath>

namespace besselsix {

enum class Variant { I0, I1 };

inline const char* variant_name(Variant v) { return v == Variant::I0 ? "I0" : "I1"; }

/// Midpoint and radius; the true value lies in [mid - rad, mid + rad].
template <class Real = double>
struct CertifiedValue {
  Real mid{};
  Real rad{};

  Real lower() const { return mid - rad; }
  Real upper() const { return mid + rad; }
  bool contains(const Real& x) const {
    using std::abs;
    return abs(x - mid) <= rad;
  }
  template <class Other>
  bool contains(const CertifiedValue<Other>& inner) const {
    return Real(inner.mid - inner.rad) >= lower() && Real(inner.mid + inner.rad) <= upper();
  }
};

}  // namespace besselsix
