#pragma once

// Finite model of the fibre products Y^[p] of a cover over the torus and the
// alternating coboundary on functions out of them. Forms enter only after
// evaluation on fixed tangents, so a cochain here is always number-valued.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "weylgerbe/base_spaces.hpp"

namespace weylgerbe {

/// Point of the cover X_T x_T Y_T.
struct XYLift {
  XtLift x;
  ZPoint z;
};

/// Throws FiberMismatch unless the lift sits over t.
void check_lift(const XtLift& lift, const TorusPoint& t);
void check_lift(const ZPoint& lift, const TorusPoint& t);
void check_lift(const XYLift& lift, const TorusPoint& t);

/// An element (y_1, ..., y_p) of the p-fold fibre product over `base`.
template <typename Lift>
struct FiberTuple {
  TorusPoint base;
  std::vector<Lift> lifts;

  std::size_t arity() const noexcept { return lifts.size(); }

  void validate() const {
    for (const Lift& l : lifts) check_lift(l, base);
  }
};

/// A function Y^[p] -> A, A one of int64, double or Complex.
template <typename Lift, typename Value>
struct Cochain {
  std::size_t arity;
  std::function<Value(const FiberTuple<Lift>&)> eval;
};

/// Omits entry i (zero-based): face(tuple, 0) is pi_1, face(tuple, 1) is pi_2.
template <typename Lift>
FiberTuple<Lift> face(const FiberTuple<Lift>& tuple, std::size_t i) {
  if (tuple.arity() < 2 || i >= tuple.arity())
    throw GerbeError(ErrorKind::IndexError,
                     "face " + std::to_string(i) + " of a " + std::to_string(tuple.arity()) + "-tuple");
  FiberTuple<Lift> out{tuple.base, {}};
  out.lifts.reserve(tuple.arity() - 1);
  for (std::size_t k = 0; k < tuple.arity(); ++k)
    if (k != i) out.lifts.push_back(tuple.lifts[k]);
  return out;
}

/// delta(c)(y_1..y_{p+1}) = sum_i (-1)^i c(face_i), faces indexed from zero.
template <typename Lift, typename Value>
Value delta(const Cochain<Lift, Value>& c, const FiberTuple<Lift>& tuple) {
  if (tuple.arity() != c.arity + 1)
    throw GerbeError(ErrorKind::ArityMismatch, "coboundary of a " + std::to_string(c.arity) +
                                                   "-cochain needs a " + std::to_string(c.arity + 1) +
                                                   "-tuple, got " + std::to_string(tuple.arity()));
  Value sum{};
  for (std::size_t i = 0; i < tuple.arity(); ++i) {
    const Value term = c.eval(face(tuple, i));
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

/// delta(c) as a cochain of arity p + 1.
template <typename Lift, typename Value>
Cochain<Lift, Value> coboundary(Cochain<Lift, Value> c) {
  const std::size_t arity = c.arity + 1;
  return {arity, [c = std::move(c)](const FiberTuple<Lift>& t) { return delta(c, t); }};
}

/// delta(delta(c)) at a (p + 2)-tuple; zero for every cochain.
template <typename Lift, typename Value>
Value delta_squared_check(const Cochain<Lift, Value>& c, const FiberTuple<Lift>& tuple) {
  if (tuple.arity() != c.arity + 2)
    throw GerbeError(ErrorKind::ArityMismatch, "delta^2 needs a tuple two longer than the cochain");
  return delta(coboundary(c), tuple);
}

}  // namespace weylgerbe
