#include "weylgerbe/cech.hpp"

namespace weylgerbe {

void check_lift(const XtLift& lift, const TorusPoint& t) { check_covers(lift, t); }

void check_lift(const ZPoint& lift, const TorusPoint& t) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    if (angular_separation(lift.value(), t.p(i)) <= kCutTol)
      throw GerbeError(ErrorKind::FiberMismatch, "cut point meets the spectrum of the base");
}

void check_lift(const XYLift& lift, const TorusPoint& t) {
  check_lift(lift.x, t);
  check_lift(lift.z, t);
}

}  // namespace weylgerbe
