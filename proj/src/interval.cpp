#include "holder/interval.hpp"

#include <cmath>
#include <sstream>

#include "holder/error.hpp"

namespace holder {

namespace {

std::string describe(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

DomainError::DomainError(double x, const std::string& what)
    : Error("domain error at x = " + describe(x) + ": " + what), x_(x) {}

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("interval endpoints must be finite");
  }
  if (!(a < b)) {
    throw InvalidArgument("interval requires a < b, got [" + describe(a) + ", " + describe(b) + "]");
  }
}

double Interval::grid_point(int j, int count) const noexcept {
  if (count <= 1 || j <= 0) return a_;
  if (j >= count - 1) return b_;
  return a_ + (b_ - a_) * static_cast<double>(j) / static_cast<double>(count - 1);
}

}  // namespace holder
