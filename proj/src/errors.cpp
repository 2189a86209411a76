#include "scheme_forge/errors.hpp"

namespace scheme_forge {

namespace {

std::string pair_str(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

DiagonalViolation::DiagonalViolation(int x_, int y_, int color_)
    : InvalidScheme("DiagonalViolation: pair " + pair_str(x_, y_) + " has color " +
                    std::to_string(color_)),
      x(x_),
      y(y_),
      color(color_) {}

DualViolation::DualViolation(int x_, int y_, const std::string& why)
    : InvalidScheme("DualViolation at " + pair_str(x_, y_) + ": " + why), x(x_), y(y_) {}

NonConstantIntersection::NonConstantIntersection(int s_, int t_, int u_, int x_, int y_,
                                                 int expected, int found)
    : InvalidScheme("NonConstantIntersection: c(" + std::to_string(s_) + "," +
                    std::to_string(t_) + "," + std::to_string(u_) + ") is " +
                    std::to_string(expected) + " at the witness pair but " +
                    std::to_string(found) + " at " + pair_str(x_, y_)),
      s(s_),
      t(t_),
      u(u_),
      x(x_),
      y(y_) {}

DichotomyViolation::DichotomyViolation(int s_)
    : InvalidScheme("DichotomyViolation: s*s for relation " + std::to_string(s_) +
                    " is neither 4*1+3s nor 4*1+2u+v"),
      s(s_) {}

TrichotomyViolation::TrichotomyViolation(int s_, int t_, const std::string& why)
    : InvalidScheme("TrichotomyViolation for (" + std::to_string(s_) + "," +
                    std::to_string(t_) + "): " + why),
      s(s_),
      t(t_) {}

BoundExceeded::BoundExceeded(std::size_t bound_)
    : Error("BoundExceeded: more than " + std::to_string(bound_) + " elements"),
      bound(bound_) {}

BadPrime::BadPrime(long p)
    : Error("BadPrime: " + std::to_string(p) + " is not a prime congruent to 1 mod 4") {}

DegreeTooLarge::DegreeTooLarge(long degree, long limit)
    : Error("DegreeTooLarge: degree " + std::to_string(degree) + " exceeds " +
            std::to_string(limit)) {}

PlaneError::PlaneError(Kind kind_, const std::string& what) : Error(what), kind(kind_) {}

NotAFiber::NotAFiber(int point)
    : Error("NotAFiber: {" + std::to_string(point) + "} is not a fiber") {}

CutoffExceeded::CutoffExceeded(int cutoff)
    : Error("CutoffExceeded: no base of size <= " + std::to_string(cutoff)) {}

}  // namespace scheme_forge
