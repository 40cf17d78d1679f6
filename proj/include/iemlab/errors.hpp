#ifndef IEMLAB_ERRORS_HPP
#define IEMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iemlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShiftOutOfRange : Error {
  using Error::Error;
};
struct IncompatibleStream : Error {
  using Error::Error;
};
struct NoSuitableEigenvalue : Error {
  using Error::Error;
};
struct DepthCapExceeded : Error {
  using Error::Error;
};
struct UnresolvedRegion : Error {
  using Error::Error;
};
struct NotATie : Error {
  using Error::Error;
};
struct NoStabilization : Error {
  using Error::Error;
};
struct InvarianceViolation : Error {
  using Error::Error;
};
struct NotInComponent : Error {
  using Error::Error;
};
struct NonUniquePreimage : Error {
  using Error::Error;
};
struct DirectionOutsideComponent : Error {
  using Error::Error;
};
struct SeriesDiverging : Error {
  using Error::Error;
};
struct OrbitCollision : Error {
  using Error::Error;
};
struct NonReturningOrbit : Error {
  using Error::Error;
};
struct ReduciblePermutation : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace iemlab

#endif
