#ifndef AGE_ERROR_HPP
#define AGE_ERROR_HPP

#include <stdexcept>

namespace age {

// File missing, unreadable, or unwritable.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input parsed but violates a schema or domain invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Point configuration too degenerate to fit a transform.
class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace age

#endif  // AGE_ERROR_HPP
