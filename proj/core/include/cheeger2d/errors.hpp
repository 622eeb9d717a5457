#pragma once

#include <stdexcept>
#include <string>

namespace cheeger2d {

// Input does not describe a convex body with nonempty interior.
class DegenerateInput : public std::invalid_argument {
 public:
  explicit DegenerateInput(const std::string& what)
      : std::invalid_argument(what) {}
};

// A parameter that must be nonnegative was negative.
class NegativeOffset : public std::invalid_argument {
 public:
  explicit NegativeOffset(const std::string& what)
      : std::invalid_argument(what) {}
};

// An inward offset exceeded the inradius, so the inner set is empty.
class OffsetBeyondInradius : public std::invalid_argument {
 public:
  explicit OffsetBeyondInradius(const std::string& what)
      : std::invalid_argument(what) {}
};

// A configuration value lies outside its documented range.
class ParamOutOfRange : public std::invalid_argument {
 public:
  explicit ParamOutOfRange(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace cheeger2d
