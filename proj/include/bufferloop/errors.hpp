#pragma once

#include <stdexcept>
#include <string>

namespace bufferloop {

/// Thrown when an iteration fails to converge, an evaluation lands on a
/// pole, a limit is unbounded, or a numerical precondition is violated at
/// runtime. Bad arguments (degenerate inputs, dimension mismatches) throw
/// std::invalid_argument instead.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bufferloop
