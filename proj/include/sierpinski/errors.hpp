#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sierpinski {

// Forest or matrix size is not usable (zero nodes).
class InvalidSizeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A node index is outside [0, N).
class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// delete_edge / deletion_gain on a node that has no parent.
class NoEdgeError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Input sequence length disagrees with the forest size.
class SizeMismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed JSON forest, trace line, or size range.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public std::runtime_error {
public:
  explicit SingularMatrixError(std::size_t dependent_row)
      : std::runtime_error("matrix is singular: row " + std::to_string(dependent_row) +
                           " is linearly dependent on the others"),
        row_(dependent_row) {}

  std::size_t dependent_row() const noexcept { return row_; }

private:
  std::size_t row_;
};

} // namespace sierpinski
