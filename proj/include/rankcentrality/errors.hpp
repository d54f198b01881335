#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace rankcentrality {

using Index = Eigen::Index;

// The data admits no meaningful answer: disconnected comparisons, a divergent
// likelihood, a ratio with zero denominator. Precondition violations on
// arguments use std::invalid_argument / std::out_of_range instead.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraphError : public ComputationError {
 public:
  DisconnectedGraphError(const std::string& what,
                         std::vector<std::vector<Index>> components);

  const std::vector<std::vector<Index>>& components() const noexcept {
    return components_;
  }

 private:
  std::vector<std::vector<Index>> components_;
};

// Malformed comparison file. line() is 1-based and counts the header.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& what, std::size_t line);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rankcentrality
