#include "rankcentrality/errors.hpp"

#include <utility>

namespace rankcentrality {

DisconnectedGraphError::DisconnectedGraphError(
    const std::string& what, std::vector<std::vector<Index>> components)
    : ComputationError(what), components_(std::move(components)) {}

DataError::DataError(const std::string& what, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

}  // namespace rankcentrality
