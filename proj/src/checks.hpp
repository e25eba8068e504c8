#pragma once

#include <cstddef>
#include <string>

#include "lisakit/error.hpp"

namespace lisakit::detail {

inline void require_same_size(std::size_t weights, std::size_t values,
                              const char* what) {
  if (weights != values) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": weights are " + std::to_string(weights) +
                    "x" + std::to_string(weights) + " but there are " +
                    std::to_string(values) + " values");
  }
}

}  // namespace lisakit::detail
