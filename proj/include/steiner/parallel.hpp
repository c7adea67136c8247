#pragma once

#include <cstddef>

namespace steiner {

/// Worker threads a parallel loop may use: hardware concurrency, capped by
/// STEINER_BALANCE_THREADS when set to a positive integer.
std::size_t thread_cap() noexcept;

}  // namespace steiner
