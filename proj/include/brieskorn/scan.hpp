#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "brieskorn/seifert.hpp"

namespace brieskorn {

struct SweepFailure {
  std::vector<std::int64_t> tuple;
  std::string reason;
};

struct SweepResult {
  std::int64_t checked = 0;
  std::int64_t passed = 0;
  std::optional<SweepFailure> first_failure;  // lexicographically first
};

/// Per-tuple check: empty optional means pass, a string is the failure
/// reason. Must be safe to call concurrently on distinct tuples.
using TupleCheck =
    std::function<std::optional<std::string>(const BrieskornData&)>;

/// Runs `check` over every tuple from enumerate_tuples(n, max_product),
/// fanned out across `workers` threads. The result is independent of the
/// worker count: counts are summed and the reported failure is the one with
/// the lowest tuple index. `progress(done, total)` is polled from the
/// calling thread roughly twice a second when provided.
SweepResult sweep_tuples(
    int n, std::int64_t max_product, unsigned workers, const TupleCheck& check,
    const std::function<void(std::int64_t, std::int64_t)>& progress = {});

}  // namespace brieskorn
