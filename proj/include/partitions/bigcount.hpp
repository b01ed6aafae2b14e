#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace partitions {

// Exact non-negative counts. P(n) exceeds 64 bits near n = 400, so every
// statistic in this library is arbitrary precision from the start.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace partitions
