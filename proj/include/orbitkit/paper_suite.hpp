#pragma once

#include <cstdint>

#include "orbitkit/report.hpp"

namespace orbitkit {

// Runs the full reproduction suite (16 checks) and returns one verdict per
// item.  Deterministic under a fixed seed: the final item re-runs the whole
// suite and compares the serialized verdicts byte for byte.
Report verify_paper(std::uint64_t seed);

}  // namespace orbitkit
