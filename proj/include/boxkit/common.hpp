#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxkit {

// A coordinate set S ⊆ [n] as a bitmask; bit i is coordinate i (0-based).
using CoordSet = std::uint32_t;

// One element index per factor, in factor order.
using Outcome = std::vector<int>;

// Hard enumeration caps. Exactness is the contract: anything past a cap is a
// hard error, never a silent truncation.
inline constexpr std::uint64_t kOutcomeCap = std::uint64_t{1} << 24;
inline constexpr std::size_t kPaFactorCap = 12;         // exhaustive up-set pairs
inline constexpr std::size_t kWitnessCoordCap = 20;     // 2^n witness masks
inline constexpr std::size_t kIndependenceEventCap = 20;

// Thrown when an exact computation would exceed its enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace boxkit
