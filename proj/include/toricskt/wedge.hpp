#pragma once

#include "toricskt/fan.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toricskt {

// m-tuple of positive integers aligned with the fan's ray order.
struct JVector {
  std::vector<int> entries;
};

struct WedgeStep {
  int step = 0;          // 1-based position in the sequence
  int wedged_index = 0;  // ray the atomic wedge was applied along
  int new_index = 0;     // index assigned to the spawned ray
};

// Replayable record of an iterated wedge. New rays are appended at the end
// and the wedged ray is modified in place, so old generator indices survive
// unchanged; generator_map records the bijection explicitly anyway.
struct WedgeTrace {
  std::string base_hash;
  std::string final_hash;
  int base_m = 0;
  int final_m = 0;
  std::vector<WedgeStep> steps;
  std::vector<int> generator_map;  // old 1-based index -> final 1-based index
};

// One simplicial wedge along ray i: dimension and ray count grow by one,
// ray i picks up a -1 in the new coordinate, the new ray is e_{n+1}, and max
// cones follow the two spawning rules. Throws IndexOutOfRange / InvalidFan.
std::pair<Fan, WedgeTrace> wedge_atomic(const Fan& fan, int i);

// Iterated wedge: j_i - 1 atomic steps along ray i, ascending i then
// repetition order. Throws JShapeError when J does not fit the fan.
std::pair<Fan, WedgeTrace> wedge_J(const Fan& fan, const JVector& j_vector);

// Dimension of the output fan: n + sum (j_i - 1).
int wedge_dimension(const Fan& fan, const JVector& j_vector);

}  // namespace toricskt
