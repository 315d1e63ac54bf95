#include "toricskt/wedge.hpp"

#include "toricskt/errors.hpp"
#include "toricskt/json_io.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace toricskt {

namespace {

// Core of the atomic step, without validation; callers check the input.
Fan wedge_atomic_unchecked(const Fan& fan, int i) {
  const int m = fan.m();
  Fan out;
  out.n = fan.n + 1;
  out.rays.reserve(m + 1);
  for (int t = 0; t < m; ++t) {
    RayVector v = fan.rays[t];
    v.push_back(t + 1 == i ? -1 : 0);
    out.rays.push_back(std::move(v));
  }
  RayVector apex(out.n, 0);
  apex[out.n - 1] = 1;
  out.rays.push_back(std::move(apex));

  for (const auto& cone : fan.max_cones) {
    bool contains = std::find(cone.begin(), cone.end(), i) != cone.end();
    std::vector<int> with_new = cone;
    with_new.push_back(m + 1);
    out.max_cones.push_back(std::move(with_new));
    if (!contains) {
      std::vector<int> with_i = cone;
      with_i.push_back(i);
      out.max_cones.push_back(std::move(with_i));
    }
  }
  out.canonicalize_cones();
  return out;
}

void require_valid(const Fan& fan, const char* op) {
  ValidationReport report = validate_fan(fan);
  if (!report.ok())
    throw InvalidFan(std::string(op) + " requires a fully valid fan (smooth=" +
                     (report.smooth ? "true" : "false") + ", facet_balanced=" +
                     (report.facet_balanced ? "true" : "false") + ", ray_primitivity=" +
                     (report.ray_primitivity ? "true" : "false") + ")");
}

}  // namespace

std::pair<Fan, WedgeTrace> wedge_atomic(const Fan& fan, int i) {
  if (i < 1 || i > fan.m())
    throw IndexOutOfRange("wedge index " + std::to_string(i) + " outside 1.." +
                          std::to_string(fan.m()));
  require_valid(fan, "wedge_atomic");

  WedgeTrace trace;
  trace.base_hash = fan_hash(fan);
  trace.base_m = fan.m();
  Fan out = wedge_atomic_unchecked(fan, i);
  trace.steps.push_back({1, i, fan.m() + 1});
  trace.final_m = out.m();
  trace.generator_map.resize(fan.m());
  std::iota(trace.generator_map.begin(), trace.generator_map.end(), 1);
  trace.final_hash = fan_hash(out);
  return {std::move(out), std::move(trace)};
}

int wedge_dimension(const Fan& fan, const JVector& j_vector) {
  int d = fan.n;
  for (int e : j_vector.entries) d += e - 1;
  return d;
}

std::pair<Fan, WedgeTrace> wedge_J(const Fan& fan, const JVector& j_vector) {
  if (static_cast<int>(j_vector.entries.size()) != fan.m())
    throw JShapeError("J has " + std::to_string(j_vector.entries.size()) + " entries, fan has " +
                      std::to_string(fan.m()) + " rays");
  for (std::size_t t = 0; t < j_vector.entries.size(); ++t) {
    if (j_vector.entries[t] < 1)
      throw JShapeError("J entry " + std::to_string(t + 1) + " is " +
                        std::to_string(j_vector.entries[t]) + ", must be >= 1");
  }
  require_valid(fan, "wedge_J");

  WedgeTrace trace;
  trace.base_hash = fan_hash(fan);
  trace.base_m = fan.m();

  Fan current = fan;
  int step = 0;
  for (int ray = 1; ray <= fan.m(); ++ray) {
    for (int rep = 1; rep < j_vector.entries[ray - 1]; ++rep) {
      // The wedged ray keeps its index, so "the current image of ray i" is i.
      int new_index = current.m() + 1;
      current = wedge_atomic_unchecked(current, ray);
      trace.steps.push_back({++step, ray, new_index});
    }
  }

  trace.final_m = current.m();
  trace.generator_map.resize(fan.m());
  std::iota(trace.generator_map.begin(), trace.generator_map.end(), 1);
  trace.final_hash = fan_hash(current);
  return {std::move(current), std::move(trace)};
}

}  // namespace toricskt
