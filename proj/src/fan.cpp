#include "toricskt/fan.hpp"

#include "toricskt/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toricskt {

void Fan::canonicalize_cones() {
  for (auto& cone : max_cones) std::sort(cone.begin(), cone.end());
  std::sort(max_cones.begin(), max_cones.end());
}

namespace {

void check_structure(const Fan& fan) {
  if (fan.n < 1) throw MalformedFan("dimension must be positive, got " + std::to_string(fan.n));
  const int m = fan.m();
  if (m == 0) throw MalformedFan("fan has no rays");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(fan.rays[i].size()) != fan.n)
      throw MalformedFan("ray " + std::to_string(i + 1) + " has length " +
                         std::to_string(fan.rays[i].size()) + ", expected " +
                         std::to_string(fan.n));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (fan.rays[i] == fan.rays[j])
        throw MalformedFan("rays " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                           " are identical");
    }
  }
  if (fan.max_cones.empty()) throw MalformedFan("fan has no max cones");
  std::vector<bool> seen(m, false);
  std::set<std::vector<int>> distinct;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    if (static_cast<int>(cone.size()) != fan.n)
      throw MalformedFan("max cone " + std::to_string(c + 1) + " has " +
                         std::to_string(cone.size()) + " rays, expected " +
                         std::to_string(fan.n));
    std::set<int> members;
    for (int idx : cone) {
      if (idx < 1 || idx > m)
        throw MalformedFan("max cone " + std::to_string(c + 1) + " references ray " +
                           std::to_string(idx) + " outside 1.." + std::to_string(m));
      if (!members.insert(idx).second)
        throw MalformedFan("max cone " + std::to_string(c + 1) + " repeats ray " +
                           std::to_string(idx));
      seen[idx - 1] = true;
    }
    std::vector<int> sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    if (!distinct.insert(sorted).second)
      throw MalformedFan("duplicate max cone at position " + std::to_string(c + 1));
  }
  for (int i = 0; i < m; ++i) {
    if (!seen[i]) throw MalformedFan("ray " + std::to_string(i + 1) + " appears in no max cone");
  }
}

Int cone_determinant(const Fan& fan, const std::vector<int>& cone) {
  IntMatrix mat(fan.n, fan.n);
  for (int c = 0; c < fan.n; ++c) {
    const RayVector& ray = fan.rays[cone[c] - 1];
    for (int r = 0; r < fan.n; ++r) mat(r, c) = ray[r];
  }
  return det(std::move(mat));
}

ValidationReport validate_impl(const Fan& fan, bool parallel) {
  check_structure(fan);
  ValidationReport report;
  const int m = fan.m();
  const int num_cones = static_cast<int>(fan.max_cones.size());

  report.ray_primitivity = true;
  for (int i = 0; i < m; ++i) {
    IntVec v(fan.rays[i].begin(), fan.rays[i].end());
    Int g = gcd_of(v);
    if (g != 1) {  // covers the zero ray (g = 0)
      report.ray_primitivity = false;
      ValidationFailure f;
      f.kind = "nonprimitive_ray";
      f.ray_index = i + 1;
      report.failures.push_back(std::move(f));
    }
  }

  std::vector<Int> dets(num_cones);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int c = 0; c < num_cones; ++c) dets[c] = cone_determinant(fan, fan.max_cones[c]);
  (void)parallel;

  report.smooth = true;
  for (int c = 0; c < num_cones; ++c) {
    if (dets[c] == 1 || dets[c] == -1) continue;
    report.smooth = false;
    ValidationFailure f;
    f.kind = "nonunimodular_cone";
    f.cone_index = c + 1;
    f.determinant = dets[c];
    report.failures.push_back(std::move(f));
  }

  // Pseudomanifold condition: every facet lies in exactly two max cones.
  std::map<std::vector<int>, int> facet_count;
  for (const auto& cone : fan.max_cones) {
    for (int drop = 0; drop < fan.n; ++drop) {
      std::vector<int> facet;
      facet.reserve(fan.n - 1);
      for (int t = 0; t < fan.n; ++t)
        if (t != drop) facet.push_back(cone[t]);
      ++facet_count[facet];
    }
  }
  report.facet_balanced = true;
  for (const auto& [facet, count] : facet_count) {
    if (count == 2) continue;
    report.facet_balanced = false;
    ValidationFailure f;
    f.kind = "facet_imbalance";
    f.facet = facet;
    f.count = count;
    report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace

ValidationReport validate_fan(const Fan& fan) { return validate_impl(fan, true); }

ValidationReport validate_fan_serial(const Fan& fan) { return validate_impl(fan, false); }

bool is_cone_pair(const Fan& fan, int i, int j) {
  const int m = fan.m();
  if (i < 1 || i > m || j < 1 || j > m || i == j)
    throw IndexOutOfRange("is_cone_pair needs distinct ray indices in 1.." + std::to_string(m) +
                          ", got (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  for (const auto& cone : fan.max_cones) {
    bool has_i = std::find(cone.begin(), cone.end(), i) != cone.end();
    bool has_j = std::find(cone.begin(), cone.end(), j) != cone.end();
    if (has_i && has_j) return true;
  }
  return false;
}

std::vector<std::vector<bool>> cone_pair_table(const Fan& fan) {
  const int m = fan.m();
  std::vector<std::vector<bool>> table(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) table[i][i] = true;
  for (const auto& cone : fan.max_cones) {
    for (std::size_t a = 0; a < cone.size(); ++a) {
      for (std::size_t b = a + 1; b < cone.size(); ++b) {
        table[cone[a] - 1][cone[b] - 1] = true;
        table[cone[b] - 1][cone[a] - 1] = true;
      }
    }
  }
  return table;
}

IntMatrix characteristic_matrix(const Fan& fan) {
  IntMatrix mat(fan.n, fan.m());
  for (int c = 0; c < fan.m(); ++c) {
    for (int r = 0; r < fan.n; ++r) mat(r, c) = fan.rays[c][r];
  }
  return mat;
}

}  // namespace toricskt
