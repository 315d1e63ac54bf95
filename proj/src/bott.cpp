#include "toricskt/bott.hpp"

#include "toricskt/errors.hpp"

#include <string>

namespace toricskt {

void check_bott_spec(const BottSpec& spec) {
  if (spec.k < 1) throw SpecError("tower height must be >= 1, got " + std::to_string(spec.k));
  for (const auto& [key, value] : spec.c) {
    auto [i, j] = key;
    if (i < 1 || j <= i || j > spec.k)
      throw SpecError("constant index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside 1 <= i < j <= " + std::to_string(spec.k));
    (void)value;
  }
}

Fan build_bott(const BottSpec& spec) {
  check_bott_spec(spec);
  const int k = spec.k;

  // Rays and cones are grown level by level; the cone count doubles each
  // step, giving 2^k by construction.
  std::vector<RayVector> rays = {{1}, {-1}};
  std::vector<std::vector<int>> cones = {{1}, {2}};

  for (int level = 2; level <= k; ++level) {
    const int prev_half = level - 1;
    std::vector<RayVector> next_rays(2 * level);
    for (int i = 1; i <= prev_half; ++i) {
      next_rays[i - 1] = rays[i - 1];
      next_rays[i - 1].push_back(0);
    }
    next_rays[level - 1] = RayVector(level, 0);
    next_rays[level - 1][level - 1] = 1;
    for (int i = 1; i <= prev_half; ++i) {
      RayVector v = rays[prev_half + i - 1];
      v.push_back(spec.constant(i, level));
      next_rays[level + i - 1] = std::move(v);
    }
    next_rays[2 * level - 1] = RayVector(level, 0);
    next_rays[2 * level - 1][level - 1] = -1;

    std::vector<std::vector<int>> next_cones;
    next_cones.reserve(2 * cones.size());
    for (const auto& cone : cones) {
      std::vector<int> lifted;
      lifted.reserve(level);
      for (int idx : cone) lifted.push_back(idx < level ? idx : idx + 1);
      std::vector<int> with_pos = lifted, with_neg = lifted;
      with_pos.push_back(level);
      with_neg.push_back(2 * level);
      next_cones.push_back(std::move(with_pos));
      next_cones.push_back(std::move(with_neg));
    }
    rays = std::move(next_rays);
    cones = std::move(next_cones);
  }

  Fan fan;
  fan.n = k;
  fan.rays = std::move(rays);
  fan.max_cones = std::move(cones);
  fan.canonicalize_cones();
  return fan;
}

LinearRelations bott_linear_relations(const BottSpec& spec) {
  check_bott_spec(spec);
  const int k = spec.k;
  LinearRelations out;
  out.k = k;
  for (int j = 1; j <= k; ++j) {
    LinearRelation rel;
    rel.lhs = k + j;
    rel.rhs.assign(2 * k, Int(0));
    rel.rhs[j - 1] = 1;
    for (int i = 1; i < j; ++i) rel.rhs[k + i - 1] = spec.constant(i, j);
    out.relations.push_back(std::move(rel));
  }
  return out;
}

}  // namespace toricskt
