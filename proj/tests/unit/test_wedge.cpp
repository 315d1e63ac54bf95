#include "toricskt/wedge.hpp"

#include "support/corpus.hpp"
#include "support/unimodular.hpp"
#include "toricskt/bott.hpp"
#include "toricskt/cohomology.hpp"
#include "toricskt/errors.hpp"
#include "toricskt/json_io.hpp"
#include "toricskt/skt.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace toricskt;

TEST_CASE("atomic wedge of the projective line") {
  auto [fan, trace] = wedge_atomic(corpus::p1_fan(), 1);
  CHECK(fan.n == 2);
  CHECK(fan.rays == std::vector<RayVector>{{1, -1}, {-1, 0}, {0, 1}});
  CHECK(fan.max_cones == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].wedged_index == 1);
  CHECK(trace.steps[0].new_index == 3);
  CHECK(validate_fan(fan).ok());

  // rank H^2 stays 1 and no square-zero class exists on this fan
  Cohomology ring = compute_cohomology(fan);
  CHECK(ring.h2.rank == 1);
  CHECK(square_zero_search(ring, 10).empty());
}

TEST_CASE("atomic wedge appends the expected matrix row") {
  Fan base = corpus::hirzebruch(2);
  auto [fan, trace] = wedge_atomic(base, 1);
  IntMatrix lambda = characteristic_matrix(fan);
  REQUIRE(lambda.rows() == 3);
  REQUIRE(lambda.cols() == 5);
  IntVec last_row = lambda.row(2);
  CHECK(last_row == IntVec{-1, 0, 0, 0, 1});
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 2; ++r) CHECK(lambda(r, c) == characteristic_matrix(base)(r, c));
}

TEST_CASE("spawning rules produce the right cone count") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    Fan base = build_bott(corpus::random_bott_spec(rng, 1, 4, 6));
    int i = static_cast<int>(corpus::rand_range(rng, 1, base.m()));
    std::size_t containing = 0;
    for (const auto& cone : base.max_cones)
      if (std::find(cone.begin(), cone.end(), i) != cone.end()) ++containing;
    auto [fan, trace] = wedge_atomic(base, i);
    CHECK(fan.max_cones.size() ==
          2 * (base.max_cones.size() - containing) + containing);
  }
}

TEST_CASE("wedge preserves validity, H^2 rank, and cone pairs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 8; ++trial) {
    Fan base = build_bott(corpus::random_bott_spec(rng, 1, 4, 6));
    int i = static_cast<int>(corpus::rand_range(rng, 1, base.m()));
    auto [fan, trace] = wedge_atomic(base, i);

    CHECK(validate_fan(fan).ok());
    CHECK(fan.n == base.n + 1);
    CHECK(fan.m() == base.m() + 1);

    Cohomology before = compute_cohomology(base);
    Cohomology after = compute_cohomology(fan);
    CHECK(after.h2.rank == before.h2.rank);

    const int grown = base.m() + 1;
    for (int a = 1; a <= base.m(); ++a) {
      for (int b = a + 1; b <= base.m(); ++b)
        CHECK(is_cone_pair(fan, a, b) == is_cone_pair(base, a, b));
      if (a != i) CHECK(is_cone_pair(fan, grown, a) == is_cone_pair(base, i, a));
    }
    CHECK(is_cone_pair(fan, i, grown));
  }
}

TEST_CASE("identity J-vector returns the input fan and an empty trace") {
  Fan base = corpus::hirzebruch(3);
  JVector j;
  j.entries = {1, 1, 1, 1};
  auto [fan, trace] = wedge_J(base, j);
  CHECK(fan == base);
  CHECK(trace.steps.empty());
  CHECK(trace.base_hash == trace.final_hash);
}

TEST_CASE("dimension bookkeeping follows the J-vector") {
  Fan p1 = corpus::p1_fan();
  JVector j;
  j.entries = {2, 1};
  CHECK(wedge_dimension(p1, j) == 2);
  auto [fan, trace] = wedge_J(p1, j);
  CHECK(fan.n == 2);
  CHECK(fan.m() == 3);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 6; ++trial) {
    Fan base = build_bott(corpus::random_bott_spec(rng, 1, 3, 5));
    JVector jv = corpus::random_j_vector(rng, base.m(), 3);
    auto [out, tr] = wedge_J(base, jv);
    CHECK(out.n == wedge_dimension(base, jv));
    int extra = 0;
    for (int e : jv.entries) extra += e - 1;
    CHECK(out.m() == base.m() + extra);
    CHECK(static_cast<int>(tr.steps.size()) == extra);
    CHECK(validate_fan(out).ok());
  }
}

TEST_CASE("iterated wedge reproduces the displayed block matrix") {
  Fan base = corpus::hirzebruch(2);
  JVector j;
  j.entries = {3, 2, 1, 1};
  auto [fan, trace] = wedge_J(base, j);
  REQUIRE(fan.n == 5);
  REQUIRE(fan.m() == 7);
  IntMatrix lambda = characteristic_matrix(fan);
  IntMatrix base_lambda = characteristic_matrix(base);
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 2; ++r) CHECK(lambda(r, c) == base_lambda(r, c));
  for (int c = 4; c < 7; ++c)
    for (int r = 0; r < 2; ++r) CHECK(lambda(r, c) == 0);
  CHECK(lambda.row(2) == IntVec{-1, 0, 0, 0, 1, 0, 0});
  CHECK(lambda.row(3) == IntVec{-1, 0, 0, 0, 0, 1, 0});
  CHECK(lambda.row(4) == IntVec{0, -1, 0, 0, 0, 0, 1});
}

TEST_CASE("replaying the trace reproduces the output fan") {
  std::mt19937_64 rng(44);
  Fan base = build_bott(corpus::random_bott_spec(rng, 2, 3, 4));
  JVector j = corpus::random_j_vector(rng, base.m(), 3);
  auto [fan, trace] = wedge_J(base, j);

  Fan replay = base;
  for (const auto& step : trace.steps) {
    auto [next, ignored] = wedge_atomic(replay, step.wedged_index);
    CHECK(next.m() == step.new_index);
    replay = next;
  }
  CHECK(replay == fan);
  CHECK(fan_hash(replay) == trace.final_hash);
}

TEST_CASE("error paths: shape, range, invalid input") {
  Fan base = corpus::p1_fan();
  JVector wrong_len;
  wrong_len.entries = {2};
  CHECK_THROWS_AS(wedge_J(base, wrong_len), JShapeError);

  JVector nonpositive;
  nonpositive.entries = {0, 1};
  CHECK_THROWS_AS(wedge_J(base, nonpositive), JShapeError);

  CHECK_THROWS_AS(wedge_atomic(base, 0), IndexOutOfRange);
  CHECK_THROWS_AS(wedge_atomic(base, 3), IndexOutOfRange);

  Fan invalid;
  invalid.n = 2;
  invalid.rays = {{1, 0}, {1, 2}};
  invalid.max_cones = {{1, 2}};
  CHECK_THROWS_AS(wedge_atomic(invalid, 1), InvalidFan);
}

namespace {

struct OrderedRun {
  Fan fan;
  std::vector<std::pair<int, int>> provenance;  // (origin ray, copy number), copy 0 = original
};

OrderedRun apply_order(const Fan& base, const std::vector<int>& order) {
  OrderedRun run;
  run.fan = base;
  for (int i = 1; i <= base.m(); ++i) run.provenance.emplace_back(i, 0);
  std::vector<int> copies(base.m(), 0);
  for (int ray : order) {
    run.fan = wedge_atomic(run.fan, ray).first;
    run.provenance.emplace_back(ray, ++copies[ray - 1]);
  }
  return run;
}

}  // namespace

TEST_CASE("atomic step order changes the fan only by a unimodular relabeling") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 6; ++trial) {
    Fan base = build_bott(corpus::random_bott_spec(rng, 1, 3, 4));
    JVector j = corpus::random_j_vector(rng, base.m(), 3);

    std::vector<int> steps;
    for (int i = 1; i <= base.m(); ++i)
      for (int rep = 1; rep < j.entries[i - 1]; ++rep) steps.push_back(i);

    std::vector<int> order_a = steps, order_b = steps;
    std::shuffle(order_a.begin(), order_a.end(), rng);
    std::shuffle(order_b.begin(), order_b.end(), rng);

    OrderedRun run_a = apply_order(base, order_a);
    OrderedRun run_b = apply_order(base, order_b);

    // canonical bijection: match provenance keys
    const int m_out = run_a.fan.m();
    std::vector<int> sigma(m_out, 0);  // index in A -> index in B (1-based)
    for (int a = 0; a < m_out; ++a) {
      auto it = std::find(run_b.provenance.begin(), run_b.provenance.end(), run_a.provenance[a]);
      REQUIRE(it != run_b.provenance.end());
      sigma[a] = static_cast<int>(it - run_b.provenance.begin()) + 1;
    }

    // max cone sets match under sigma
    std::set<std::vector<int>> mapped;
    for (const auto& cone : run_a.fan.max_cones) {
      std::vector<int> image;
      for (int idx : cone) image.push_back(sigma[idx - 1]);
      std::sort(image.begin(), image.end());
      mapped.insert(image);
    }
    std::set<std::vector<int>> expected(run_b.fan.max_cones.begin(), run_b.fan.max_cones.end());
    CHECK(mapped == expected);

    // lattice change of basis: U * Lambda_A = Lambda_B * P_sigma
    IntMatrix lambda_a = characteristic_matrix(run_a.fan);
    IntMatrix lambda_b = characteristic_matrix(run_b.fan);
    IntMatrix permuted(lambda_b.rows(), lambda_b.cols());
    for (int c = 0; c < m_out; ++c)
      for (std::size_t r = 0; r < lambda_b.rows(); ++r)
        permuted(r, c) = lambda_b(r, sigma[c] - 1);
    auto u = corpus::solve_unimodular_map(lambda_a, permuted);
    CHECK(u.has_value());
  }
}
