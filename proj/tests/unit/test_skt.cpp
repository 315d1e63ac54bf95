#include "toricskt/skt.hpp"

#include "support/corpus.hpp"
#include "toricskt/bott.hpp"
#include "toricskt/errors.hpp"
#include "toricskt/json_io.hpp"
#include "toricskt/search.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace toricskt;

TEST_CASE("w_1 always has the isolation property on a Bott fan") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    BottSpec spec = corpus::random_bott_spec(rng, 1, 5, 10);
    Cohomology ring = compute_cohomology(build_bott(spec));
    auto witness = isolation_decompose(ring, 1);
    REQUIRE(witness.has_value());
    CHECK(witness->support == std::vector<int>{spec.k + 1});
    CHECK(witness->coefficients == IntVec{1});
    CHECK(check_isolation_implies_square_zero(ring, *witness));
  }
}

TEST_CASE("generator p isolates when its column constants vanish") {
  BottSpec spec;
  spec.k = 4;
  spec.c[{1, 2}] = 3;
  spec.c[{1, 4}] = -2;
  spec.c[{2, 4}] = 5;
  // column 3 constants c_{1,3}, c_{2,3} stay zero, so w_3 = w_7
  Cohomology ring = compute_cohomology(build_bott(spec));
  auto witness = isolation_decompose(ring, 3);
  REQUIRE(witness.has_value());
  CHECK(witness->support == std::vector<int>{7});
  CHECK(witness->coefficients == IntVec{1});
  CHECK(check_isolation_implies_square_zero(ring, *witness));
}

TEST_CASE("Hirzebruch w_2 isolates exactly when the twist vanishes") {
  Cohomology twisted = compute_cohomology(corpus::hirzebruch(3));
  CHECK_FALSE(isolation_decompose(twisted, 2).has_value());

  Cohomology untwisted = compute_cohomology(corpus::hirzebruch(0));
  auto witness = isolation_decompose(untwisted, 2);
  REQUIRE(witness.has_value());
  CHECK(witness->support == std::vector<int>{4});
  CHECK(witness->coefficients == IntVec{1});
}

TEST_CASE("corrupted witnesses are rejected") {
  std::mt19937_64 rng(62);
  Cohomology ring = compute_cohomology(build_bott(corpus::random_bott_spec(rng, 3, 3, 5)));
  auto witness = isolation_decompose(ring, 1);
  REQUIRE(witness.has_value());

  IsolationWitness perturbed = *witness;
  perturbed.coefficients[0] += 1;
  CHECK_THROWS_AS(check_isolation_implies_square_zero(ring, perturbed), InvalidWitness);

  IsolationWitness bad_support = *witness;
  bad_support.support = {2};  // (1,2) is a cone pair
  CHECK_THROWS_AS(check_isolation_implies_square_zero(ring, bad_support), InvalidWitness);

  IsolationWitness self = *witness;
  self.support = {1};
  CHECK_THROWS_AS(check_isolation_implies_square_zero(ring, self), InvalidWitness);
}

TEST_CASE("witness transport through wedges") {
  std::mt19937_64 rng(63);
  BottSpec spec = corpus::random_bott_spec(rng, 2, 2, 6);
  Fan base = build_bott(spec);
  Cohomology base_ring = compute_cohomology(base);
  auto witness = isolation_decompose(base_ring, 1);
  REQUIRE(witness.has_value());
  CHECK(witness->support == std::vector<int>{3});

  auto [wedged, trace] = wedge_atomic(base, 2);
  IsolationWitness moved = transport_witness(*witness, trace);
  CHECK(moved.p == 1);
  CHECK(moved.support == std::vector<int>{3});
  Cohomology wedged_ring = compute_cohomology(wedged);
  CHECK(check_isolation_implies_square_zero(wedged_ring, moved));

  // isolation also re-derives on the wedged fan
  CHECK(isolation_decompose(wedged_ring, 1).has_value());

  // an empty trace transports to the identity
  JVector ones;
  ones.entries.assign(base.m(), 1);
  auto [same, empty_trace] = wedge_J(base, ones);
  IsolationWitness fixed = transport_witness(*witness, empty_trace);
  CHECK(fixed.support == witness->support);
  CHECK(fixed.fan_hash == witness->fan_hash);

  // mismatched base is refused
  WedgeTrace wrong = trace;
  wrong.base_hash = "0000";
  CHECK_THROWS_AS(transport_witness(*witness, wrong), TraceMismatch);
}

TEST_CASE("square-zero search on the Hirzebruch surface") {
  Cohomology ring = compute_cohomology(corpus::hirzebruch(1));
  std::vector<int> span = {1, 2};
  auto classes = square_zero_search(ring, 5, &span);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].cls == IntVec{1, 0, 0, 0});
  CHECK(classes[1].cls == IntVec{1, 2, 0, 0});

  // closed form within the box: y = 0 gives w1; 2x = a y gives (a, 2)/gcd
  for (std::int64_t a : {-4, -1, 2, 3, 6}) {
    Cohomology r2 = compute_cohomology(corpus::hirzebruch(a));
    for (std::int64_t bound : {1, 3, 5, 8}) {
      auto found = square_zero_search(r2, bound);
      std::set<IntVec> expected;
      expected.insert(IntVec{1, 0});
      Int g = std::gcd(a, std::int64_t{2});
      Int px = a / g, py = 2 / g;
      if (px < 0 || (px == 0 && py < 0)) { px = -px; py = -py; }
      if (abs(px) <= bound && abs(py) <= bound) expected.insert(IntVec{px, py});
      std::set<IntVec> got;
      for (const auto& c : found) got.insert(c.span_coords);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("no square-zero classes on the wedge of the line") {
  Cohomology ring = compute_cohomology(corpus::p2_like_fan());
  CHECK(square_zero_search(ring, 10).empty());
}

TEST_CASE("search rejects bad bounds and spans") {
  Cohomology ring = compute_cohomology(corpus::hirzebruch(1));
  CHECK_THROWS_AS(square_zero_search(ring, 0), BoundError);
  std::vector<int> dependent = {1, 3};  // w_3 = w_1 in H^2
  CHECK_THROWS_AS(square_zero_search(ring, 2, &dependent), SpecError);
  std::vector<int> out_of_range = {5};
  CHECK_THROWS_AS(square_zero_search(ring, 2, &out_of_range), IndexOutOfRange);
}

TEST_CASE("certification of explicit class lists") {
  const std::int64_t a = 3;
  Cohomology ring = compute_cohomology(corpus::hirzebruch(a));

  CohomologyClass w1 = generator_class(4, 1);
  CohomologyClass lemma_class(4, Int(0));
  lemma_class[0] = a;
  lemma_class[1] = 2;
  SktCertificate good = certify_skt(ring, {w1, lemma_class});
  CHECK(good.verified);
  CHECK(good.sum == IntVec{0});
  CHECK(good.base_assumptions == std::vector<std::string>{"projective"});

  SktCertificate bad = certify_skt(ring, {w1, generator_class(4, 2)});
  CHECK_FALSE(bad.verified);
  CHECK(bad.sum == IntVec{-a});

  // partial cancellation does not certify (a = 2: squares -2 and 0)
  Cohomology ring2 = compute_cohomology(corpus::hirzebruch(2));
  CohomologyClass w2 = generator_class(4, 2);
  CohomologyClass mixed(4, Int(0));
  mixed[0] = 1;
  mixed[1] = 1;
  SktCertificate partial = certify_skt(ring2, {w2, mixed});
  CHECK(partial.squares[0] == IntVec{-2});
  CHECK(partial.squares[1] == IntVec{0});
  CHECK(partial.sum == IntVec{-2});
  CHECK_FALSE(partial.verified);

  CHECK_THROWS_AS(certify_skt(ring, {w1}), OddRankError);
  CHECK_THROWS_AS(certify_skt(ring, {}), OddRankError);
  CHECK_THROWS_AS(certify_skt(ring, {IntVec{1}, IntVec{1}}), DimensionMismatch);
}

TEST_CASE("find_skt_bundle returns the tower's standard certificates") {
  std::mt19937_64 rng(64);
  BottSpec spec = corpus::random_bott_spec(rng, 3, 3, 2);
  Cohomology ring = compute_cohomology(build_bott(spec));
  auto certs = find_skt_bundle(ring, 2, 3);
  REQUIRE_FALSE(certs.empty());

  CohomologyClass w1 = generator_class(6, 1);
  CohomologyClass lemma_class(6, Int(0));
  lemma_class[0] = spec.constant(1, 2);
  lemma_class[1] = 2;
  bool has_w1_pair = false, has_lemma_pair = false;
  for (const auto& cert : certs) {
    CHECK(cert.verified);
    CHECK(verify_certificate(ring, cert).empty());
    if (cert.classes == std::vector<CohomologyClass>{w1, w1}) has_w1_pair = true;
    if (cert.classes == std::vector<CohomologyClass>{w1, lemma_class} ||
        cert.classes == std::vector<CohomologyClass>{lemma_class, w1})
      has_lemma_pair = true;
  }
  CHECK(has_w1_pair);
  CHECK(has_lemma_pair);

  CHECK(find_skt_bundle(compute_cohomology(corpus::p2_like_fan()), 2, 10).empty());
  CHECK_THROWS_AS(find_skt_bundle(ring, 3, 2), OddRankError);
}

TEST_CASE("rank-four bundles pad canceling pairs with square-zero classes") {
  Cohomology ring = compute_cohomology(corpus::hirzebruch(1));
  auto certs = find_skt_bundle(ring, 4, 2, 200);
  REQUIRE_FALSE(certs.empty());
  bool saw_pad = false;
  for (const auto& cert : certs) {
    CHECK(cert.classes.size() == 4);
    CHECK(cert.verified);
    CHECK(verify_certificate(ring, cert).empty());
    if (cert.construction == "cancellation_pair") saw_pad = true;
  }
  CHECK(saw_pad);
}

TEST_CASE("verified certificates survive a serialization round trip") {
  std::mt19937_64 rng(65);
  BottSpec spec = corpus::random_bott_spec(rng, 2, 4, 3);
  Fan fan = build_bott(spec);
  Cohomology ring = compute_cohomology(fan);
  auto certs = find_skt_bundle(ring, 2, 2, 8);
  REQUIRE_FALSE(certs.empty());
  for (const auto& cert : certs) {
    std::string fan_text = serialize_fan(fan);
    std::string cert_text = certificate_to_json(cert).dump();
    Fan fresh_fan = parse_fan(fan_text);
    SktCertificate fresh_cert = parse_certificate(cert_text);
    Cohomology fresh_ring = compute_cohomology(fresh_fan);
    CHECK(verify_certificate(fresh_ring, fresh_cert).empty());
  }
}

TEST_CASE("tampering is caught by verification") {
  Cohomology ring = compute_cohomology(corpus::hirzebruch(2));
  CohomologyClass w1 = generator_class(4, 1);
  SktCertificate cert = certify_skt(ring, {w1, w1});
  REQUIRE(cert.verified);
  CHECK(verify_certificate(ring, cert).empty());

  SktCertificate tampered = cert;
  tampered.classes[0][1] = 1;
  CHECK_FALSE(verify_certificate(ring, tampered).empty());

  SktCertificate forged = cert;
  forged.verified = true;
  forged.sum = IntVec{0};
  forged.classes[1] = generator_class(4, 2);
  CHECK_FALSE(verify_certificate(ring, forged).empty());

  SktCertificate wrong_fan = cert;
  wrong_fan.fan_hash = "deadbeef";
  CHECK_FALSE(verify_certificate(ring, wrong_fan).empty());
}

TEST_CASE("serial and parallel enumeration kernels agree exactly") {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 6; ++trial) {
    BottSpec spec = corpus::random_bott_spec(rng, 2, 4, 6);
    Cohomology ring = compute_cohomology(build_bott(spec));
    GramForm form;
    form.vars = ring.h2.rank;
    form.out_dim = ring.h4.rank;
    for (int t = 0; t < form.vars; ++t) {
      for (int s = t; s < form.vars; ++s) {
        form.gram.push_back(product(ring, generator_class(ring.m(), t + 1),
                                    generator_class(ring.m(), s + 1)));
      }
    }
    std::int64_t bound = corpus::rand_range(rng, 1, 4);
    CHECK(enumerate_square_zero_serial(form, bound) ==
          enumerate_square_zero_parallel(form, bound));
  }

  // random (not form-of-a-fan) inputs, including values beyond int64
  for (int trial = 0; trial < 4; ++trial) {
    GramForm form;
    form.vars = 3;
    form.out_dim = 2;
    for (int t = 0; t < form.vars; ++t) {
      for (int s = t; s < form.vars; ++s) {
        IntVec g(form.out_dim);
        for (int d = 0; d < form.out_dim; ++d) {
          g[d] = corpus::rand_range(rng, -3, 3);
          if (trial % 2 == 0) g[d] *= Int("123456789123456789123456789");
        }
        form.gram.push_back(g);
      }
    }
    CHECK(enumerate_square_zero_serial(form, 3) == enumerate_square_zero_parallel(form, 3));
  }
}
