#include <doctest.h>

#include "prony/errors.hpp"
#include "prony/serialization.hpp"
#include "test_support.hpp"

using namespace prony;
using namespace testsupport;

TEST_CASE("signal JSON round trip") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const Signal f = random_signal(rng, {.max_support = 3, .max_multiplicity = 3, .max_rank = 6});
    const Signal back = signal_from_json(signal_to_json(f));
    CHECK(signal_distance(f, back) == 0.0);
  }
}

TEST_CASE("moments JSON round trip keeps every bit") {
  std::mt19937_64 rng(23);
  MomentVector mu(5);
  for (Index i = 0; i < 5; ++i) mu(i) = random_disc(rng, 3.0);
  const MomentVector back = moments_from_json(moments_to_json(mu));
  CHECK((back - mu).norm() == 0.0);
}

TEST_CASE("malformed payloads are rejected") {
  CHECK_THROWS_AS(signal_from_json("not json"), IoError);
  CHECK_THROWS_AS(signal_from_json("{}"), IoError);
  CHECK_THROWS_AS(signal_from_json(R"({"support": [{"node": [0]}]})"), IoError);
  CHECK_THROWS_AS(moments_from_json(R"({"moments": [[1, "x"]]})"), IoError);
  CHECK_THROWS_AS(read_file("/nonexistent/prony-input.json"), IoError);
}
