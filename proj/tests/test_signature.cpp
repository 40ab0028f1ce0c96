#include <catch2/catch_amalgamated.hpp>

#include "ck/linalg.hpp"
#include "ck/signature.hpp"

using ck::OmegaSignature;

TEST_CASE("two-index coefficients are interval products", "[signature]") {
  const OmegaSignature sig({2.0, 3.0, 5.0});
  CHECK(sig.product(1, 3) == 15.0);
  CHECK(sig.product(0, 2) == 6.0);
  CHECK(sig.product(0, 3) == 30.0);
  for (int a = 0; a <= 3; ++a) CHECK(sig.product(a, a) == 1.0);
}

TEST_CASE("two-index coefficients compose", "[signature]") {
  ck::SeededRng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> w(4);
    for (auto& x : w) x = static_cast<double>(rng.next_index(7) - 3);
    const OmegaSignature sig(w);
    for (int a = 0; a <= 4; ++a)
      for (int b = a; b <= 4; ++b)
        for (int c = b; c <= 4; ++c)
          CHECK(sig.product(a, c) == sig.product(a, b) * sig.product(b, c));
  }
}

TEST_CASE("signature validation", "[signature]") {
  CHECK_THROWS_AS(OmegaSignature({}), std::invalid_argument);
  CHECK_THROWS_AS(OmegaSignature({1.0, std::numeric_limits<double>::infinity()}),
                  std::invalid_argument);
  const OmegaSignature sig({1.0, -1.0});
  CHECK_THROWS_AS(sig.product(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(sig.product(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sig.omega(0), std::invalid_argument);
}

TEST_CASE("canonical scaling keeps signs", "[signature]") {
  const OmegaSignature sig({2.5, 0.0, -0.3});
  const auto canon = sig.canonical();
  CHECK(canon.omegas() == std::vector<double>{1.0, 0.0, -1.0});
}

TEST_CASE("canonical signature enumeration covers 3^n patterns", "[signature]") {
  const auto sigs = ck::canonical_signatures(3);
  REQUIRE(sigs.size() == 27);
  CHECK(sigs.front().omegas() == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(sigs.back().omegas() == std::vector<double>{-1.0, -1.0, -1.0});
  // all distinct
  for (std::size_t i = 0; i < sigs.size(); ++i)
    for (std::size_t j = i + 1; j < sigs.size(); ++j) CHECK(!(sigs[i] == sigs[j]));
}
