#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "ck/bracket.hpp"
#include "ck/involutions.hpp"
#include "ck/killing.hpp"
#include "ck/signature.hpp"

using ck::GeneratorIndex;
using ck::OmegaSignature;

TEST_CASE("involution signs split translations from rotations", "[involutions]") {
  for (int j = 1; j <= 4; ++j) CHECK(ck::theta_sign(1, GeneratorIndex(0, j)) == -1);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 4; ++j) CHECK(ck::theta_sign(1, GeneratorIndex(i, j)) == 1);
  // applying the involution twice is the identity; signs are just +-1
  for (int m = 1; m <= 4; ++m)
    for (const auto& g : ck::all_generators(4))
      CHECK(ck::theta_sign(m, g) * ck::theta_sign(m, g) == 1);
}

TEST_CASE("Cartan split sizes and membership", "[involutions]") {
  const OmegaSignature sig({1.0, 1.0, 1.0});
  const auto split = ck::cartan_split(sig, 2);
  CHECK(split.p_generators.size() == 4);  // m (N+1-m) = 2*2
  REQUIRE(split.h_generators.size() == 2);
  CHECK(split.h_generators[0] == GeneratorIndex(0, 1));
  CHECK(split.h_generators[1] == GeneratorIndex(2, 3));

  const auto split1 = ck::cartan_split(sig, 1);
  CHECK(split1.p_generators.size() == 3);

  for (int n : {2, 3, 4})
    for (int m = 1; m <= n; ++m) {
      const OmegaSignature s(std::vector<double>(static_cast<std::size_t>(n), 1.0));
      const auto sp = ck::cartan_split(s, m);
      CHECK(static_cast<int>(sp.p_generators.size()) == m * (n + 1 - m));
      CHECK(static_cast<int>(sp.p_generators.size() + sp.h_generators.size()) ==
            ck::generator_count(n));
    }
}

TEST_CASE("bracket containment of the decomposition", "[involutions]") {
  ck::SeededRng rng(3);
  for (int n : {2, 3, 4})
    for (int m = 1; m <= n; ++m)
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> w(static_cast<std::size_t>(n));
        for (auto& v : w) v = static_cast<double>(rng.next_index(5) - 2);
        const OmegaSignature sig(w);
        const auto in_p = [m](const GeneratorIndex& g) { return ck::theta_sign(m, g) < 0; };
        for (const auto& g1 : ck::all_generators(n))
          for (const auto& g2 : ck::all_generators(n)) {
            const auto r = ck::bracket(sig, g1, g2);
            for (const auto& t : r.terms()) {
              const bool expect_p = in_p(g1) != in_p(g2);  // [h,p] in p, [h,h],[p,p] in h
              CHECK(in_p(t.gen) == expect_p);
            }
          }
      }
}

TEST_CASE("involutions are bracket automorphisms", "[involutions]") {
  ck::SeededRng rng(29);
  for (int n : {2, 3, 4})
    for (int m = 1; m <= n; ++m)
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> w(static_cast<std::size_t>(n));
        for (auto& v : w) v = static_cast<double>(rng.next_index(5) - 2);
        const OmegaSignature sig(w);
        for (const auto& g1 : ck::all_generators(n))
          for (const auto& g2 : ck::all_generators(n)) {
            const int s12 = ck::theta_sign(m, g1) * ck::theta_sign(m, g2);
            for (const auto& t : ck::bracket(sig, g1, g2).terms())
              CHECK(ck::theta_sign(m, t.gen) == s12);
          }
      }
}

TEST_CASE("antiinvariant subspace abelianizes under contraction", "[involutions]") {
  for (int n : {2, 3, 4})
    for (int m = 1; m <= n; ++m) {
      std::vector<double> w(static_cast<std::size_t>(n), 1.0);
      w[static_cast<std::size_t>(m - 1)] = 0.0;
      const OmegaSignature sig(w);
      const auto split = ck::cartan_split(sig, m);
      for (const auto& g1 : split.p_generators)
        for (const auto& g2 : split.p_generators)
          CHECK(ck::bracket(sig, g1, g2).is_zero());
    }
}

TEST_CASE("invariant subalgebra signatures", "[involutions]") {
  const OmegaSignature sig({2.0, 3.0, 5.0});
  auto [left, right] = ck::h_subalgebra_signatures(sig, 2);
  REQUIRE(left.has_value());
  REQUIRE(right.has_value());
  CHECK(left->omegas() == std::vector<double>{2.0});
  CHECK(right->omegas() == std::vector<double>{5.0});

  auto [l1, r1] = ck::h_subalgebra_signatures(sig, 1);
  CHECK(!l1.has_value());
  REQUIRE(r1.has_value());
  CHECK(r1->omegas() == std::vector<double>{3.0, 5.0});

  auto [ln, rn] = ck::h_subalgebra_signatures(sig, 3);
  REQUIRE(ln.has_value());
  CHECK(!rn.has_value());
  CHECK(ln->omegas() == std::vector<double>{2.0, 3.0});
}

TEST_CASE("restriction of the Killing form to the invariant subalgebra", "[involutions]") {
  // exactly omega_m = 0: the restriction to h^(m) stays non-degenerate
  for (int n : {3, 4})
    for (int m = 1; m <= n; ++m) {
      std::vector<double> w(static_cast<std::size_t>(n), 1.0);
      w[static_cast<std::size_t>(m - 1)] = 0.0;
      const OmegaSignature sig(w);
      const auto km = ck::killing_matrix(sig);
      const auto split = ck::cartan_split(sig, m);
      const int hdim = static_cast<int>(split.h_generators.size());
      if (hdim == 0) continue;
      ck::Matrix restricted(hdim, hdim);
      for (int i = 0; i < hdim; ++i)
        for (int j = 0; j < hdim; ++j)
          restricted(i, j) = km(ck::lex_index(split.h_generators[static_cast<std::size_t>(i)], n),
                                ck::lex_index(split.h_generators[static_cast<std::size_t>(j)], n));
      CHECK(std::abs(restricted.determinant()) > 1e-9);
    }
}

TEST_CASE("rank of the homogeneous spaces", "[involutions]") {
  CHECK(ck::rank_of_space(4, 2) == 2);
  CHECK(ck::rank_of_space(2, 2) == 1);
  for (int n = 1; n <= 6; ++n) CHECK(ck::rank_of_space(n, 1) == 1);
  CHECK(ck::rank_of_space(5, 3) == 3);
  CHECK_THROWS_AS(ck::rank_of_space(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(ck::rank_of_space(3, 4), std::invalid_argument);
}
