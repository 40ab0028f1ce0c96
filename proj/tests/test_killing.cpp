#include <catch2/catch_amalgamated.hpp>

#include "ck/bracket.hpp"
#include "ck/killing.hpp"
#include "ck/signature.hpp"

using ck::GeneratorIndex;
using ck::Matrix;
using ck::OmegaSignature;

TEST_CASE("one-generator algebra has a vanishing adjoint", "[killing]") {
  const OmegaSignature sig({1.0});
  const auto ad = ck::adjoint_matrix(sig, {0, 1});
  REQUIRE(ad.matrix.rows() == 1);
  CHECK(ad.matrix(0, 0) == 0.0);
  CHECK(ck::killing_form(sig, {0, 1}, {0, 1}) == 0.0);
}

TEST_CASE("adjoint entries follow the bracket table", "[killing]") {
  // N=2, all-plus: [O01,O02] = O12 and [O01,O12] = -O02
  const OmegaSignature sig({1.0, 1.0});
  const auto ad = ck::adjoint_matrix(sig, {0, 1});
  // columns: O01, O02, O12 (lexicographic)
  Matrix expected = Matrix::Zero(3, 3);
  expected(2, 1) = 1.0;   // [O01, O02] = +O12
  expected(1, 2) = -1.0;  // [O01, O12] = -O02
  CHECK(ck::max_abs(Matrix(ad.matrix - expected)) == 0.0);
}

TEST_CASE("adjoint is a representation", "[killing]") {
  ck::SeededRng rng(7);
  for (int n : {2, 3, 4}) {
    const auto gens = ck::all_generators(n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> w(static_cast<std::size_t>(n));
      for (auto& v : w) v = static_cast<double>(rng.next_index(5) - 2);
      const OmegaSignature sig(w);
      for (const auto& g1 : gens)
        for (const auto& g2 : gens) {
          const Matrix a1 = ck::adjoint_matrix(sig, g1).matrix;
          const Matrix a2 = ck::adjoint_matrix(sig, g2).matrix;
          Matrix ad_bracket = Matrix::Zero(a1.rows(), a1.cols());
          for (const auto& t : ck::bracket(sig, g1, g2).terms())
            ad_bracket += t.coeff * ck::adjoint_matrix(sig, t.gen).matrix;
          CHECK(ck::max_abs(Matrix(a1 * a2 - a2 * a1 - ad_bracket)) == 0.0);
        }
    }
  }
}

TEST_CASE("Killing form diagonal values", "[killing]") {
  const OmegaSignature sig({1.0, 1.0});
  CHECK(ck::killing_form(sig, {0, 1}, {0, 1}) == -2.0);
  CHECK(ck::killing_form(sig, {0, 1}, {0, 2}) == 0.0);
  CHECK(ck::killing_form(sig, {0, 2}, {1, 2}) == 0.0);
  // contraction makes the direction degenerate
  const OmegaSignature contracted({0.0, 1.0});
  CHECK(ck::killing_form(contracted, {0, 1}, {0, 1}) == 0.0);
}

TEST_CASE("trace route equals the diagonal closed form", "[killing]") {
  for (int n : {1, 2, 3, 4})
    for (const auto& sig : ck::canonical_signatures(n))
      CHECK(ck::max_abs(Matrix(ck::killing_matrix(sig) - ck::killing_matrix_closed_form(sig))) ==
            0.0);
  // non-integer constants: equality up to rounding
  ck::SeededRng rng(53);
  for (int n : {2, 3, 4})
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> w(static_cast<std::size_t>(n));
      for (auto& v : w) v = rng.next_in(-2.0, 2.0);
      const OmegaSignature sig(w);
      CHECK(ck::max_abs(Matrix(ck::killing_matrix(sig) - ck::killing_matrix_closed_form(sig))) <
            1e-12);
    }
}

TEST_CASE("degenerate subspace for a single vanishing constant", "[killing]") {
  for (int n : {2, 3, 4}) {
    for (int zero_at = 1; zero_at <= n; ++zero_at) {
      for (double other : {1.0, -1.0}) {
        std::vector<double> w(static_cast<std::size_t>(n), other);
        w[static_cast<std::size_t>(zero_at - 1)] = 0.0;
        const OmegaSignature sig(w);
        const Matrix km = ck::killing_matrix(sig);
        for (const auto& g : ck::all_generators(n)) {
          const double diag = km(ck::lex_index(g, n), ck::lex_index(g, n));
          const bool crosses_cut = g.a < zero_at && g.b >= zero_at;
          if (crosses_cut)
            CHECK(diag == 0.0);
          else
            CHECK(std::abs(diag) == 2.0 * (n - 1));
        }
      }
    }
  }
}

TEST_CASE("Killing form vanishing iff some constant vanishes", "[killing]") {
  for (const auto& sig : ck::canonical_signatures(3)) {
    bool any_zero = false;
    for (double v : sig.omegas()) any_zero = any_zero || v == 0.0;
    const Matrix km = ck::killing_matrix(sig);
    const bool singular = std::abs(km.determinant()) < 1e-9;
    CHECK(singular == any_zero);
  }
}

TEST_CASE("ad-invariance of the form", "[killing]") {
  ck::SeededRng rng(117);
  for (int n : {2, 3}) {
    const auto gens = ck::all_generators(n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> w(static_cast<std::size_t>(n));
      for (auto& v : w) v = static_cast<double>(rng.next_index(5) - 2);
      const OmegaSignature sig(w);
      const Matrix km = ck::killing_matrix(sig);
      for (const auto& x : gens)
        for (const auto& y : gens)
          for (const auto& z : gens) {
            double s = 0.0;
            for (const auto& t : ck::bracket(sig, x, y).terms())
              s += t.coeff * km(ck::lex_index(t.gen, n), ck::lex_index(z, n));
            for (const auto& t : ck::bracket(sig, x, z).terms())
              s += t.coeff * km(ck::lex_index(y, n), ck::lex_index(t.gen, n));
            CHECK(s == 0.0);
          }
    }
  }
}
