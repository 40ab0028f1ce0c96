#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ck/catalog_io.hpp"
#include "ck/classify.hpp"
#include "ck/rank_one.hpp"
#include "ck/rank_two.hpp"
#include "ck/signature.hpp"
#include "ck/vector_rep.hpp"

using ck::OmegaSignature;

TEST_CASE("semisimple signatures decompose as a single factor", "[classify]") {
  const auto so3 = ck::classify_group(OmegaSignature({1.0, 1.0}));
  CHECK(so3.structure == "SO(3)");
  CHECK(so3.alias.empty());
  REQUIRE(so3.pq_counts.size() == 1);
  CHECK(so3.pq_counts[0] == std::pair<int, int>(3, 0));

  const auto lorentz = ck::classify_group(OmegaSignature({-1.0, 1.0}));
  CHECK(lorentz.structure == "SO(2,1)");
  CHECK(lorentz.pq_counts[0] == std::pair<int, int>(1, 2));
}

TEST_CASE("inhomogeneous aliases", "[classify]") {
  const auto euclid = ck::classify_group(OmegaSignature({0.0, 1.0, 1.0}));
  CHECK(euclid.structure == "T_3 ⊙ SO(3)");
  CHECK(euclid.alias == "ISO(3)");

  const auto poincare = ck::classify_group(OmegaSignature({0.0, -1.0, 1.0, 1.0}));
  CHECK(poincare.alias == "ISO(3,1)");
  CHECK(poincare.structure == "T_4 ⊙ SO(3,1)");

  // the sign pattern (0,+,...,+,-) reproduces the same group
  const auto poincare2 = ck::classify_group(OmegaSignature({0.0, 1.0, 1.0, -1.0}));
  CHECK(poincare2.alias == "ISO(3,1)");

  const auto galilei = ck::classify_group(OmegaSignature({0.0, 0.0, 1.0, 1.0}));
  CHECK(galilei.alias == "IISO(3)");
  CHECK(galilei.structure == "T_4 ⊙ (T_3 ⊙ SO(3))");
}

TEST_CASE("interior contractions give two rotation factors", "[classify]") {
  const auto nh = ck::classify_group(OmegaSignature({1.0, 0.0, 1.0, 1.0}));
  // T_{2N-2} with the larger factor printed first
  CHECK(nh.structure == "T_6 ⊙ (SO(3) ⊗ SO(2))");
  CHECK(nh.alias.empty());
  REQUIRE(nh.pq_counts.size() == 2);
  CHECK(nh.pq_counts[0] == std::pair<int, int>(3, 0));
  CHECK(nh.pq_counts[1] == std::pair<int, int>(2, 0));

  const auto expanding = ck::classify_group(OmegaSignature({-1.0, 0.0, 1.0, 1.0}));
  CHECK(expanding.structure == "T_6 ⊙ (SO(3) ⊗ SO(1,1))");

  // a trailing zero leaves only the left factor
  const auto tail = ck::classify_group(OmegaSignature({1.0, 0.0}));
  CHECK(tail.structure == "T_2 ⊙ SO(2)");
}

TEST_CASE("flag space", "[classify]") {
  const auto flag = ck::classify_group(OmegaSignature({0.0, 0.0, 0.0}));
  CHECK(flag.alias == "IIISO(1)");
  CHECK(flag.structure == "T_3 ⊙ (T_2 ⊙ (T_1 ⊙ SO(1)))");
  CHECK(ck::classify_group(OmegaSignature({0.0})).alias == "ISO(1)");
}

TEST_CASE("catalog names for the rank-one table", "[classify]") {
  auto entry = ck::space_name_rank1(OmegaSignature({1.0, 1.0, 1.0}));
  REQUIRE(entry.has_value());
  CHECK(entry->name == "Elliptic Space");
  CHECK(entry->coset == "SO(N+1)/SO(N)");

  entry = ck::space_name_rank1(OmegaSignature({0.0, 0.0, 1.0, 1.0}));
  REQUIRE(entry.has_value());
  CHECK(entry->name == "Galilean Spacetime");
  CHECK(entry->coset == "IISO(N-1)/ISO(N-1)");
  CHECK(entry->foliated);

  entry = ck::space_name_rank1(OmegaSignature({-1.0, -1.0, 1.0}));
  REQUIRE(entry.has_value());
  CHECK(entry->name == "DeSitter Spacetime");

  // the relativistic scaling omega_2 = -1/c^2 matches on sign
  entry = ck::space_name_rank1(OmegaSignature({0.0, -1.0 / 9.0e16, 1.0, 1.0}));
  REQUIRE(entry.has_value());
  CHECK(entry->name == "Minkowskian Spacetime");

  CHECK(!ck::space_name_rank1(OmegaSignature({1.0, 1.0, -1.0})).has_value());
  CHECK(!ck::space_name_rank1(OmegaSignature({1.0})).has_value());
}

TEST_CASE("catalog names for the rank-two table", "[classify]") {
  auto entry = ck::space_name_rank2(OmegaSignature({0.0, 1.0, 1.0}));
  REQUIRE(entry.has_value());
  CHECK(entry->name == "Euclidean line-space");
  CHECK(entry->curvature == "Positive");
  CHECK(entry->foliated);
  CHECK(entry->base == "S^{[+]+,+}");
  CHECK(entry->fiber == "S^{[0]+,+}");

  entry = ck::space_name_rank2(OmegaSignature({1.0, 0.0, 1.0}));
  REQUIRE(entry.has_value());
  CHECK(entry->name == "Oscillating NH Phase Space");
  CHECK(entry->curvature == "Zero");
  CHECK(!entry->foliated);

  entry = ck::space_name_rank2(OmegaSignature({0.0, -1.0, 1.0}));
  REQUIRE(entry.has_value());
  CHECK(entry->name == "Minkowskian Phase Space");
  CHECK(entry->curvature == "Negative");
  CHECK(entry->foliated);

  CHECK(!ck::space_name_rank2(OmegaSignature({1.0, 1.0})).has_value());
}

TEST_CASE("catalog is consistent with the computed geometry", "[classify]") {
  const auto sign_of = [](double v) { return v > 0 ? '+' : (v < 0 ? '-' : '0'); };
  for (const auto& e : ck::catalog_entries()) {
    std::vector<double> w(4, 1.0);
    w[0] = e.omega1_sign == '+' ? 1.0 : (e.omega1_sign == '-' ? -1.0 : 0.0);
    w[1] = e.omega2_sign == '+' ? 1.0 : (e.omega2_sign == '-' ? -1.0 : 0.0);
    const OmegaSignature sig(w);

    if (e.rank == 1) {
      // curvature column tracks omega_1, foliation tracks omega_2
      CHECK(e.curvature == (sign_of(w[0]) == '+'   ? "Positive"
                            : sign_of(w[0]) == '-' ? "Negative"
                                                   : "Zero"));
      CHECK(e.foliated == !ck::foliation_report_rank1(sig).empty());
      const auto named = ck::space_name_rank1(sig);
      REQUIRE(named.has_value());
      CHECK(named->name == e.name);
    } else {
      // curvature column tracks omega_2, foliation tracks omega_1
      CHECK(e.curvature == (sign_of(w[1]) == '+'   ? "Positive"
                            : sign_of(w[1]) == '-' ? "Negative"
                                                   : "Zero"));
      CHECK(e.foliated == !ck::foliation_report_rank2(sig).empty());
      const auto named = ck::space_name_rank2(sig);
      REQUIRE(named.has_value());
      CHECK(named->name == e.name);
    }
  }
}

TEST_CASE("signature counts match the ambient form inertia", "[classify]") {
  for (const auto& sig : ck::canonical_signatures(4)) {
    bool nondeg = true;
    for (double v : sig.omegas()) nondeg = nondeg && v != 0.0;
    if (!nondeg) continue;
    const auto rec = ck::classify_group(sig);
    REQUIRE(rec.pq_counts.size() == 1);
    const ck::Matrix lambda = ck::invariant_form_rank1(sig);
    int p = 0, q = 0;
    for (int i = 0; i < lambda.rows(); ++i) (lambda(i, i) > 0 ? p : q) += 1;
    CHECK(rec.pq_counts[0] == std::pair<int, int>(p, q));
  }
}

TEST_CASE("shipped catalog file matches the computed entries byte for byte", "[classify]") {
  const std::string shipped = ck::read_file_text(CK_CATALOG_FILE);
  CHECK(shipped == ck::catalog_file_text());
  // and it parses back into the same entries
  std::istringstream in(shipped);
  const auto parsed = ck::parse_catalog(in);
  REQUIRE(parsed.size() == ck::catalog_entries().size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(ck::catalog_line(parsed[i]) == ck::catalog_line(ck::catalog_entries()[i]));
  }
}
