// Bracket oracle, signatures, thinness, and the pairing decomposition.
#include <catch2/catch_amalgamated.hpp>

#include "khoreo/braid.hpp"
#include "khoreo/bracket.hpp"
#include "khoreo/goeritz.hpp"
#include "khoreo/lee.hpp"
#include "khoreo/thinness.hpp"
#include "khoreo/verify.hpp"

using namespace khoreo;

static const char* kTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
static const char* kHopfPos = "PD[X[1,3,2,4],X[3,1,4,2]]";
static const char* kHopfNeg = "PD[X[4,1,3,2],X[2,3,1,4]]";

TEST_CASE("bracket oracle fixed values") {
  LaurentPoly unknot;
  unknot.add(-1, 1);
  unknot.add(1, 1);
  CHECK(jones_bracket(Diagram::parse("PD[U]")) == unknot);

  // (q^-1+q) V of the lefthanded trefoil under sqrt(t) = -q
  LaurentPoly tre;
  tre.add(-9, -1);
  tre.add(-5, 1);
  tre.add(-3, 1);
  tre.add(-1, 1);
  CHECK(jones_bracket(Diagram::parse(kTrefoil)) == tre);

  // negative Hopf link: V = -t^{-1/2} - t^{-5/2}
  LaurentPoly hopf;
  hopf.add(-6, 1);
  hopf.add(-4, 1);
  hopf.add(-2, 1);
  hopf.add(0, 1);
  CHECK(jones_bracket(Diagram::parse(kHopfNeg)) == hopf);
}

TEST_CASE("bracket is multiplicative over disjoint unions") {
  Diagram t = Diagram::parse(kTrefoil);
  Diagram h = Diagram::parse(kHopfNeg);
  CHECK(jones_bracket(Diagram::disjoint_union(t, h)) ==
        jones_bracket(t) * jones_bracket(h));
}

TEST_CASE("graded euler characteristic equals the bracket") {
  for (Diagram d : {Diagram::parse(kTrefoil), Diagram::parse(kHopfPos),
                    Diagram::parse(kHopfNeg), Diagram::parse("PD[U]"),
                    braid_closure(3, {1, -2, 1, -2}), braid_closure(2, {1, 1, 1, 1}),
                    braid_closure(3, {1, 2, 1, 2}), braid_closure(3, {1, -2, 1, -2, 1, -2})}) {
    CHECK(verify_jones(d));
  }
}

TEST_CASE("goeritz signature of the trefoil") {
  Diagram d = Diagram::parse(kTrefoil);
  // independent of the coloring and of the dropped white region
  for (auto choice : {ColoringChoice::as_given, ColoringChoice::reversed}) {
    FaceColoring fc = faces_and_coloring(d);
    auto gd = goeritz_data(d, fc, choice == ColoringChoice::reversed);
    for (int drop = 0; drop < int(gd.white_faces.size()); ++drop) {
      gd.dropped = drop;
      CHECK(goeritz_signature_from(gd) == 2);
    }
  }
  CHECK(alternating_signature(d) == 2);
  CHECK(goeritz_signature(d.mirrored()) == -2);
  CHECK(alternating_signature(d.mirrored()) == -2);
}

TEST_CASE("reversed coloring of a reduced alternating diagram has eta = 1") {
  Diagram d = Diagram::parse(kTrefoil);
  FaceColoring fc = faces_and_coloring(d);
  REQUIRE(fc.all_pattern_a);
  auto gd = goeritz_data(d, fc, /*reversed_coloring=*/true);
  auto [x, y] = d.crossing_counts();
  for (int e : gd.eta) CHECK(e == 1);
  CHECK(gd.mu == y);
}

TEST_CASE("signatures of small links") {
  // figure-eight is amphichiral
  Diagram f8 = braid_closure(3, {1, -2, 1, -2});
  CHECK(alternating_signature(f8) == 0);
  CHECK(goeritz_signature(f8) == 0);
  CHECK(goeritz_signature(f8, ColoringChoice::reversed) == 0);

  // positive Hopf link: o = 2, y = 2
  Diagram hp = Diagram::parse(kHopfPos);
  CHECK(alternating_signature(hp) == -1);
  CHECK(goeritz_signature(hp) == -1);
  CHECK(alternating_signature(Diagram::parse(kHopfNeg)) == 1);

  CHECK(alternating_signature(Diagram::parse("PD[U]")) == 0);

  // torus knot closure of (s1 s2)^4 has signature -6
  Diagram t34 = braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2});
  CHECK(goeritz_signature(t34) == -6);
  CHECK(goeritz_signature(t34, ColoringChoice::reversed) == -6);
}

TEST_CASE("alternating formula agrees with goeritz on alternating diagrams") {
  for (Diagram d : {Diagram::parse(kTrefoil), Diagram::parse(kHopfPos),
                    braid_closure(3, {1, -2, 1, -2}), braid_closure(2, {1, 1, 1, 1, 1}),
                    braid_closure(3, {1, 1, -2, 1, -2, -2})}) {
    auto flags = classify(d);
    REQUIRE(flags.alternating);
    REQUIRE(flags.reduced);
    REQUIRE(flags.nonsplit);
    int s = alternating_signature(d);
    CHECK(goeritz_signature(d, ColoringChoice::as_given) == s);
    CHECK(goeritz_signature(d, ColoringChoice::reversed) == s);
    CHECK(alternating_signature(d.mirrored()) == -s);
  }
}

TEST_CASE("thinness of the trefoil table") {
  auto t = homology_table(Diagram::parse(kTrefoil), khovanov_frobenius());
  ThinnessReport rep = thinness_report(t, 2);
  CHECK(rep.is_thin);
  CHECK(rep.corners_ok);
  CHECK(rep.top == std::make_pair(-3, -9));
  CHECK(rep.bottom == std::make_pair(0, -1));
  CHECK(rep.corner_coeffs == std::make_pair(std::size_t(1), std::size_t(1)));
}

TEST_CASE("thinness of the unknot") {
  auto t = homology_table(Diagram::parse("PD[U]"), khovanov_frobenius());
  ThinnessReport rep = thinness_report(t, 0);
  CHECK(rep.is_thin);
  CHECK(rep.corners_ok);
  CHECK(rep.top == std::make_pair(0, -1));
  CHECK(rep.bottom == std::make_pair(0, 1));
}

TEST_CASE("a nonalternating torus knot is not thin") {
  Diagram t34 = braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2});
  auto t = homology_table(t34, khovanov_frobenius());
  ThinnessReport rep = thinness_report(t, goeritz_signature(t34));
  CHECK_FALSE(rep.is_thin);
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("pairing decomposition of the trefoil") {
  Diagram d = Diagram::parse(kTrefoil);
  auto p = kh_polynomial(homology_table(d, khovanov_frobenius()));
  auto res = pairing_decompose(p, 2, d.linking_matrix(), 1);
  REQUIRE(res.ok);
  LaurentPoly expect;
  expect.add(-3, 1);
  CHECK(res.kh_prime == expect);
  // the knot exceptional term is exactly q^-sigma (q^-1 + q)
  CHECK(res.exceptional == std::map<int, std::size_t>{{0, 1}});
}

TEST_CASE("pairing decomposition of the unknot") {
  Diagram u = Diagram::parse("PD[U]");
  auto p = kh_polynomial(homology_table(u, khovanov_frobenius()));
  auto res = pairing_decompose(p, 0, u.linking_matrix(), 1);
  REQUIRE(res.ok);
  CHECK(res.kh_prime.is_zero());
}

TEST_CASE("pairing decomposition of the hopf links") {
  for (const char* pd : {kHopfPos, kHopfNeg}) {
    Diagram d = Diagram::parse(pd);
    int sigma = alternating_signature(d);
    auto p = kh_polynomial(homology_table(d, khovanov_frobenius()));
    auto res = pairing_decompose(p, sigma, d.linking_matrix(), 2);
    REQUIRE(res.ok);
    CHECK(res.kh_prime.is_zero());
    // exceptional part degrees match the lee prediction
    LeeTable lee = predicted_lee_table(d.linking_matrix(), 2);
    std::map<int, std::size_t> halved;
    for (auto& [i, v] : lee.dims) halved[i] = v / 2;
    CHECK(res.exceptional == halved);
  }
}

TEST_CASE("pairing fails off the diagonals") {
  Diagram t34 = braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2});
  auto p = kh_polynomial(homology_table(t34, khovanov_frobenius()));
  auto res = pairing_decompose(p, goeritz_signature(t34), t34.linking_matrix(), 1);
  CHECK_FALSE(res.ok);
  CHECK_FALSE(res.reason.empty());
}

TEST_CASE("property suite passes on small inputs") {
  for (Diagram d : {Diagram::parse(kTrefoil), Diagram::parse(kHopfPos),
                    braid_closure(3, {1, -2, 1, -2}), Diagram::parse("PD[U]")}) {
    for (const auto& r : verify_properties(d)) {
      INFO(r.name << " " << r.detail);
      CHECK(r.pass);
    }
  }
}
