// Lee homology, canonical generators, and the induced endomorphism.
#include <catch2/catch_amalgamated.hpp>

#include "khoreo/braid.hpp"
#include "khoreo/lee.hpp"

using namespace khoreo;

static const char* kTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
static const char* kHopfPos = "PD[X[1,3,2,4],X[3,1,4,2]]";
static const char* kHopfNeg = "PD[X[4,1,3,2],X[2,3,1,4]]";

TEST_CASE("lee homology of small links") {
  LeeTable u = lee_homology(Diagram::parse("PD[U]"));
  CHECK(u.dims == std::map<int, std::size_t>{{0, 2}});

  LeeTable t = lee_homology(Diagram::parse(kTrefoil));
  CHECK(t.total() == 2);

  LeeTable hp = lee_homology(Diagram::parse(kHopfPos));
  CHECK(hp.dims == std::map<int, std::size_t>{{0, 2}, {2, 2}});

  LeeTable hn = lee_homology(Diagram::parse(kHopfNeg));
  CHECK(hn.dims == std::map<int, std::size_t>{{0, 2}, {-2, 2}});
}

TEST_CASE("both computation routes agree") {
  for (Diagram d : {Diagram::parse(kTrefoil), Diagram::parse(kHopfPos),
                    braid_closure(3, {1, -2, 1, -2}), braid_closure(3, {1, 1, -2})}) {
    CHECK(lee_unshifted_dims(d) == lee_unshifted_dims_via_sum(d));
  }
}

TEST_CASE("predicted lee tables") {
  std::vector<std::vector<Rational>> l1{{Rational(0)}};
  CHECK(predicted_lee_table(l1, 1).dims == std::map<int, std::size_t>{{0, 2}});

  std::vector<std::vector<Rational>> l2{{Rational(0), Rational(1)},
                                        {Rational(1), Rational(0)}};
  CHECK(predicted_lee_table(l2, 2).dims == std::map<int, std::size_t>{{0, 2}, {2, 2}});

  std::vector<std::vector<Rational>> l3(3, std::vector<Rational>(3, Rational(0)));
  CHECK(predicted_lee_table(l3, 3).dims == std::map<int, std::size_t>{{0, 8}});
}

TEST_CASE("lee dimension is 2^n and matches the prediction") {
  struct Case {
    Diagram d;
    int n;
  };
  std::vector<Case> cases;
  cases.push_back({Diagram::parse(kTrefoil), 1});
  cases.push_back({braid_closure(3, {1, -2, 1, -2}), 1});
  cases.push_back({Diagram::parse(kHopfPos), 2});
  cases.push_back({Diagram::parse(kHopfNeg), 2});
  cases.push_back({braid_closure(3, {1, -2, 1, -2, 1, -2}), 3});  // borromean rings
  cases.push_back({braid_closure(3, {1, 1, -2, -2}), 3});         // three-link chain

  for (auto& [d, n] : cases) {
    REQUIRE(d.component_count() == n);
    LeeTable actual = lee_homology(d);
    CHECK(actual.total() == std::size_t(1) << n);
    CHECK(actual == predicted_lee_table(d.linking_matrix(), n));
  }
}

TEST_CASE("lee dimensions over reversed orientations") {
  Diagram d = Diagram::parse(kHopfPos);
  Diagram r = d.reoriented({1});
  LeeTable t = lee_homology(r);
  CHECK(t.total() == 4);
  CHECK(t == predicted_lee_table(r.linking_matrix(), 2));
  // reversal flips the linking number, so the nonzero degree moves
  CHECK(t.dims == std::map<int, std::size_t>{{0, 2}, {-2, 2}});
}

TEST_CASE("canonical generators are cycles spanning the right degrees") {
  for (Diagram d : {Diagram::parse(kTrefoil), Diagram::parse(kHopfPos),
                    braid_closure(3, {1, -2, 1, -2, 1, -2})}) {
    int n = d.component_count();
    KhovanovComplex cx(d, lee_total_frobenius());

    std::map<int, std::vector<int>> by_degree;  // i_bar -> generator indices
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      auto e = OrientationSubset::from_mask(mask, n);
      for (auto side : {GeneratorSide::plus, GeneratorSide::minus}) {
        CanonicalGenerator g = canonical_generator(d, e, side);
        int idx = cx.basis(g.i_bar).index_of(g.state, g.ab_labeling);
        by_degree[g.i_bar].push_back(idx);

        // a cycle: its column of the differential is empty
        if (g.i_bar < cx.top_degree()) {
          const auto& m = cx.differential(g.i_bar);
          for (std::size_t r = 0; r < m.rows(); ++r)
            for (const auto& [c, v] : m.row(r)) REQUIRE(c != idx);
        }
      }
    }

    // classes are independent in homology: they extend the boundary span
    for (auto& [i_bar, gens] : by_degree) {
      int dim = cx.basis(i_bar).total;
      IncrementalSpan span(dim);
      if (i_bar > 0) {
        const auto& m = cx.differential(i_bar - 1);
        for (std::size_t c = 0; c < m.cols(); ++c) span.insert(m.dense_column(c));
      }
      for (int idx : gens) {
        std::vector<Rational> v(dim, Rational(0));
        v[idx] = 1;
        CHECK(span.insert(v));
      }
    }
  }
}

TEST_CASE("canonical generator degrees for the trefoil") {
  Diagram d = Diagram::parse(kTrefoil);
  CanonicalGenerator g = canonical_generator(d, {}, GeneratorSide::plus);
  CHECK(g.i_shifted == 0);  // x'(D) - x(D) = 0 for the given orientation
  CanonicalGenerator h = canonical_generator(d, {}, GeneratorSide::minus);
  CHECK(h.ab_labeling == (~g.ab_labeling & ((1u << 2) - 1)));
}

TEST_CASE("unknot canonical generators are a and b") {
  Diagram u = Diagram::parse("PD[U]");
  auto p = canonical_generator(u, {}, GeneratorSide::plus);
  auto m = canonical_generator(u, {}, GeneratorSide::minus);
  CHECK(p.i_bar == 0);
  CHECK(p.ab_labeling == 0u);
  CHECK(m.ab_labeling == 1u);
}

TEST_CASE("sum and difference of paired generators sort by q mod 4") {
  for (Diagram d : {Diagram::parse(kTrefoil), Diagram::parse(kHopfPos)}) {
    auto gp = canonical_generator(d, {}, GeneratorSide::plus);
    auto gm = canonical_generator(d, {}, GeneratorSide::minus);
    Resolution res = resolve(d, gp.state);
    int nc = res.n_circles();
    int i_bar = gp.i_bar;

    auto qdeg = [&](std::uint32_t mask) {
      int deg = 0;
      for (int t = 0; t < nc; ++t) deg += ((mask >> t) & 1u) ? -1 : 1;
      return deg + i_bar;
    };

    std::map<std::uint32_t, int> sum, diff;
    for (auto& [mask, c] : expand_ab_labeling(gp.ab_labeling, nc)) {
      sum[mask] += c;
      diff[mask] += c;
    }
    for (auto& [mask, c] : expand_ab_labeling(gm.ab_labeling, nc)) {
      sum[mask] += c;
      diff[mask] -= c;
    }

    int sum_mod = -1, diff_mod = -1;
    for (auto& [mask, c] : sum) {
      if (c == 0) continue;
      int m4 = ((qdeg(mask) % 4) + 4) % 4;
      if (sum_mod < 0) sum_mod = m4;
      CHECK(m4 == sum_mod);
    }
    for (auto& [mask, c] : diff) {
      if (c == 0) continue;
      int m4 = ((qdeg(mask) % 4) + 4) % 4;
      if (diff_mod < 0) diff_mod = m4;
      CHECK(m4 == diff_mod);
    }
    CHECK(((sum_mod - diff_mod) % 4 + 4) % 4 == 2);
  }
}

TEST_CASE("phi on trefoil homology") {
  PhiHomologyReport rep = phi_on_homology(Diagram::parse(kTrefoil));
  CHECK(rep.h_dim.size() == 4);
  REQUIRE(rep.phi_rank.size() == 1);
  CHECK(rep.phi_rank.begin()->first == std::make_pair(-3, -9));
  CHECK(rep.phi_rank.begin()->second == 1);
  CHECK(rep.total_ker_mod_im == 2);
  CHECK(rep.total_ker_mod_im == lee_homology(Diagram::parse(kTrefoil)).total());
}

TEST_CASE("phi on the unknot is zero") {
  PhiHomologyReport rep = phi_on_homology(Diagram::parse("PD[U]"));
  CHECK(rep.phi_rank.empty());
  CHECK(rep.total_ker_mod_im == 2);
}

TEST_CASE("phi quotient matches lee dimension on thin links") {
  for (Diagram d : {Diagram::parse(kHopfPos), braid_closure(3, {1, -2, 1, -2})}) {
    PhiHomologyReport rep = phi_on_homology(d);
    CHECK(rep.total_ker_mod_im == lee_homology(d).total());
  }
}
