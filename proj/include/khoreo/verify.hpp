// The per-diagram property suite: every structural theorem the library can
// machine-check on a concrete input.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "khoreo/bracket.hpp"
#include "khoreo/fuzz.hpp"
#include "khoreo/goeritz.hpp"
#include "khoreo/lee.hpp"
#include "khoreo/moves.hpp"
#include "khoreo/thinness.hpp"

namespace khoreo {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline Diagram reorder_crossings(const Diagram& d, int rotate_by) {
  std::vector<std::array<ArcId, 4>> tuples;
  int c = d.crossing_count();
  for (int i = 0; i < c; ++i) tuples.push_back(d.crossing((i + rotate_by) % c).a);
  std::vector<std::pair<ArcId, ArcId>> hints;
  for (const Component& comp : d.components())
    for (std::size_t k = 0; k + 1 < comp.arcs.size(); ++k)
      hints.emplace_back(comp.arcs[k], comp.arcs[k + 1]);
  return Diagram::from_tuples(tuples, d.unknot_components(), hints);
}

inline bool anticommute(const KhovanovComplex& a, const KhovanovComplex& b, int i) {
  auto p = a.differential(i + 1).multiply(b.differential(i));
  auto q = b.differential(i + 1).multiply(a.differential(i));
  std::vector<std::tuple<int, int, Rational>> trip;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (const auto& [c, v] : p.row(r)) trip.emplace_back(int(r), c, v);
    for (const auto& [c, v] : q.row(r)) trip.emplace_back(int(r), c, v);
  }
  return SparseRationalMatrix::from_triplets(p.rows(), p.cols(), trip).is_zero();
}

}  // namespace detail

inline std::vector<PropertyResult> verify_properties(const Diagram& d,
                                                     int max_crossings = kDefaultCrossingCap,
                                                     int jobs = 0) {
  std::vector<PropertyResult> out;
  auto push = [&](const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, pass, detail});
  };
  auto guard = [&](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      push(name, false, e.what());
    }
  };

  const int n = d.component_count();
  const int c = d.crossing_count();
  DiagramFlags flags = classify(d);

  guard("frobenius_axioms", [&] {
    bool ok = verify_axioms(khovanov_frobenius()).all_pass() &&
              verify_axioms(lee_phi_frobenius()).all_pass() &&
              verify_axioms(lee_total_frobenius()).all_pass();
    push("frobenius_axioms", ok);
  });
  guard("phi_anticommutation_identities", [&] {
    push("phi_anticommutation_identities", verify_phi_anticommutation().all_pass());
  });

  guard("d_squared_zero", [&] {
    for (const FrobeniusData* f :
         {&khovanov_frobenius(), &lee_phi_frobenius(), &lee_total_frobenius()})
      KhovanovComplex(d, *f, max_crossings).assert_d_squared_zero();
    push("d_squared_zero", true);
  });
  guard("phi_d_anticommute", [&] {
    KhovanovComplex kc(d, khovanov_frobenius(), max_crossings);
    KhovanovComplex pc(d, lee_phi_frobenius(), max_crossings);
    bool ok = true;
    for (int i = 0; i + 2 <= c; ++i) ok = ok && detail::anticommute(kc, pc, i);
    push("phi_d_anticommute", ok);
  });

  BigradedTable table = homology_table(d, khovanov_frobenius(), max_crossings, jobs);

  guard("jones_euler_characteristic", [&] {
    push("jones_euler_characteristic",
         kh_polynomial(table).at_t_minus_one() == jones_bracket(d, max_crossings));
  });

  guard("mod2_support", [&] {
    bool ok = true;
    for (auto& [k, v] : table.ranks) ok = ok && ((k.second - n) % 2 == 0);
    push("mod2_support", ok);
  });

  guard("mirror_duality", [&] {
    auto mt = homology_table(d.mirrored(), khovanov_frobenius(), max_crossings, jobs);
    push("mirror_duality", mt == table.reflected());
  });

  guard("ordering_invariance", [&] {
    bool ok = true;
    for (int r = 1; r < std::min(3, c); ++r)
      ok = ok && homology_table(detail::reorder_crossings(d, r), khovanov_frobenius(),
                                max_crossings, jobs) == table;
    push("ordering_invariance", ok);
  });

  guard("lee_dimension_2n", [&] {
    LeeTable lee = lee_homology(d, max_crossings, jobs);
    std::ostringstream detail;
    detail << "total " << lee.total() << " vs " << (std::size_t(1) << n);
    push("lee_dimension_2n", lee.total() == (std::size_t(1) << n), detail.str());
  });
  guard("lee_route_agreement", [&] {
    push("lee_route_agreement", lee_unshifted_dims(d, max_crossings, jobs) ==
                                    lee_unshifted_dims_via_sum(d, max_crossings, jobs));
  });
  guard("lee_degree_placement", [&] {
    push("lee_degree_placement", lee_homology(d, max_crossings, jobs) ==
                                     predicted_lee_table(d.linking_matrix(), n));
  });

  guard("canonical_generators", [&] {
    KhovanovComplex cx(d, lee_total_frobenius(), max_crossings);
    std::map<int, std::vector<int>> by_degree;
    bool ok = true;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      auto e = OrientationSubset::from_mask(mask, n);
      for (auto side : {GeneratorSide::plus, GeneratorSide::minus}) {
        CanonicalGenerator g = canonical_generator(d, e, side);
        int idx = cx.basis(g.i_bar).index_of(g.state, g.ab_labeling);
        by_degree[g.i_bar].push_back(idx);
        if (g.i_bar < cx.top_degree()) {
          const auto& m = cx.differential(g.i_bar);
          for (std::size_t r = 0; r < m.rows() && ok; ++r)
            for (const auto& [col, v] : m.row(r))
              if (col == idx) ok = false;  // not a cycle
        }
      }
    }
    for (auto& [i_bar, gens] : by_degree) {
      IncrementalSpan span(cx.basis(i_bar).total);
      if (i_bar > 0) {
        const auto& m = cx.differential(i_bar - 1);
        for (std::size_t col = 0; col < m.cols(); ++col) span.insert(m.dense_column(col));
      }
      for (int idx : gens) {
        std::vector<Rational> v(cx.basis(i_bar).total, Rational(0));
        v[idx] = 1;
        if (!span.insert(v)) ok = false;  // class dependent on earlier ones
      }
    }
    push("canonical_generators", ok);
  });

  if (flags.alternating && flags.nonsplit && flags.reduced) {
    guard("signature_formulas_agree", [&] {
      int s = alternating_signature(d);
      bool ok = goeritz_signature(d, ColoringChoice::as_given) == s &&
                goeritz_signature(d, ColoringChoice::reversed) == s;
      push("signature_formulas_agree", ok, "sigma = " + std::to_string(s));
    });

    guard("box_support", [&] {
      auto [x, y] = d.crossing_counts();
      int o = o_count(d);
      bool ok = true;
      for (auto& [k, v] : table.ranks) {
        int ib = k.first + x, jb = k.second + 2 * x - y;
        ok = ok && 0 <= ib && ib <= c && -o <= jb && jb <= 2 * c - o + 2;
      }
      ok = ok && table.rank(0 - x, -o - 2 * x + y) == 1 &&
           table.rank(c - x, 2 * c - o + 2 - 2 * x + y) == 1;
      push("box_support", ok);
    });

    guard("black_disk_structure", [&] {
      FaceColoring fc = faces_and_coloring(d);
      bool ok = fc.all_pattern_a;
      int black = 0;
      for (bool b : fc.black) black += b ? 1 : 0;
      ok = ok && black == o_count(d);
      // traces never join a black disk to itself, and the disks chain up
      std::map<int, int> rep;
      for (int f = 0; f < int(fc.black.size()); ++f)
        if (fc.black[f]) rep[f] = f;
      std::function<int(int)> find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
      };
      for (int i = 0; i < c; ++i) {
        int b0 = fc.corner_face[i][0], b2 = fc.corner_face[i][2];
        if (!fc.black[b0] || !fc.black[b2] || b0 == b2) {
          ok = false;
          break;
        }
        rep[find(b0)] = find(b2);
      }
      if (ok && c > 0) {
        int root = -1;
        for (auto& [f, r] : rep) {
          int fr = find(f);
          if (root < 0) root = fr;
          ok = ok && fr == root;
        }
      }
      push("black_disk_structure", ok);
    });

    guard("thinness", [&] {
      ThinnessReport rep = thinness_report(table, alternating_signature(d));
      push("thinness", rep.is_thin && rep.corners_ok);
    });

    guard("pairing_decomposition", [&] {
      auto res = pairing_decompose(kh_polynomial(table), alternating_signature(d),
                                   d.linking_matrix(), n);
      push("pairing_decomposition", res.ok, res.reason);
    });

    guard("phi_quotient_equals_lee", [&] {
      PhiHomologyReport rep = phi_on_homology(d, max_crossings);
      std::size_t lee = lee_homology(d, max_crossings, jobs).total();
      std::ostringstream detail;
      detail << "ker/im " << rep.total_ker_mod_im << " vs lee " << lee;
      push("phi_quotient_equals_lee", rep.total_ker_mod_im == lee, detail.str());
    });
  }

  return out;
}

}  // namespace khoreo
