// Seeded random move sequences and invariant drift detection.
#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "khoreo/bracket.hpp"
#include "khoreo/goeritz.hpp"
#include "khoreo/lee.hpp"
#include "khoreo/moves.hpp"

namespace khoreo {

// Signature of an arbitrary connected diagram: nugatory crossings are
// flattened first so the Goeritz precondition holds in both colorings.
inline int robust_signature(const Diagram& d) {
  Diagram r = reduce_nugatory(d);
  try {
    return goeritz_signature(r, ColoringChoice::as_given);
  } catch (const std::invalid_argument&) {
    return goeritz_signature(r, ColoringChoice::reversed);
  }
}

inline Diagram random_move_walk(const Diagram& seed, std::mt19937_64& rng, int moves,
                                int crossing_budget) {
  Diagram cur = seed;
  for (int step = 0; step < moves; ++step) {
    bool grow = cur.crossing_count() < crossing_budget;
    auto candidates = enumerate_moves(cur, grow, true);
    if (candidates.empty()) break;  // bare unknot with growth forbidden
    const MoveSpec& m = candidates[rng() % candidates.size()];
    cur = apply_reidemeister(cur, m);
  }
  return cur;
}

// Grows a diagram to exactly `crossings` crossings, then shuffles.
inline Diagram random_diagram(const Diagram& seed, std::mt19937_64& rng, int crossings,
                              int shuffle_moves = 6) {
  Diagram cur = seed;
  int guard = 0;
  while (cur.crossing_count() != crossings && guard++ < 400) {
    bool grow = cur.crossing_count() < crossings;
    auto candidates = enumerate_moves(cur, grow, !grow);
    if (candidates.empty()) break;
    cur = apply_reidemeister(cur, candidates[rng() % candidates.size()]);
  }
  return random_move_walk(cur, rng, shuffle_moves, crossings);
}

struct FuzzOptions {
  std::uint64_t seed = 42;
  int moves = 30;
  int runs = 1;
  int extra_crossings = 4;  // growth budget above the seed
  bool check_lee = true;
  bool check_signature = true;
};

struct DriftReport {
  int runs = 0;
  int drift_events = 0;
  std::vector<std::string> messages;
};

// Applies `runs` random move sequences to the seed and compares Khovanov
// polynomial, Lee dimensions, and signature before and after each.
inline DriftReport fuzz_invariants(const Diagram& seed, const FuzzOptions& opt) {
  DriftReport rep;
  auto base_kh = kh_polynomial(homology_table(seed, khovanov_frobenius()));
  LeeTable base_lee;
  if (opt.check_lee) base_lee = lee_homology(seed);
  int base_sig = 0;
  if (opt.check_signature) base_sig = robust_signature(seed);

  std::mt19937_64 rng(opt.seed);
  int budget = seed.crossing_count() + opt.extra_crossings;
  for (int run = 0; run < opt.runs; ++run) {
    ++rep.runs;
    Diagram moved = random_move_walk(seed, rng, opt.moves, budget);
    std::ostringstream drift;
    if (moved.component_count() != seed.component_count())
      drift << " component count changed;";
    if (kh_polynomial(homology_table(moved, khovanov_frobenius())) != base_kh)
      drift << " kh polynomial drifted;";
    if (opt.check_lee && !(lee_homology(moved) == base_lee)) drift << " lee table drifted;";
    if (opt.check_signature && robust_signature(moved) != base_sig)
      drift << " signature drifted;";
    if (!drift.str().empty()) {
      ++rep.drift_events;
      rep.messages.push_back("run " + std::to_string(run) + " (" + moved.pd_text() +
                             "):" + drift.str());
    }
  }
  return rep;
}

}  // namespace khoreo
