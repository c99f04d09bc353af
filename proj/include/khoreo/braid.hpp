// Braid words and their trace closures as PD diagrams.
#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "khoreo/diagram.hpp"

namespace khoreo {

// Letter +k is sigma_k (the strand entering at position k+1 passes over,
// giving a positive crossing); -k is its inverse.  Strands run downward and
// are closed off position-to-position.
inline Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid_closure: need a strand");

  int next_label = 1;
  std::vector<int> initial(strands + 1), cur(strands + 1);
  for (int i = 1; i <= strands; ++i) initial[i] = cur[i] = next_label++;

  std::vector<std::array<ArcId, 4>> tuples;
  for (int letter : word) {
    int k = std::abs(letter);
    if (k < 1 || k >= strands) throw std::invalid_argument("braid letter out of range");
    int u = cur[k], v = cur[k + 1];
    int p = next_label++, q = next_label++;
    if (letter > 0)
      tuples.push_back({u, p, q, v});
    else
      tuples.push_back({v, u, p, q});
    cur[k] = p;
    cur[k + 1] = q;
  }

  // close up: the final arc at each position is the initial one
  std::vector<int> rep(next_label);
  for (int i = 0; i < next_label; ++i) rep[i] = i;
  auto find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (int i = 1; i <= strands; ++i) rep[find(cur[i])] = find(initial[i]);

  int unknots = 0;
  std::vector<bool> used(next_label, false);
  for (auto& t : tuples)
    for (ArcId& a : t) {
      a = find(a);
      used[a] = true;
    }
  for (int i = 1; i <= strands; ++i)
    if (find(initial[i]) == initial[i] && !used[initial[i]]) ++unknots;

  return Diagram::from_tuples(std::move(tuples), unknots);
}

}  // namespace khoreo
