// Link signature via the Goeritz matrix with the Gordon-Litherland
// correction, plus the closed formula for reduced alternating diagrams.
#pragma once

#include <stdexcept>
#include <vector>

#include "khoreo/faces.hpp"
#include "khoreo/rational.hpp"
#include "khoreo/resolution.hpp"

namespace khoreo {

enum class ColoringChoice { as_given, reversed };

struct GoeritzData {
  std::vector<int> white_faces;        // face ids, X_0 first
  std::vector<int> eta;                // per crossing, +1 or -1
  std::vector<int> type;               // per crossing, 1 or 2
  std::vector<std::vector<long long>> g;  // (n+1) x (n+1), full index set
  int mu = 0;                          // sum of eta over type-II crossings
  int dropped = 0;                     // index into white_faces removed from G
};

// Exact signature of a symmetric rational matrix by congruence
// diagonalization.
inline int symmetric_signature(std::vector<std::vector<Rational>> m) {
  int n = int(m.size());
  int sig = 0;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int swap = -1, off = -1;
      for (int j = k + 1; j < n; ++j)
        if (m[j][j] != 0) { swap = j; break; }
      if (swap >= 0) {
        std::swap(m[swap], m[k]);
        for (int r = 0; r < n; ++r) std::swap(m[r][swap], m[r][k]);
      } else {
        for (int j = k + 1; j < n; ++j)
          if (m[k][j] != 0) { off = j; break; }
        if (off < 0) continue;  // zero row: rank deficient, contributes 0
        // congruence: add row/col off into k; diagonal becomes 2 m[k][off]
        for (int r = 0; r < n; ++r) m[k][r] += m[off][r];
        for (int r = 0; r < n; ++r) m[r][k] += m[r][off];
      }
    }
    if (m[k][k] == 0) continue;
    sig += (m[k][k] > 0) ? 1 : -1;
    for (int j = k + 1; j < n; ++j) {
      if (m[j][k] == 0) continue;
      Rational f = m[j][k] / m[k][k];
      for (int r = k; r < n; ++r) m[j][r] -= f * m[k][r];
      for (int r = k; r < n; ++r) m[r][j] -= f * m[r][k];
    }
  }
  return sig;
}

// eta(a) = +1 iff the corner pair adjacent to the under-strand entry
// (corners 0 and 2) is white; a crossing is of type II iff its oriented
// smoothing trace lies in a black region, which reduces to eta == sign.
inline GoeritzData goeritz_data(const Diagram& d, const FaceColoring& fc,
                                bool reversed_coloring, int dropped = 0) {
  const int c = d.crossing_count();
  std::vector<bool> black = fc.black;
  if (reversed_coloring)
    for (std::size_t f = 0; f < black.size(); ++f) black[f] = !black[f];

  GoeritzData out;
  std::vector<int> white_index(black.size(), -1);
  for (int f = 0; f < int(black.size()); ++f)
    if (!black[f]) {
      white_index[f] = int(out.white_faces.size());
      out.white_faces.push_back(f);
    }
  const int nw = int(out.white_faces.size());
  out.dropped = dropped;

  out.eta.assign(c, 0);
  out.type.assign(c, 0);
  out.g.assign(nw, std::vector<long long>(nw, 0));
  for (int i = 0; i < c; ++i) {
    int f0 = fc.corner_face[i][0], f1 = fc.corner_face[i][1];
    int f2 = fc.corner_face[i][2], f3 = fc.corner_face[i][3];
    bool pair02_white = !black[f0];
    out.eta[i] = pair02_white ? 1 : -1;
    out.type[i] = (out.eta[i] == d.sign(i)) ? 2 : 1;
    if (out.type[i] == 2) out.mu += out.eta[i];

    int wa = pair02_white ? f0 : f1;
    int wb = pair02_white ? f2 : f3;
    if (wa == wb)
      throw std::invalid_argument(
          "goeritz: a crossing is incident twice to the same white region");
    int ia = white_index[wa], ib = white_index[wb];
    out.g[ia][ib] -= out.eta[i];
    out.g[ib][ia] -= out.eta[i];
  }
  for (int i = 0; i < nw; ++i) {
    long long s = 0;
    for (int j = 0; j < nw; ++j)
      if (j != i) s += out.g[i][j];
    out.g[i][i] = -s;
  }
  return out;
}

inline int goeritz_signature_from(const GoeritzData& gd) {
  int nw = int(gd.g.size());
  std::vector<std::vector<Rational>> m;
  for (int i = 0; i < nw; ++i) {
    if (i == gd.dropped) continue;
    std::vector<Rational> row;
    for (int j = 0; j < nw; ++j)
      if (j != gd.dropped) row.emplace_back(gd.g[i][j]);
    m.push_back(std::move(row));
  }
  return symmetric_signature(std::move(m)) - gd.mu;
}

// sgn G(D) - mu(D).  Requires a connected diagram in which every crossing
// meets two distinct white regions; reduce nugatory crossings first.
inline int goeritz_signature(const Diagram& d, ColoringChoice choice = ColoringChoice::as_given,
                             int dropped_region = 0) {
  FaceColoring fc = faces_and_coloring(d);
  auto gd = goeritz_data(d, fc, choice == ColoringChoice::reversed, dropped_region);
  return goeritz_signature_from(gd);
}

// sigma = o(D) - y(D) - 1 for reduced nonsplit alternating diagrams.
inline int alternating_signature(const Diagram& d) {
  DiagramFlags f = classify(d);
  if (!f.alternating || !f.nonsplit || !f.reduced)
    throw std::invalid_argument(
        "alternating_signature: diagram must be reduced, nonsplit, alternating");
  auto [x, y] = d.crossing_counts();
  (void)x;
  return o_count(d) - y - 1;
}

}  // namespace khoreo
