// The three local (co)multiplication packages driving the differentials:
// Khovanov's (m, Delta), the deformation (m_Phi, Delta_Phi), and their sum
// in the a,b basis.  Structure constants are stored as explicit tables.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "khoreo/rational.hpp"

namespace khoreo {

// Term of a linear combination of tensor words over a 2-element basis.
// Words are encoded little-endian in a bitmask: bit k is tensor factor k.
struct FrobeniusData {
  std::string name;
  std::array<std::string, 2> basis;  // symbol 0, symbol 1
  // merge[(u<<1)|v] -> list of (w, coeff)
  std::array<std::vector<std::pair<int, int>>, 4> merge;
  // split[u] -> list of ((w1, w2), coeff)
  std::array<std::vector<std::pair<std::pair<int, int>, int>>, 2> split;
  std::array<int, 2> q_degree{1, -1};       // of basis symbols 0, 1
  bool q_graded = true;                     // false for the a,b package
  std::pair<int, int> op_bidegree{1, 0};    // degree of the induced edge map
  bool has_unit = false;
  std::array<int, 2> unit{};    // coefficients of iota(1) on basis
  std::array<int, 2> counit{};  // counit values on basis
  // pairing realizing the isomorphism with the dual algebra
  std::array<std::array<int, 2>, 2> pairing{{{0, 1}, {1, 0}}};
};

inline const FrobeniusData& khovanov_frobenius() {
  static const FrobeniusData f = [] {
    FrobeniusData f;
    f.name = "khovanov";
    f.basis = {"1", "x"};
    f.merge[0b00] = {{0, 1}};            // 1*1 = 1
    f.merge[0b01] = {{1, 1}};            // 1*x = x
    f.merge[0b10] = {{1, 1}};            // x*1 = x
    f.merge[0b11] = {};                  // x*x = 0
    f.split[0] = {{{0, 1}, 1}, {{1, 0}, 1}};  // 1 -> 1x + x1
    f.split[1] = {{{1, 1}, 1}};               // x -> xx
    f.op_bidegree = {1, 0};
    f.has_unit = true;
    f.unit = {1, 0};    // iota(1) = 1
    f.counit = {0, 1};  // eps(1) = 0, eps(x) = 1
    return f;
  }();
  return f;
}

inline const FrobeniusData& lee_phi_frobenius() {
  static const FrobeniusData f = [] {
    FrobeniusData f;
    f.name = "lee_phi";
    f.basis = {"1", "x"};
    f.merge[0b00] = {};
    f.merge[0b01] = {};
    f.merge[0b10] = {};
    f.merge[0b11] = {{0, 1}};       // x*x = 1
    f.split[0] = {};                // 1 -> 0
    f.split[1] = {{{0, 0}, 1}};     // x -> 1 tensor 1
    f.op_bidegree = {1, 4};
    return f;
  }();
  return f;
}

inline const FrobeniusData& lee_total_frobenius() {
  static const FrobeniusData f = [] {
    FrobeniusData f;
    f.name = "lee_total";
    f.basis = {"a", "b"};
    f.merge[0b00] = {{0, 2}};   // a*a = 2a
    f.merge[0b01] = {};
    f.merge[0b10] = {};
    f.merge[0b11] = {{1, -2}};  // b*b = -2b
    f.split[0] = {{{0, 0}, 1}};
    f.split[1] = {{{1, 1}, 1}};
    f.q_graded = false;
    f.op_bidegree = {1, 0};
    f.pairing = {{{2, 0}, {0, -2}}};
    return f;
  }();
  return f;
}

// --- exhaustive verification over tensor words ------------------------------

// Linear combination of tensor words of a fixed length.
using TensorMap = std::map<std::vector<int>, long long>;

inline void tensor_add(TensorMap& m, const std::vector<int>& w, long long c) {
  if (c == 0) return;
  auto it = m.find(w);
  if (it == m.end())
    m[w] = c;
  else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

// Applies merge at slots (i, i+1), shrinking the word by one.
inline TensorMap apply_merge_at(const FrobeniusData& f, const TensorMap& in, int i) {
  TensorMap out;
  for (auto& [w, c] : in) {
    int key = (w[i] << 1) | w[i + 1];
    for (auto& [sym, coeff] : f.merge[key]) {
      std::vector<int> nw(w.begin(), w.begin() + i);
      nw.push_back(sym);
      nw.insert(nw.end(), w.begin() + i + 2, w.end());
      tensor_add(out, nw, c * coeff);
    }
  }
  return out;
}

// Applies split at slot i, growing the word by one.
inline TensorMap apply_split_at(const FrobeniusData& f, const TensorMap& in, int i) {
  TensorMap out;
  for (auto& [w, c] : in) {
    for (auto& [pair, coeff] : f.split[w[i]]) {
      std::vector<int> nw(w.begin(), w.begin() + i);
      nw.push_back(pair.first);
      nw.push_back(pair.second);
      nw.insert(nw.end(), w.begin() + i + 1, w.end());
      tensor_add(out, nw, c * coeff);
    }
  }
  return out;
}

inline TensorMap word(std::initializer_list<int> w) {
  TensorMap m;
  tensor_add(m, std::vector<int>(w), 1);
  return m;
}

// Spec-facing single-input lookups.
inline TensorMap apply_merge(const FrobeniusData& f, int u, int v) {
  return apply_merge_at(f, word({u, v}), 0);
}
inline TensorMap apply_split(const FrobeniusData& f, int u) {
  return apply_split_at(f, word({u}), 0);
}

struct AxiomReport {
  std::map<std::string, bool> checks;
  bool all_pass() const {
    for (auto& [k, v] : checks)
      if (!v) return false;
    return true;
  }
};

inline AxiomReport verify_axioms(const FrobeniusData& f) {
  AxiomReport rep;

  bool comm = true, assoc = true, cocomm = true, coassoc = true, frob = true;
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      if (apply_merge(f, u, v) != apply_merge(f, v, u)) comm = false;
      for (int w = 0; w < 2; ++w) {
        auto in = word({u, v, w});
        if (apply_merge_at(f, apply_merge_at(f, in, 0), 0) !=
            apply_merge_at(f, apply_merge_at(f, in, 1), 0))
          assoc = false;
      }
      // Frobenius identity: Delta(m(u,v)) = (m ox id)(u ox Delta(v))
      auto lhs = apply_split_at(f, apply_merge_at(f, word({u, v}), 0), 0);
      auto rhs = apply_merge_at(f, apply_split_at(f, word({u, v}), 1), 0);
      if (lhs != rhs) frob = false;
    }
    auto d = apply_split(f, u);
    TensorMap swapped;
    for (auto& [w, c] : d) tensor_add(swapped, {w[1], w[0]}, c);
    if (d != swapped) cocomm = false;
    if (apply_split_at(f, d, 0) != apply_split_at(f, d, 1)) coassoc = false;
  }
  rep.checks["commutative"] = comm;
  rep.checks["associative"] = assoc;
  rep.checks["cocommutative"] = cocomm;
  rep.checks["coassociative"] = coassoc;
  rep.checks["frobenius_identity"] = frob;

  if (f.has_unit) {
    bool unit_ok = true, counit_ok = true;
    for (int u = 0; u < 2; ++u) {
      TensorMap in;
      for (int s = 0; s < 2; ++s)
        if (f.unit[s] != 0) tensor_add(in, {s, u}, f.unit[s]);
      if (apply_merge_at(f, in, 0) != word({u})) unit_ok = false;
      TensorMap out;
      for (auto& [w, c] : apply_split(f, u)) tensor_add(out, {w[1]}, c * f.counit[w[0]]);
      if (out != word({u})) counit_ok = false;
    }
    rep.checks["unit"] = unit_ok;
    rep.checks["counit"] = counit_ok;
  }

  // self-duality: <Delta(u), v ox w> = <u, m(v ox w)> under the stored
  // pairing; when a counit exists the pairing must also equal eps(m(u ox v))
  {
    auto pair1 = [&](int u, int v) -> long long { return f.pairing[u][v]; };
    if (f.has_unit) {
      bool consistent = true;
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          long long s = 0;
          for (auto& [w, c] : apply_merge(f, u, v)) s += c * f.counit[w[0]];
          if (s != f.pairing[u][v]) consistent = false;
        }
      rep.checks["pairing_from_counit"] = consistent;
    }
    bool dual = true;
    for (int u = 0; u < 2; ++u)
      for (int v = 0; v < 2; ++v)
        for (int w = 0; w < 2; ++w) {
          long long lhs = 0;
          for (auto& [t, c] : apply_split(f, u)) lhs += c * pair1(t[0], v) * pair1(t[1], w);
          long long rhs = 0;
          for (auto& [t, c] : apply_merge(f, v, w)) rhs += c * pair1(u, t[0]);
          if (lhs != rhs) dual = false;
        }
    rep.checks["self_dual"] = dual;
  }
  return rep;
}

// The three anticommutation identities coupling (m, Delta) with
// (m_Phi, Delta_Phi), checked over all basis inputs.
inline AxiomReport verify_phi_anticommutation() {
  const FrobeniusData& K = khovanov_frobenius();
  const FrobeniusData& P = lee_phi_frobenius();
  AxiomReport rep;

  bool id1 = true;
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v)
      for (int w = 0; w < 2; ++w) {
        auto in = word({u, v, w});
        auto lhs = apply_merge_at(K, apply_merge_at(P, in, 0), 0);
        for (auto& [t, c] : apply_merge_at(P, apply_merge_at(K, in, 0), 0))
          tensor_add(lhs, t, c);
        auto rhs = apply_merge_at(K, apply_merge_at(P, in, 1), 0);
        for (auto& [t, c] : apply_merge_at(P, apply_merge_at(K, in, 1), 0))
          tensor_add(rhs, t, c);
        if (lhs != rhs) id1 = false;
      }
  rep.checks["identity_1_merges"] = id1;

  bool id2 = true;
  for (int u = 0; u < 2; ++u) {
    auto in = word({u});
    auto lhs = apply_split_at(K, apply_split_at(P, in, 0), 0);
    for (auto& [t, c] : apply_split_at(P, apply_split_at(K, in, 0), 0))
      tensor_add(lhs, t, c);
    auto rhs = apply_split_at(K, apply_split_at(P, in, 0), 1);
    for (auto& [t, c] : apply_split_at(P, apply_split_at(K, in, 0), 1))
      tensor_add(rhs, t, c);
    if (lhs != rhs) id2 = false;
  }
  rep.checks["identity_2_splits"] = id2;

  bool id3 = true;
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) {
      auto in = word({u, v});
      auto lhs = apply_split_at(K, apply_merge_at(P, in, 0), 0);
      for (auto& [t, c] : apply_split_at(P, apply_merge_at(K, in, 0), 0))
        tensor_add(lhs, t, c);
      auto rhs = apply_merge_at(K, apply_split_at(P, in, 1), 0);
      for (auto& [t, c] : apply_merge_at(P, apply_split_at(K, in, 1), 0))
        tensor_add(rhs, t, c);
      if (lhs != rhs) id3 = false;
    }
  rep.checks["identity_3_mixed"] = id3;
  return rep;
}

}  // namespace khoreo
