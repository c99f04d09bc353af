// Structure constants and algebra identities for the three packages.
#include <catch2/catch_amalgamated.hpp>

#include "khoreo/frobenius.hpp"

using namespace khoreo;

namespace {
constexpr int I = 0, X = 1;  // symbols 1, x
constexpr int A = 0, B = 1;  // symbols a, b
}  // namespace

TEST_CASE("khovanov structure constants") {
  const auto& f = khovanov_frobenius();
  CHECK(apply_merge(f, X, X).empty());
  CHECK(apply_merge(f, I, X) == word({X}));
  CHECK(apply_merge(f, I, I) == word({I}));

  TensorMap d1;
  tensor_add(d1, {I, X}, 1);
  tensor_add(d1, {X, I}, 1);
  CHECK(apply_split(f, I) == d1);
  CHECK(apply_split(f, X) == word({X, X}));
}

TEST_CASE("lee phi structure constants") {
  const auto& f = lee_phi_frobenius();
  CHECK(apply_merge(f, X, X) == word({I}));
  CHECK(apply_merge(f, I, X).empty());
  CHECK(apply_merge(f, X, I).empty());
  CHECK(apply_merge(f, I, I).empty());
  CHECK(apply_split(f, I).empty());
  CHECK(apply_split(f, X) == word({I, I}));
}

TEST_CASE("lee total structure constants") {
  const auto& f = lee_total_frobenius();
  TensorMap two_a;
  tensor_add(two_a, {A}, 2);
  CHECK(apply_merge(f, A, A) == two_a);
  CHECK(apply_merge(f, A, B).empty());
  CHECK(apply_merge(f, B, A).empty());
  TensorMap minus_two_b;
  tensor_add(minus_two_b, {B}, -2);
  CHECK(apply_merge(f, B, B) == minus_two_b);
  CHECK(apply_split(f, A) == word({A, A}));
  CHECK(apply_split(f, B) == word({B, B}));
}

TEST_CASE("axioms hold for all three instances") {
  for (const FrobeniusData* f :
       {&khovanov_frobenius(), &lee_phi_frobenius(), &lee_total_frobenius()}) {
    auto rep = verify_axioms(*f);
    INFO(f->name);
    for (auto& [name, ok] : rep.checks) {
      INFO(name);
      CHECK(ok);
    }
    CHECK(rep.all_pass());
  }
}

TEST_CASE("phi anticommutation identities") {
  auto rep = verify_phi_anticommutation();
  CHECK(rep.all_pass());

  // identity (2) on input x: both sides equal 1x1 + x11 + 11x
  const auto& K = khovanov_frobenius();
  const auto& P = lee_phi_frobenius();
  auto lhs = apply_split_at(K, apply_split_at(P, word({X}), 0), 0);
  for (auto& [t, c] : apply_split_at(P, apply_split_at(K, word({X}), 0), 0))
    tensor_add(lhs, t, c);
  TensorMap expect;
  tensor_add(expect, {I, X, I}, 1);
  tensor_add(expect, {X, I, I}, 1);
  tensor_add(expect, {I, I, X}, 1);
  CHECK(lhs == expect);

  // identity (3) on 1 ox 1: both sides vanish
  auto lhs3 = apply_split_at(K, apply_merge_at(P, word({I, I}), 0), 0);
  for (auto& [t, c] : apply_split_at(P, apply_merge_at(K, word({I, I}), 0), 0))
    tensor_add(lhs3, t, c);
  auto rhs3 = apply_merge_at(K, apply_split_at(P, word({I, I}), 1), 0);
  for (auto& [t, c] : apply_merge_at(P, apply_split_at(K, word({I, I}), 1), 0))
    tensor_add(rhs3, t, c);
  CHECK(lhs3.empty());
  CHECK(rhs3.empty());

  // identity (3) on x ox x: both sides equal 1x + x1
  auto lhsxx = apply_split_at(K, apply_merge_at(P, word({X, X}), 0), 0);
  for (auto& [t, c] : apply_split_at(P, apply_merge_at(K, word({X, X}), 0), 0))
    tensor_add(lhsxx, t, c);
  TensorMap expectxx;
  tensor_add(expectxx, {I, X}, 1);
  tensor_add(expectxx, {X, I}, 1);
  CHECK(lhsxx == expectxx);
}

TEST_CASE("q degrees of the operations") {
  // m and Delta lower the 1,x degree by exactly 1
  const auto& K = khovanov_frobenius();
  auto deg = [&](const std::vector<int>& w) {
    int d = 0;
    for (int s : w) d += K.q_degree[s];
    return d;
  };
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v)
      for (auto& [t, c] : apply_merge(K, u, v))
        CHECK(deg(t) == K.q_degree[u] + K.q_degree[v] - 1);
    for (auto& [t, c] : apply_split(K, u)) CHECK(deg(t) == K.q_degree[u] - 1);
  }
  // the phi package raises it by exactly 3
  const auto& P = lee_phi_frobenius();
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v)
      for (auto& [t, c] : apply_merge(P, u, v))
        CHECK(deg(t) == P.q_degree[u] + P.q_degree[v] + 3);
    for (auto& [t, c] : apply_split(P, u)) CHECK(deg(t) == P.q_degree[u] + 3);
  }
}

TEST_CASE("change of variables consistency") {
  // a = x + 1, b = x - 1 expands the a,b tables into exactly (m + m_phi,
  // Delta + Delta_phi)
  const auto& K = khovanov_frobenius();
  const auto& P = lee_phi_frobenius();
  const auto& T = lee_total_frobenius();

  // expansion coefficients: symbol -> (coeff of 1, coeff of x)
  const long long expand[2][2] = {{1, 1}, {-1, 1}};

  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      TensorMap lhs;
      for (auto& [t, c] : apply_merge(T, u, v))
        for (int s = 0; s < 2; ++s) tensor_add(lhs, {s}, c * expand[t[0]][s]);
      TensorMap rhs;
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
          long long c = expand[u][s1] * expand[v][s2];
          for (auto& [t, cc] : apply_merge(K, s1, s2)) tensor_add(rhs, t, c * cc);
          for (auto& [t, cc] : apply_merge(P, s1, s2)) tensor_add(rhs, t, c * cc);
        }
      CHECK(lhs == rhs);
    }
    TensorMap lhs;
    for (auto& [t, c] : apply_split(T, u))
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2)
          tensor_add(lhs, {s1, s2}, c * expand[t[0]][s1] * expand[t[1]][s2]);
    TensorMap rhs;
    for (int s = 0; s < 2; ++s) {
      for (auto& [t, cc] : apply_split(K, s)) tensor_add(rhs, t, expand[u][s] * cc);
      for (auto& [t, cc] : apply_split(P, s)) tensor_add(rhs, t, expand[u][s] * cc);
    }
    CHECK(lhs == rhs);
  }
}
