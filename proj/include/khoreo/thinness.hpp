// Support checks against the two-diagonal picture and the pairing
// decomposition of the Khovanov polynomial.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "khoreo/complex.hpp"
#include "khoreo/laurent.hpp"

namespace khoreo {

struct ThinnessReport {
  bool is_thin = false;
  int s = 0;  // diagonal offset used for the check
  std::pair<int, int> top{0, 0};     // (p, 2p - s - 1)
  std::pair<int, int> bottom{0, 0};  // (m, 2m - s + 1)
  std::pair<std::size_t, std::size_t> corner_coeffs{0, 0};
  bool corners_ok = false;
  std::vector<std::tuple<int, int, std::size_t>> violations;  // off-diagonal ranks
};

// Support must lie on j = 2i - s -+ 1; the extreme t-degrees carry
// coefficient one on the upper and lower diagonal respectively.
inline ThinnessReport thinness_report(const BigradedTable& t, int sigma) {
  ThinnessReport rep;
  rep.s = sigma;
  for (auto& [k, v] : t.ranks) {
    auto [i, j] = k;
    if (j != 2 * i - sigma - 1 && j != 2 * i - sigma + 1) rep.violations.emplace_back(i, j, v);
  }
  rep.is_thin = rep.violations.empty();
  if (t.ranks.empty()) return rep;

  int p = t.ranks.begin()->first.first, m = p;
  for (auto& [k, v] : t.ranks) {
    p = std::min(p, k.first);
    m = std::max(m, k.first);
  }
  rep.top = {p, 2 * p - sigma - 1};
  rep.bottom = {m, 2 * m - sigma + 1};
  rep.corner_coeffs = {t.rank(rep.top.first, rep.top.second),
                       t.rank(rep.bottom.first, rep.bottom.second)};
  rep.corners_ok = rep.corner_coeffs.first == 1 && rep.corner_coeffs.second == 1;
  return rep;
}

struct PairingResult {
  bool ok = false;
  std::string reason;
  LaurentPoly kh_prime;  // polynomial in z = t q^2
  std::map<int, std::size_t> exceptional;  // multiplicity of z^e over subsets E
};

// Solve Kh(t,q) = q^-sigma { (q^-1 + q) sum_E (tq^2)^{e_E} +
// (q^-1 + t q^3) Kh'(tq^2) } for Kh'; succeeds only with nonnegative
// integer coefficients.  Works diagonal-by-diagonal as an integer
// recurrence.
inline PairingResult pairing_decompose(const LaurentPoly2& p, int sigma,
                                       const std::vector<std::vector<Rational>>& linking,
                                       int n) {
  PairingResult res;

  // exceptional exponents e_E = sum over j in E, k not in E of 2 l_jk
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    Rational s(0);
    for (int j = 1; j < n; ++j) {
      if (!((mask >> (j - 1)) & 1u)) continue;
      for (int k = 0; k < n; ++k) {
        bool k_in = k > 0 && ((mask >> (k - 1)) & 1u);
        if (!k_in) s += 2 * linking[j][k];
      }
    }
    res.exceptional[int(numerator(s))] += 1;
  }

  // extract the diagonal coefficient sequences a_i (upper) and b_i (lower)
  std::map<int, std::int64_t> a, b;
  for (auto& [k, v] : p.terms()) {
    auto [dt, dq] = k;
    if (dq == 2 * dt - sigma - 1)
      a[dt] += v;
    else if (dq == 2 * dt - sigma + 1)
      b[dt] += v;
    else {
      res.reason = "support leaves the two diagonals";
      return res;
    }
  }

  // c_k = a_k - mu_k must be a nonnegative integer sequence with
  // b_i = mu_i + c_{i-1}
  std::map<int, std::int64_t> c;
  std::set<int> keys;
  for (auto& [k, v] : a) keys.insert(k);
  for (auto& [k, v] : res.exceptional) keys.insert(k);
  for (int k : keys) {
    std::int64_t mu = res.exceptional.count(k) ? std::int64_t(res.exceptional[k]) : 0;
    std::int64_t ck = (a.count(k) ? a[k] : 0) - mu;
    if (ck < 0) {
      res.reason = "negative coefficient in Kh'";
      return res;
    }
    if (ck > 0) c[k] = ck;
  }
  std::set<int> bkeys;
  for (auto& [k, v] : b) bkeys.insert(k);
  for (auto& [k, v] : res.exceptional) bkeys.insert(k);
  for (auto& [k, v] : c) bkeys.insert(k + 1);
  for (int k : bkeys) {
    std::int64_t mu = res.exceptional.count(k) ? std::int64_t(res.exceptional[k]) : 0;
    std::int64_t ck1 = c.count(k - 1) ? c[k - 1] : 0;
    std::int64_t bk = b.count(k) ? b[k] : 0;
    if (bk != mu + ck1) {
      res.reason = "lower diagonal does not match the paired upper diagonal";
      return res;
    }
  }

  res.ok = true;
  for (auto& [k, v] : c) res.kh_prime.add(k, v);
  return res;
}

}  // namespace khoreo
