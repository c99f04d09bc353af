// Laurent polynomials in q and in (t, q); integer coefficients.
#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace khoreo {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int deg, std::int64_t coeff = 1) {
    LaurentPoly p;
    p.add(deg, coeff);
    return p;
  }

  void add(int deg, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = c_.find(deg);
    if (it == c_.end()) {
      c_[deg] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) c_.erase(it);
    }
  }

  std::int64_t coeff(int deg) const {
    auto it = c_.find(deg);
    return it == c_.end() ? 0 : it->second;
  }

  const std::map<int, std::int64_t>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [d, v] : o.c_) r.add(d, v);
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [d, v] : o.c_) r.add(d, -v);
    return r;
  }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [d1, v1] : c_)
      for (auto& [d2, v2] : o.c_) r.add(d1 + d2, v1 * v2);
    return r;
  }
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  std::string str(const std::string& var = "q") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, v] : c_) {
      std::int64_t a = v;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (a != 1 || d == 0) os << a;
      if (d != 0) {
        if (a != 1) os << " ";
        os << var;
        if (d != 1) os << "^" << d;
      }
    }
    return os.str();
  }

 private:
  std::map<int, std::int64_t> c_;
};

// Terms keyed by (t-degree, q-degree).
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;
  static LaurentPoly2 monomial(int dt, int dq, std::int64_t coeff = 1) {
    LaurentPoly2 p;
    p.add(dt, dq, coeff);
    return p;
  }

  void add(int dt, int dq, std::int64_t coeff) {
    if (coeff == 0) return;
    auto key = std::make_pair(dt, dq);
    auto it = c_.find(key);
    if (it == c_.end()) {
      c_[key] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) c_.erase(it);
    }
  }

  std::int64_t coeff(int dt, int dq) const {
    auto it = c_.find({dt, dq});
    return it == c_.end() ? 0 : it->second;
  }

  const std::map<std::pair<int, int>, std::int64_t>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  LaurentPoly2 operator+(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    for (auto& [k, v] : o.c_) r.add(k.first, k.second, v);
    return r;
  }
  LaurentPoly2 operator*(const LaurentPoly2& o) const {
    LaurentPoly2 r;
    for (auto& [k1, v1] : c_)
      for (auto& [k2, v2] : o.c_)
        r.add(k1.first + k2.first, k1.second + k2.second, v1 * v2);
    return r;
  }
  bool operator==(const LaurentPoly2& o) const { return c_ == o.c_; }

  // Substitute t = -1, leaving a polynomial in q.
  LaurentPoly at_t_minus_one() const {
    LaurentPoly p;
    for (auto& [k, v] : c_) {
      bool odd = (k.first % 2) != 0;
      p.add(k.second, odd ? -v : v);
    }
    return p;
  }

  // Terms ascending in t then q, e.g. "q^-9 t^-3 + q^-5 t^-2 + q^-3 + q^-1".
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : c_) {
      auto [dt, dq] = k;
      std::int64_t a = v;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool printed = false;
      if (a != 1 || (dt == 0 && dq == 0)) {
        os << a;
        printed = true;
      }
      if (dq != 0) {
        if (printed) os << " ";
        os << "q";
        if (dq != 1) os << "^" << dq;
        printed = true;
      }
      if (dt != 0) {
        if (printed) os << " ";
        os << "t";
        if (dt != 1) os << "^" << dt;
      }
    }
    return os.str();
  }

 private:
  // map ordering gives ascending (t, q), which the printer relies on
  std::map<std::pair<int, int>, std::int64_t> c_;
};

}  // namespace khoreo
