#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibercone {

/* Power products in a fixed number of variables; exponent vectors are dense. */
struct Monomial {
  std::vector<unsigned> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }
  unsigned deg() const { return std::accumulate(e.begin(), e.end(), 0u); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mon_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

/* b / a; caller guarantees divisibility. */
inline Monomial mon_div(const Monomial& b, const Monomial& a) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
  return r;
}

inline Monomial mon_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial mon_gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

/* Degrevlex on a contiguous variable range [lo, hi): total degree first, ties
 * broken by the smallest exponent difference on the *last* differing variable. */
inline int cmp_degrevlex_range(const Monomial& a, const Monomial& b,
                               std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

inline int cmp_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  return 0;
}

struct MonDegrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_degrevlex_range(a, b, 0, a.e.size()) < 0;
  }
};

enum class OrderKind { degrevlex, lex, block_elim };

/* Total order on monomials. block_elim compares the first `block` variables
 * (degrevlex) before the rest, so leading terms free of those variables certify
 * membership in the subring — the elimination property. */
struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  std::size_t block = 0;  // number of leading variables to eliminate

  static MonomialOrder degrevlex() { return {OrderKind::degrevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder eliminate_first(std::size_t k) {
    return {OrderKind::block_elim, k};
  }

  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::degrevlex:
        return cmp_degrevlex_range(a, b, 0, a.e.size());
      case OrderKind::lex:
        return cmp_lex(a, b);
      case OrderKind::block_elim: {
        int c = cmp_degrevlex_range(a, b, 0, block);
        if (c != 0) return c;
        return cmp_degrevlex_range(a, b, block, a.e.size());
      }
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
};

/* All monomials of total degree d in n variables, listed in decreasing
 * degrevlex so the enumeration order is canonical. */
inline void enumerate_degree(std::size_t nvars, unsigned d,
                             std::vector<Monomial>& out) {
  Monomial cur(nvars);
  // recursive composition of d into nvars parts
  auto rec = [&](auto&& self, std::size_t i, unsigned rem) -> void {
    if (i + 1 == nvars) {
      cur.e[i] = rem;
      out.push_back(cur);
      cur.e[i] = 0;
      return;
    }
    for (unsigned v = rem; v != static_cast<unsigned>(-1); --v) {
      cur.e[i] = v;
      self(self, i + 1, rem - v);
    }
    cur.e[i] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial(std::vector<unsigned>{}));
    return;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return cmp_degrevlex_range(a, b, 0, a.e.size()) > 0;
  });
}

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  enumerate_degree(nvars, d, out);
  return out;
}

inline std::string mon_to_string(const Monomial& m,
                                 const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

}  // namespace fibercone
