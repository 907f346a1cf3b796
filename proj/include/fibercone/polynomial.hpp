#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gf.hpp"
#include "monomial.hpp"

namespace fibercone {

template <class K>
struct Term {
  Monomial m;
  typename K::Elem c;
};

/* Terms are kept sorted in strictly decreasing degrevlex with nonzero
 * coefficients; that canonical storage makes structural equality meaningful.
 * Algorithms that need another order re-sort working copies themselves. */
template <class K>
struct Polynomial {
  std::vector<Term<K>> t;

  bool is_zero() const { return t.empty(); }
  bool is_monomial() const { return t.size() == 1; }
  unsigned deg() const {
    unsigned d = 0;
    for (const auto& tm : t) d = std::max(d, tm.m.deg());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& tm : t)
      if (tm.m.deg() != t.front().m.deg()) return false;
    return true;
  }
  bool operator==(const Polynomial& o) const {
    if (t.size() != o.t.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i].m != o.t[i].m || t[i].c != o.t[i].c) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
};

template <class K>
Polynomial<K> p_normalize(const K& k, std::vector<Term<K>> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term<K>& a, const Term<K>& b) {
    return cmp_degrevlex_range(a.m, b.m, 0, a.m.e.size()) > 0;
  });
  Polynomial<K> r;
  for (auto& tm : terms) {
    if (!r.t.empty() && r.t.back().m == tm.m)
      r.t.back().c = k.add(r.t.back().c, tm.c);
    else
      r.t.push_back(std::move(tm));
    if (!r.t.empty() && k.is_zero(r.t.back().c)) r.t.pop_back();
  }
  return r;
}

template <class K>
Polynomial<K> p_zero() {
  return Polynomial<K>{};
}

template <class K>
Polynomial<K> p_const(const K& k, typename K::Elem c, std::size_t nvars) {
  if (k.is_zero(c)) return {};
  return Polynomial<K>{{Term<K>{Monomial(nvars), c}}};
}

template <class K>
Polynomial<K> p_monomial(const K& k, Monomial m,
                         typename K::Elem c) {
  if (k.is_zero(c)) return {};
  return Polynomial<K>{{Term<K>{std::move(m), c}}};
}

template <class K>
Polynomial<K> p_add(const K& k, const Polynomial<K>& a, const Polynomial<K>& b) {
  std::vector<Term<K>> t;
  t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = cmp_degrevlex_range(a.t[i].m, b.t[j].m, 0, a.t[i].m.e.size());
    if (c > 0)
      t.push_back(a.t[i++]);
    else if (c < 0)
      t.push_back(b.t[j++]);
    else {
      auto s = k.add(a.t[i].c, b.t[j].c);
      if (!k.is_zero(s)) t.push_back(Term<K>{a.t[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) t.push_back(b.t[j]);
  return Polynomial<K>{std::move(t)};
}

template <class K>
Polynomial<K> p_neg(const K& k, const Polynomial<K>& a) {
  Polynomial<K> r = a;
  for (auto& tm : r.t) tm.c = k.neg(tm.c);
  return r;
}

template <class K>
Polynomial<K> p_sub(const K& k, const Polynomial<K>& a, const Polynomial<K>& b) {
  return p_add(k, a, p_neg(k, b));
}

template <class K>
Polynomial<K> p_scale(const K& k, const Polynomial<K>& a, typename K::Elem c) {
  if (k.is_zero(c)) return {};
  Polynomial<K> r = a;
  for (auto& tm : r.t) tm.c = k.mul(tm.c, c);
  return r;
}

/* a * (c * m) — multiplying by one term preserves the degrevlex sort. */
template <class K>
Polynomial<K> p_mul_term(const K& k, const Polynomial<K>& a, const Monomial& m,
                         typename K::Elem c) {
  if (k.is_zero(c)) return {};
  Polynomial<K> r;
  r.t.reserve(a.t.size());
  for (const auto& tm : a.t) r.t.push_back(Term<K>{mon_mul(tm.m, m), k.mul(tm.c, c)});
  return r;
}

template <class K>
Polynomial<K> p_mul(const K& k, const Polynomial<K>& a, const Polynomial<K>& b) {
  std::vector<Term<K>> t;
  t.reserve(a.t.size() * b.t.size());
  for (const auto& ta : a.t)
    for (const auto& tb : b.t)
      t.push_back(Term<K>{mon_mul(ta.m, tb.m), k.mul(ta.c, tb.c)});
  return p_normalize(k, std::move(t));
}

template <class K>
Polynomial<K> p_monic(const K& k, const Polynomial<K>& a) {
  if (a.is_zero()) return a;
  return p_scale(k, a, k.inv(a.t.front().c));
}

/* Canonical comparison used to sort generator lists deterministically:
 * by degree, then degrevlex on terms, then coefficients as printed. */
template <class K>
int p_cmp(const K& k, const Polynomial<K>& a, const Polynomial<K>& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  std::size_t n = std::min(a.t.size(), b.t.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp_degrevlex_range(a.t[i].m, b.t[i].m, 0, a.t[i].m.e.size());
    if (c != 0) return c;
    if (a.t[i].c != b.t[i].c)
      return k.to_string(a.t[i].c) < k.to_string(b.t[i].c) ? -1 : 1;
  }
  if (a.t.size() != b.t.size()) return a.t.size() < b.t.size() ? -1 : 1;
  return 0;
}

template <class K>
std::string p_to_string(const K& k, const Polynomial<K>& f,
                        const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.t.size(); ++i) {
    const auto& tm = f.t[i];
    bool neg = k.print_as_negative(tm.c);
    if (i == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mag = k.magnitude_string(tm.c);
    if (tm.m.is_one())
      s += mag;
    else if (mag == "1")
      s += mon_to_string(tm.m, names);
    else
      s += mag + "*" + mon_to_string(tm.m, names);
  }
  return s;
}

}  // namespace fibercone
