#pragma once

/* Buchberger engine. Pair selection is the normal strategy: minimal lcm degree
 * first, ties broken by the monomial order on the lcms, then by pair indices,
 * so runs are reproducible. Bases are returned fully reduced (monic, minimal
 * leads, tails irreducible), hence canonical for the given order. */

#include <set>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace fibercone {

struct groebner_error : std::runtime_error {
  explicit groebner_error(const std::string& w) : std::runtime_error(w) {}
};

/* Terms sorted in strictly decreasing `ord`; the working shape of the engine. */
template <class K>
using WorkTerms = std::vector<Term<K>>;

template <class K>
WorkTerms<K> work_from(const Polynomial<K>& f, const MonomialOrder& ord) {
  WorkTerms<K> w = f.t;
  std::sort(w.begin(), w.end(), [&](const Term<K>& a, const Term<K>& b) {
    return ord.cmp(a.m, b.m) > 0;
  });
  return w;
}

template <class K>
Polynomial<K> work_to_poly(const K& k, const WorkTerms<K>& w) {
  return p_normalize(k, w);
}

/* w -= c * shift * g, merging two ord-sorted term lists. */
template <class K>
void work_sub_mul(const K& k, WorkTerms<K>& w, const WorkTerms<K>& g,
                  const Monomial& shift, const typename K::Elem& c,
                  const MonomialOrder& ord) {
  WorkTerms<K> out;
  out.reserve(w.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < w.size() && j < g.size()) {
    Monomial gm = mon_mul(g[j].m, shift);
    int cm = ord.cmp(w[i].m, gm);
    if (cm > 0)
      out.push_back(w[i++]);
    else if (cm < 0) {
      out.push_back(Term<K>{std::move(gm), k.neg(k.mul(c, g[j].c))});
      ++j;
    } else {
      auto s = k.sub(w[i].c, k.mul(c, g[j].c));
      if (!k.is_zero(s)) out.push_back(Term<K>{w[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < w.size(); ++i) out.push_back(w[i]);
  for (; j < g.size(); ++j)
    out.push_back(Term<K>{mon_mul(g[j].m, shift), k.neg(k.mul(c, g[j].c))});
  w = std::move(out);
}

template <class K>
struct GroebnerBasis {
  MonomialOrder ord;
  std::vector<Polynomial<K>> polys;        // canonical storage order
  std::vector<WorkTerms<K>> work;          // ord-sorted copies, monic under ord
  std::vector<Monomial> leads;

  bool is_unit() const {
    return polys.size() == 1 && polys[0].t.size() == 1 && polys[0].t[0].m.is_one();
  }
  bool same_elements(const GroebnerBasis& o) const {
    if (polys.size() != o.polys.size()) return false;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (polys[i] != o.polys[i]) return false;
    return true;
  }
};

/* Fully reduced remainder of f against monic ord-sorted divisors. */
template <class K>
WorkTerms<K> work_normal_form(const K& k, WorkTerms<K> w,
                              const std::vector<WorkTerms<K>>& basis,
                              const std::vector<Monomial>& leads,
                              const MonomialOrder& ord) {
  WorkTerms<K> rem;
  while (!w.empty()) {
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!divides(leads[i], w.front().m)) continue;
      Monomial shift = mon_div(w.front().m, leads[i]);
      work_sub_mul(k, w, basis[i], shift, w.front().c, ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(w.front());
      w.erase(w.begin());
    }
  }
  return rem;
}

template <class K>
Polynomial<K> normal_form(const K& k, const Polynomial<K>& f,
                          const GroebnerBasis<K>& gb) {
  if (gb.polys.empty()) return f;
  auto r = work_normal_form(k, work_from(f, gb.ord), gb.work, gb.leads, gb.ord);
  return work_to_poly(k, r);
}

namespace detail {

template <class K>
void work_make_monic(const K& k, WorkTerms<K>& w) {
  if (w.empty()) return;
  auto inv = k.inv(w.front().c);
  for (auto& t : w) t.c = k.mul(t.c, inv);
}

struct PairKey {
  unsigned deg;
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  MonomialOrder ord;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace detail

template <class K>
GroebnerBasis<K> groebner_basis(const K& k, const std::vector<Polynomial<K>>& gens,
                                const MonomialOrder& ord) {
  GroebnerBasis<K> gb;
  gb.ord = ord;
  std::vector<WorkTerms<K>> basis;
  std::vector<Monomial> leads;

  std::set<detail::PairKey, detail::PairLess> queue(detail::PairLess{ord});
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      queue.insert(detail::PairKey{mon_lcm(leads[i], leads[j]).deg(),
                                   mon_lcm(leads[i], leads[j]), i, j});
  };
  auto insert_poly = [&](WorkTerms<K> w) {
    detail::work_make_monic(k, w);
    leads.push_back(w.front().m);
    basis.push_back(std::move(w));
    push_pairs(basis.size() - 1);
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto r = work_normal_form(k, work_from(g, ord), basis, leads, ord);
    if (!r.empty()) insert_poly(std::move(r));
  }

  while (!queue.empty()) {
    auto pk = *queue.begin();
    queue.erase(queue.begin());
    const auto &gi = basis[pk.i], &gj = basis[pk.j];
    if (coprime(leads[pk.i], leads[pk.j])) continue;          // product criterion
    if (gi.size() == 1 && gj.size() == 1) continue;           // monomial pair: S-poly = 0
    WorkTerms<K> s;
    {
      // S = (lcm/lt_i) gi - (lcm/lt_j) gj, both monic
      Monomial a = mon_div(pk.lcm, leads[pk.i]);
      s.reserve(gi.size());
      for (const auto& t : gi) s.push_back(Term<K>{mon_mul(t.m, a), t.c});
      work_sub_mul(k, s, gj, mon_div(pk.lcm, leads[pk.j]), k.one(), ord);
    }
    auto r = work_normal_form(k, std::move(s), basis, leads, ord);
    if (!r.empty()) insert_poly(std::move(r));
  }

  // interreduce to the canonical reduced basis
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!divides(leads[j], leads[i])) continue;
      // equal leads: keep the earlier one
      redundant = leads[j] != leads[i] || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    return ord.cmp(leads[a], leads[b]) < 0;
  });
  std::vector<WorkTerms<K>> red;
  std::vector<Monomial> red_leads;
  for (std::size_t idx : keep) {
    red.push_back(basis[idx]);
    red_leads.push_back(leads[idx]);
  }
  for (std::size_t i = 0; i < red.size(); ++i) {
    std::vector<WorkTerms<K>> others;
    std::vector<Monomial> other_leads;
    for (std::size_t j = 0; j < red.size(); ++j) {
      if (j == i) continue;
      others.push_back(red[j]);
      other_leads.push_back(red_leads[j]);
    }
    red[i] = work_normal_form(k, std::move(red[i]), others, other_leads, ord);
    detail::work_make_monic(k, red[i]);
  }

  for (std::size_t i = 0; i < red.size(); ++i) {
    gb.leads.push_back(red_leads[i]);
    gb.polys.push_back(work_to_poly(k, red[i]));
    gb.work.push_back(std::move(red[i]));
  }
  return gb;
}

/* Quotient of f by g when the division is exact; throws otherwise. */
template <class K>
Polynomial<K> exact_divide(const K& k, const Polynomial<K>& f,
                           const Polynomial<K>& g) {
  if (g.is_zero()) throw groebner_error("exact division by zero");
  MonomialOrder ord = MonomialOrder::degrevlex();
  WorkTerms<K> w = work_from(f, ord);
  WorkTerms<K> gw = work_from(g, ord);
  auto glc = gw.front().c;
  std::vector<Term<K>> q;
  while (!w.empty()) {
    if (!divides(gw.front().m, w.front().m))
      throw groebner_error("division is not exact");
    Monomial shift = mon_div(w.front().m, gw.front().m);
    auto c = k.div(w.front().c, glc);
    work_sub_mul(k, w, gw, shift, c, ord);
    // record c * shift after scaling gw to monic equivalence
    q.push_back(Term<K>{std::move(shift), c});
  }
  return p_normalize(k, std::move(q));
}

/* Widen/narrow exponent vectors when moving between a ring and its extension
 * by `extra` new leading variables. */
template <class K>
Polynomial<K> widen_front(const Polynomial<K>& f, std::size_t extra) {
  Polynomial<K> r = f;
  for (auto& t : r.t) {
    std::vector<unsigned> e(extra, 0);
    e.insert(e.end(), t.m.e.begin(), t.m.e.end());
    t.m.e = std::move(e);
  }
  return r;
}

template <class K>
Polynomial<K> narrow_front(const K& k, const Polynomial<K>& f, std::size_t extra) {
  std::vector<Term<K>> t;
  for (const auto& tm : f.t) {
    Monomial m(std::vector<unsigned>(tm.m.e.begin() + extra, tm.m.e.end()));
    t.push_back(Term<K>{std::move(m), tm.c});
  }
  return p_normalize(k, std::move(t));
}

/* Generators of (gens) ∩ k[x_{block}, ...]: block order, then keep basis
 * elements free of the first `block` variables. */
template <class K>
std::vector<Polynomial<K>> eliminate_first_block(const K& k,
                                                 const std::vector<Polynomial<K>>& gens,
                                                 std::size_t block) {
  auto gb = groebner_basis(k, gens, MonomialOrder::eliminate_first(block));
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.polys) {
    bool pure = true;
    for (const auto& t : g.t)
      for (std::size_t i = 0; i < block && pure; ++i)
        if (t.m.e[i] > 0) pure = false;
    if (pure) out.push_back(g);
  }
  return out;
}

}  // namespace fibercone
