#pragma once
// Executes a parsed scenario over a configured coefficient field and renders
// the results as deterministic text and JSON. Route disagreements raise
// consistency errors; impossible requests (nilpotent filtrations asked for a
// multiplicity) are reported as skipped results, not failures.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fibercone/fc_sequence.hpp"
#include "fibercone/fiber.hpp"
#include "fibercone/scenario.hpp"
#include "fibercone/theorems.hpp"

namespace fibercone {

using json = nlohmann::ordered_json;

struct Config {
  bool rationals = false;
  unsigned long long p = 32003;
  std::optional<std::uint64_t> seed;
  unsigned n_max = 40;
  unsigned attempts = 32;
  unsigned t_max = 8;
};

struct RunResult {
  std::string text;
  json doc;
};

template <class K>
struct Workspace {
  RingPtr<K> ring;
  std::vector<std::pair<std::string, Ideal<K>>> ideals;
  std::vector<std::pair<std::string, Filtration<K>>> filtrations;

  const Ideal<K>& ideal(const std::string& n) const {
    for (auto& p : ideals)
      if (p.first == n) return p.second;
    throw precondition_error("unknown ideal: " + n);
  }
  const Filtration<K>& filtration(const std::string& n) const {
    for (auto& p : filtrations)
      if (p.first == n) return p.second;
    throw precondition_error("unknown filtration: " + n);
  }
};

template <class K>
Workspace<K> build_workspace(const Scenario& s, const K& field) {
  Workspace<K> w;
  const std::size_t nv = s.vars.size();
  auto free_ring = make_polynomial_ring(field, s.vars);
  if (s.relations.empty()) {
    w.ring = free_ring;
  } else {
    std::vector<Polynomial<K>> rels;
    for (auto& r : s.relations) rels.push_back(eval_expr(field, nv, r));
    w.ring = make_quotient(Ideal<K>::from_gens(free_ring, rels));
  }
  for (auto& [name, exprs] : s.ideals) {
    std::vector<Polynomial<K>> gens;
    for (auto& e : exprs) gens.push_back(eval_expr(field, nv, e));
    w.ideals.emplace_back(name, Ideal<K>::from_gens(w.ring, gens));
  }
  for (auto& [name, d] : s.filtrations) {
    switch (d.kind) {
      case FiltrationDecl::adic:
        w.filtrations.emplace_back(name, filtration_adic(w.ideal(d.ideal)));
        break;
      case FiltrationDecl::seeded: {
        std::vector<Ideal<K>> seeds;
        for (auto& sn : d.seeds) seeds.push_back(w.ideal(sn));
        w.filtrations.emplace_back(
            name, filtration_seeded<K>(std::move(seeds), d.u, d.unchecked));
        break;
      }
      case FiltrationDecl::rescaled:
        w.filtrations.emplace_back(name, rescale(w.filtration(d.base), d.t));
        break;
      case FiltrationDecl::quotient:
        w.filtrations.emplace_back(
            name, filtration_quotient(w.filtration(d.base), w.ideal(d.ideal)));
        break;
    }
  }
  return w;
}

namespace detail {

inline std::string yn(bool b) { return b ? "yes" : "no"; }

inline json fiber_to_json(const FiberTable& t) {
  json out;
  out["lo"] = t.lo;
  out["hi"] = t.hi;
  out["values"] = t.values;
  out["spread"] = t.spread;
  out["poly"] = t.poly;
  out["nilpotent"] = t.nilpotent;
  return out;
}

inline std::string fiber_to_text(const FiberTable& t) {
  std::string s = "  h(" + std::to_string(t.lo) + ".." + std::to_string(t.hi) + ") =";
  const std::size_t shown = t.values.size() > 12 ? 12 : t.values.size();
  for (std::size_t i = 0; i < shown; ++i) s += " " + std::to_string(t.values[i]);
  if (shown < t.values.size()) s += " ...";
  s += "\n  eventual polynomial in n: [";
  for (std::size_t i = 0; i < t.poly.size(); ++i) s += (i ? ", " : "") + t.poly[i];
  s += "]  (constant term first)\n";
  return s;
}

template <class K>
json reduction_to_json(const K& k, const std::vector<std::string>& vars,
                       const ReductionData<K>& red) {
  json out;
  out["is_reduction"] = red.is_reduction;
  out["reduction_number"] = red.r;
  out["first_hit"] = red.first_hit;
  out["persist_from"] = red.persist_from;
  out["checked_to"] = red.checked_to;
  out["bound"] = red.bound;
  json gens = json::array();
  for (auto& g : red.gens) gens.push_back(p_to_string(k, g, vars));
  out["gens"] = gens;
  return out;
}

template <class K>
json sequence_to_json(const K& k, const std::vector<std::string>& vars,
                      const WeakFCSequence<K>& seq) {
  json out;
  out["seed"] = seq.seed;
  out["length"] = seq.lifts.size();
  out["maximal"] = seq.maximal;
  json lifts = json::array();
  for (auto& l : seq.lifts) lifts.push_back(p_to_string(k, l, vars));
  out["lifts"] = lifts;
  json certs = json::array();
  for (auto& c : seq.certificates) {
    json jc;
    jc["lift"] = p_to_string(k, c.lift, vars);
    json coeffs = json::array();
    for (auto& a : c.coefficients) coeffs.push_back(k.to_string(a));
    jc["coefficients"] = coeffs;
    jc["annihilator_condition"] = c.fc2;
    jc["window_law"] = c.fc1;
    jc["window"] = {c.fc1_m_max, c.fc1_n_lo, c.fc1_n_hi};
    jc["superficial"] = c.superficial;
    jc["superficial_c"] = c.superficial_c;
    jc["spread_before"] = c.spread_before;
    jc["spread_after"] = c.spread_after;
    jc["attempts_used"] = c.attempts_used;
    certs.push_back(jc);
  }
  out["certificates"] = certs;
  return out;
}

template <class K>
std::string sequence_to_text(const K& k, const std::vector<std::string>& vars,
                             const WeakFCSequence<K>& seq) {
  std::string s = "  sequence: seed=" + std::to_string(seq.seed) +
                  " length=" + std::to_string(seq.lifts.size()) +
                  " maximal=" + yn(seq.maximal) + "\n";
  for (std::size_t i = 0; i < seq.certificates.size(); ++i) {
    const auto& c = seq.certificates[i];
    s += "    step " + std::to_string(i + 1) + ": lift = " +
         p_to_string(k, seq.lifts[i], vars) +
         " | annihilator=" + yn(c.fc2) + " window=" + yn(c.fc1) + "(m<=" +
         std::to_string(c.fc1_m_max) + ", n " + std::to_string(c.fc1_n_lo) +
         ".." + std::to_string(c.fc1_n_hi) + ")" +
         " superficial=" + yn(c.superficial) + "(c=" +
         std::to_string(c.superficial_c) + ") spread " +
         std::to_string(c.spread_before) + "->" +
         std::to_string(c.spread_after) + " attempts=" +
         std::to_string(c.attempts_used) + "\n";
  }
  return s;
}

inline json length_bounds_to_json(const LengthComparison& lc) {
  json out;
  out["i"] = lc.i;
  out["lower"] = lc.lower;
  out["middle"] = lc.middle;
  out["upper"] = lc.upper;
  out["equality"] = lc.equality;
  out["membership"] = lc.membership;
  out["membership_all"] = lc.membership_all;
  return out;
}

inline std::string skip_reason() {
  return "the filtration is nilpotent: its fiber function is eventually zero, "
         "so there is no spread, reduction, or multiplicity to compare";
}

/* Shared state threaded through the task handlers. */
template <class K>
struct Runner {
  const Workspace<K>& ws;
  const Config& cfg;
  const K& k;
  const std::vector<std::string>& vars;
  json results = json::array();
  json agreements = json::array();
  std::string text;

  std::uint64_t task_seed(std::size_t index) const {
    if (!cfg.seed)
      throw precondition_error(
          "this task draws random coefficients; pass a seed");
    return *cfg.seed + 1000003ull * static_cast<std::uint64_t>(index);
  }

  void agree(std::size_t index, const std::string& check, bool ok) {
    json a;
    a["task"] = index;
    a["check"] = check;
    a["agreement"] = ok;
    agreements.push_back(a);
    text += "  agreement[" + check + "] = " + yn(ok) + "\n";
    if (!ok)
      throw consistency_error("routes disagree on " + check +
                              " for task " + std::to_string(index + 1));
  }

  void run_spread(const TaskDecl& t) {
    const auto& f = ws.filtration(t.args[0]);
    auto tab = fiber_table(f, maximal_ideal(f.ring()), cfg.n_max);
    json r;
    r["task"] = "spread";
    r["filtration"] = t.args[0];
    r["spread"] = tab.spread;
    r["fiber"] = fiber_to_json(tab);
    results.push_back(r);
    text += fiber_to_text(tab);
    text += "  spread = " + std::to_string(tab.spread) + "\n";
  }

  void run_reduction(const TaskDecl& t) {
    const auto& f = ws.filtration(t.args[0]);
    const auto& cand = ws.ideal(t.args[1]);
    auto red = verify_reduction(f, cand.gens(), cfg.n_max);
    json r;
    r["task"] = "reduction";
    r["filtration"] = t.args[0];
    r["candidate"] = t.args[1];
    r["reduction"] = reduction_to_json(k, vars, red);
    r["reduction_number"] = red.r;
    results.push_back(r);
    text += "  candidate " + t.args[1] + ": is_reduction=" + yn(red.is_reduction);
    if (red.is_reduction)
      text += " reduction_number=" + std::to_string(red.r) + " (checked to n=" +
              std::to_string(red.checked_to) + ", persists from " +
              std::to_string(red.persist_from) + ")";
    else
      text += " (scanned to n=" + std::to_string(red.bound) + ")";
    text += "\n";
  }

  void run_fc_sequence(std::size_t index, const TaskDecl& t) {
    const auto& f = ws.filtration(t.args[0]);
    const auto& j = ws.ideal(t.args[1]);
    auto seq = find_weak_fc_sequence(f, j, {}, task_seed(index), cfg.attempts);
    json r;
    r["task"] = "fc-sequence";
    r["filtration"] = t.args[0];
    r["j"] = t.args[1];
    r["sequence"] = sequence_to_json(k, vars, seq);
    results.push_back(r);
    text += sequence_to_text(k, vars, seq);
  }

  void run_multiplicity(std::size_t index, const TaskDecl& t) {
    const auto& f = ws.filtration(t.args[0]);
    const auto& j = ws.ideal(t.args[1]);
    auto tab = fiber_table(f, maximal_ideal(f.ring()), cfg.n_max);
    json r;
    r["task"] = "multiplicity";
    r["filtration"] = t.args[0];
    r["j"] = t.args[1];
    r["spread"] = tab.spread;
    if (tab.nilpotent) {
      r["skipped"] = skip_reason();
      results.push_back(r);
      text += "  skipped: " + skip_reason() + "\n";
      return;
    }
    auto seq = find_weak_fc_sequence(f, j, {}, task_seed(index), cfg.attempts);
    auto red = reduction_from_sequence(seq);
    auto mc = multiplicity_at_reduction(f, j, seq, red, cfg.n_max);
    r["reduction_number"] = mc.r;
    r["multiplicity_thm33"] = mc.value;
    r["multiplicity_values"] = mc.values;
    r["multiplicity_limit"] = mc.limit_value;
    r["agreement"] = mc.agreement;
    r["sequence"] = sequence_to_json(k, vars, seq);
    text += "  reduction_number = " + std::to_string(mc.r) + "\n";
    text += "  multiplicity_thm33 = " + std::to_string(mc.value) +
            "  values(r..r+2) =";
    for (auto v : mc.values) text += " " + std::to_string(v);
    text += "\n  multiplicity_limit = " + std::to_string(mc.limit_value) + "\n";
    if (tab.spread == 1 && red.gens.size() == 1) {
      auto so = multiplicity_spread_one(f, j, red, cfg.n_max);
      json sj;
      sj["route"] = so.route;
      sj["value"] = so.value;
      sj["values"] = so.values;
      sj["agreement"] = so.agreement;
      r["spread_one"] = sj;
      text += "  spread-one route " + std::to_string(so.route) +
              ": value = " + std::to_string(so.value) + "\n";
      results.push_back(r);
      agree(index, "multiplicity", mc.agreement);
      agree(index, "spread-one-multiplicity", so.agreement && so.value == mc.value);
      return;
    }
    results.push_back(r);
    agree(index, "multiplicity", mc.agreement);
  }

  void run_cm(std::size_t index, const TaskDecl& t) {
    const auto& f = ws.filtration(t.args[0]);
    const auto& j = ws.ideal(t.args[1]);
    auto tab = fiber_table(f, maximal_ideal(f.ring()), cfg.n_max);
    json r;
    r["task"] = "cm";
    r["filtration"] = t.args[0];
    r["j"] = t.args[1];
    r["spread"] = tab.spread;
    if (tab.nilpotent) {
      r["skipped"] = skip_reason();
      results.push_back(r);
      text += "  skipped: " + skip_reason() + "\n";
      return;
    }
    auto seq = find_weak_fc_sequence(f, j, {}, task_seed(index), cfg.attempts);
    auto red = reduction_from_sequence(seq);
    auto cmp = cm_compare(f, j, seq, red, cfg.n_max);
    r["reduction_number"] = cmp.conditions.r;
    r["cm_thm42"] = cmp.conditions.cm;
    r["cm_direct"] = cmp.lengths.cm;
    r["containments"] = cmp.conditions.containments;
    r["equalities"] = cmp.conditions.equalities;
    r["length"] = cmp.lengths.length;
    r["multiplicity_thm33"] = cmp.lengths.multiplicity;
    r["agreement"] = cmp.agreement;
    r["sequence"] = sequence_to_json(k, vars, seq);
    results.push_back(r);
    text += "  reduction_number = " + std::to_string(cmp.conditions.r) + "\n";
    text += "  cm_thm42 = " + yn(cmp.conditions.cm) +
            "  cm_direct = " + yn(cmp.lengths.cm) +
            "  (L = " + std::to_string(cmp.lengths.length) +
            ", e = " + std::to_string(cmp.lengths.multiplicity) + ")\n";
    agree(index, "cm", cmp.agreement);
  }

  void run_cor43_scan(std::size_t index, const TaskDecl& t) {
    const auto& f = ws.filtration(t.args[0]);
    auto scan = rescale_cm_scan(f, cfg.t_max, task_seed(index), cfg.attempts,
                                cfg.n_max);
    json r;
    r["task"] = "cor43-scan";
    r["filtration"] = t.args[0];
    r["t0"] = scan.t0;
    json verdicts = json::array();
    bool all = true;
    for (auto& v : scan.verdicts) {
      json jv;
      jv["t"] = v.t;
      jv["cm_thm42"] = v.cm_conditions;
      jv["cm_direct"] = v.cm_lengths;
      jv["agreement"] = v.agreement;
      verdicts.push_back(jv);
      all = all && v.agreement;
      text += "  t=" + std::to_string(v.t) + " cm_thm42=" + yn(v.cm_conditions) +
              " cm_direct=" + yn(v.cm_lengths) + "\n";
    }
    r["verdicts"] = verdicts;
    results.push_back(r);
    text += "  t0 = " + std::to_string(scan.t0) + "\n";
    agree(index, "rescale-cm", all);
  }

  void run_report(std::size_t index, const TaskDecl& t) {
    const auto& f = ws.filtration(t.args[0]);
    const auto& j = ws.ideal(t.args[1]);
    auto tab = fiber_table(f, maximal_ideal(f.ring()), cfg.n_max);
    json r;
    r["task"] = "report";
    r["filtration"] = t.args[0];
    r["j"] = t.args[1];
    r["fiber"] = fiber_to_json(tab);
    r["spread"] = tab.spread;
    text += fiber_to_text(tab);
    text += "  spread = " + std::to_string(tab.spread) + "\n";
    if (tab.nilpotent) {
      r["skipped"] = skip_reason();
      results.push_back(r);
      text += "  skipped: " + skip_reason() + "\n";
      return;
    }
    auto seq = find_weak_fc_sequence(f, j, {}, task_seed(index), cfg.attempts);
    auto red = reduction_from_sequence(seq);
    r["sequence"] = sequence_to_json(k, vars, seq);
    r["reduction"] = reduction_to_json(k, vars, red);
    r["reduction_number"] = red.r;
    text += sequence_to_text(k, vars, seq);
    text += "  reduction_number = " + std::to_string(red.r) + "\n";

    auto mc = multiplicity_at_reduction(f, j, seq, red, cfg.n_max);
    r["multiplicity_thm33"] = mc.value;
    r["multiplicity_values"] = mc.values;
    r["multiplicity_limit"] = mc.limit_value;
    text += "  multiplicity_thm33 = " + std::to_string(mc.value) +
            "  values(r..r+2) =";
    for (auto v : mc.values) text += " " + std::to_string(v);
    text += "\n  multiplicity_limit = " + std::to_string(mc.limit_value) + "\n";

    auto cmp = cm_compare(f, j, seq, red, cfg.n_max);
    r["cm_thm42"] = cmp.conditions.cm;
    r["cm_direct"] = cmp.lengths.cm;
    r["containments"] = cmp.conditions.containments;
    r["equalities"] = cmp.conditions.equalities;
    r["length"] = cmp.lengths.length;
    text += "  cm_thm42 = " + detail::yn(cmp.conditions.cm) +
            "  cm_direct = " + detail::yn(cmp.lengths.cm) +
            "  (L = " + std::to_string(cmp.lengths.length) +
            ", e = " + std::to_string(cmp.lengths.multiplicity) + ")\n";

    json bounds = json::array();
    bool bounds_ok = true;
    for (unsigned i = 0; i < seq.lifts.size(); ++i) {
      auto lc = parameter_length_bounds(f, j, seq, red, i);
      bounds.push_back(length_bounds_to_json(lc));
      bounds_ok = bounds_ok && (lc.equality == lc.membership_all);
      text += "  lengths(i=" + std::to_string(i) + "): " +
              std::to_string(lc.lower) + " <= " + std::to_string(lc.middle) +
              " <= " + std::to_string(lc.upper) +
              "  equality=" + yn(lc.equality) + "\n";
    }
    r["length_bounds"] = bounds;

    bool minimal_id = reduction_minimality_identity(f, red);
    r["minimality_identity"] = minimal_id;

    if (tab.spread == 1 && red.gens.size() == 1) {
      auto so = multiplicity_spread_one(f, j, red, cfg.n_max);
      json sj;
      sj["route"] = so.route;
      sj["value"] = so.value;
      sj["agreement"] = so.agreement;
      r["spread_one"] = sj;
      text += "  spread-one route " + std::to_string(so.route) +
              ": value = " + std::to_string(so.value) + "\n";
      bool regular = colon(Ideal<K>::zero(f.ring()), f.base_ideal()) ==
                     Ideal<K>::zero(f.ring());
      if (regular && so.route == 1) {
        auto pc = cm_spread_one_principal(f, j, red, cfg.n_max);
        json pj;
        pj["cm"] = pc.cm;
        pj["per_n"] = pc.per_n;
        r["cm_principal"] = pj;
        text += "  principal criterion: cm = " + yn(pc.cm) + "\n";
        results.push_back(r);
        agree(index, "multiplicity", mc.agreement);
        agree(index, "spread-one-multiplicity",
              so.agreement && so.value == mc.value);
        agree(index, "cm", cmp.agreement);
        agree(index, "cm-principal", pc.cm == cmp.conditions.cm);
        agree(index, "length-bounds", bounds_ok);
        agree(index, "minimality", minimal_id);
        return;
      }
      results.push_back(r);
      agree(index, "multiplicity", mc.agreement);
      agree(index, "spread-one-multiplicity",
            so.agreement && so.value == mc.value);
      agree(index, "cm", cmp.agreement);
      agree(index, "length-bounds", bounds_ok);
      agree(index, "minimality", minimal_id);
      return;
    }
    results.push_back(r);
    agree(index, "multiplicity", mc.agreement);
    agree(index, "cm", cmp.agreement);
    agree(index, "length-bounds", bounds_ok);
    agree(index, "minimality", minimal_id);
  }
};

}  // namespace detail

template <class K>
RunResult run_scenario(const Scenario& s, const std::string& name,
                       const Config& cfg, const K& field) {
  auto ws = build_workspace(s, field);
  detail::Runner<K> run{ws, cfg, field, s.vars};

  run.text += "scenario " + name + "\n";
  run.text += "ring " + ring_to_string(*ws.ring) + "\n";
  run.text += "field " + field.name() + "  seed ";
  run.text += cfg.seed ? std::to_string(*cfg.seed) : std::string("-");
  run.text += "  n_max " + std::to_string(cfg.n_max) + "  attempts " +
              std::to_string(cfg.attempts) + "  t_max " +
              std::to_string(cfg.t_max) + "\n";

  for (std::size_t i = 0; i < s.tasks.size(); ++i) {
    const auto& t = s.tasks[i];
    run.text += "\ntask " + std::to_string(i + 1) + ": " + t.kind;
    for (auto& a : t.args) run.text += " " + a;
    run.text += "\n";
    if (t.kind == "spread")
      run.run_spread(t);
    else if (t.kind == "reduction")
      run.run_reduction(t);
    else if (t.kind == "fc-sequence")
      run.run_fc_sequence(i, t);
    else if (t.kind == "multiplicity")
      run.run_multiplicity(i, t);
    else if (t.kind == "cm")
      run.run_cm(i, t);
    else if (t.kind == "cor43-scan")
      run.run_cor43_scan(i, t);
    else if (t.kind == "report")
      run.run_report(i, t);
    else
      throw precondition_error("unknown task kind: " + t.kind);
  }

  json doc;
  doc["scenario"] = name;
  json jc;
  jc["field"] = field.name();
  jc["n_max"] = cfg.n_max;
  jc["attempts"] = cfg.attempts;
  jc["t_max"] = cfg.t_max;
  doc["config"] = jc;
  doc["results"] = run.results;
  doc["agreements"] = run.agreements;
  if (cfg.seed)
    doc["seed"] = *cfg.seed;
  else
    doc["seed"] = nullptr;
  return {run.text, doc};
}

}  // namespace fibercone
