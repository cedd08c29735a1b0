#include "khr/verify.hpp"

#include <sstream>

#include "khr/errors.hpp"
#include "khr/formula.hpp"

namespace khr {

std::vector<IdentityResult> identity_suite(const KnotParams& params) {
  const int c = chi(params);
  std::vector<IdentityResult> out;
  for (const auto& path : enumerate_paths(params)) {
    const PathStats s = compute_stats(path);
    IdentityResult r;
    r.path = path.steps();
    r.chi = c;
    r.interior = static_cast<int>(s.interior.size());
    r.opairs = s.opairs;
    r.hplus = s.hplus;
    for (const auto& p : s.interior) r.sum_k_interior += s.kvals.at(p);
    for (const auto& p : s.inner) r.sum_k_inner += s.kvals.at(p);
    for (const auto& p : s.vstar) r.sum_k_vstar += s.kvals.at(p);
    r.i1 = r.interior + r.opairs == c;
    r.i2 = r.opairs - r.hplus == r.sum_k_interior - r.interior;
    r.i3 = r.hplus + r.sum_k_interior == c;
    r.i4 = r.sum_k_inner == r.sum_k_vstar;
    out.push_back(std::move(r));
  }
  return out;
}

CrossCheckResult cross_check(const KnotParams& params) {
  return cross_check(params, evaluate(params, WeightProfile::hhh()));
}

CrossCheckResult cross_check(const KnotParams& params, const SweepResult& sweep) {
  CrossCheckResult r;
  r.direct = hhh_direct(params);
  r.swept = sweep.total;
  r.leaf_count = sweep.leaves.size();
  r.totals_equal = r.direct == r.swept;

  const auto paths = enumerate_paths(params);
  r.bijective = paths.size() == sweep.leaves.size();
  for (std::size_t i = 0; r.bijective && i < paths.size(); ++i)
    r.bijective = paths[i] == sweep.leaves[i].path;

  for (const auto& leaf : sweep.leaves) {
    Invariant direct = hhh_summand(leaf.path);
    if (direct != leaf.value) r.mismatches.push_back({leaf.path.steps(), leaf.value, direct});
  }
  return r;
}

CoherenceResult sweep_coherence(const KnotParams& params) {
  return sweep_coherence(params, evaluate(params, WeightProfile::hhh()));
}

CoherenceResult sweep_coherence(const KnotParams& params, const SweepResult& sweep) {
  CoherenceResult r;
  r.leaf_count = sweep.leaves.size();
  r.expected_leaves = rational_catalan(params.m, params.n);
  for (const auto& leaf : sweep.leaves) {
    for (const auto& ev : leaf.record.events) {
      int want = -1;
      int got = -1;
      if (ev.tag == Tag::Split || ev.tag == Tag::Keep) {
        ++r.branch_events;
        want = k_of(leaf.path, ev.p);
        got = ev.k;
      } else if (ev.tag == Tag::Contract) {
        ++r.contract_events;
        want = k_of(leaf.path, ev.p);
        got = ev.k - 1;
      } else if (ev.tag == Tag::Terminal) {
        want = 1;
        got = ev.k;
      } else {
        continue;
      }
      if (want != got)
        r.failures.push_back(leaf.path.steps() + " " + std::string(to_string(ev.tag)) + " at " +
                             to_string(ev.p) + ": sweep index " + std::to_string(got) +
                             ", path k " + std::to_string(want));
    }
  }
  return r;
}

CatalanResult catalan_check(const KnotParams& params) {
  const Invariant hhh = hhh_direct(params);
  return {specialize_count(Invariant(hhh.numerator_over(1))), rational_catalan(params.m, params.n)};
}

bool sign_check(const KnotParams& params) {
  const int c = chi(params);
  const Invariant p = invariant_p(params);
  for (const auto& [e, coeff] : p.num().terms()) {
    const bool odd = ((e.a - c) % 2) != 0;
    if ((coeff < 0) != odd) return false;
  }
  return true;
}

bool parity_check(const SweepResult& sweep) { return is_even_series(sweep.total.num()); }

SymmetryResult symmetry_checks(const KnotParams& params) {
  const Invariant p = invariant_p(params);
  SymmetryResult r;
  r.mn_symmetry = p == invariant_p(KnotParams::make(params.n, params.m));
  r.qt_symmetry = swap_qt(p.num()) == p.num();
  return r;
}

DahaReport daha_report(const KnotParams& params) {
  const auto hhh = evaluate(params, WeightProfile::hhh());
  const auto scalar = evaluate(params, WeightProfile::scalar_i());
  KHR_ASSERT(hhh.leaves.size() == scalar.leaves.size(), "profiles disagree on the branch tree");
  const LaurentPoly factor =
      (LaurentPoly::constant(1) - var_a()) * (LaurentPoly::constant(1) - var_t());

  DahaReport r;
  r.all_monomial = true;
  r.single_monomial = true;
  for (std::size_t i = 0; i < hhh.leaves.size(); ++i) {
    KHR_ASSERT(hhh.leaves[i].path == scalar.leaves[i].path, "profiles disagree on leaf order");
    DahaLeaf leaf{hhh.leaves[i].path.steps(), scalar.leaves[i].value, hhh.leaves[i].value, {}};
    const Invariant scaled = factor * leaf.hhh_value;
    if (leaf.i_value.one_minus_t_pow() == 0 && scaled.one_minus_t_pow() == 0 && !scaled.is_zero())
      leaf.ratio = monomial_ratio(leaf.i_value.num(), scaled.num());
    if (!leaf.ratio)
      r.all_monomial = false;
    else if (!r.leaves.empty() && r.leaves.front().ratio && *r.leaves.front().ratio != *leaf.ratio)
      r.single_monomial = false;
    r.leaves.push_back(std::move(leaf));
  }
  r.single_monomial = r.single_monomial && r.all_monomial;
  return r;
}

VerifyOptions VerifyOptions::only(const std::string& suites) {
  VerifyOptions o;
  o.identities = o.cross = o.coherence = o.catalan = o.parity = o.signs = o.symmetry = o.daha =
      false;
  std::stringstream ss(suites);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name == "identities") o.identities = true;
    else if (name == "cross") o.cross = true;
    else if (name == "coherence") o.coherence = true;
    else if (name == "catalan") o.catalan = true;
    else if (name == "parity") o.parity = true;
    else if (name == "signs") o.signs = true;
    else if (name == "symmetry") o.symmetry = true;
    else if (name == "daha") o.daha = true;
    else if (name == "all") o = VerifyOptions{};
    else throw PreconditionError("unknown verification suite '" + name + "'");
  }
  return o;
}

VerificationReport verify(const KnotParams& params, const VerifyOptions& options) {
  VerificationReport r;
  r.params = KnotParams::make(params.m, params.n);
  r.options = options;
  bool pass = true;

  if (options.identities) {
    r.identities = identity_suite(r.params);
    for (const auto& id : r.identities) pass = pass && id.ok();
  }
  if (options.cross || options.coherence || options.parity) {
    const auto sweep = evaluate(r.params, WeightProfile::hhh());
    if (options.cross) {
      r.cross = cross_check(r.params, sweep);
      pass = pass && r.cross->pass();
    }
    if (options.coherence) {
      r.coherence = sweep_coherence(r.params, sweep);
      pass = pass && r.coherence->pass();
    }
    if (options.parity) {
      r.parity = parity_check(sweep);
      pass = pass && *r.parity;
    }
  }
  if (options.catalan) {
    r.catalan = catalan_check(r.params);
    pass = pass && r.catalan->pass();
  }
  if (options.signs) {
    r.signs = sign_check(r.params);
    pass = pass && *r.signs;
  }
  if (options.symmetry) {
    r.symmetry = symmetry_checks(r.params);
    const bool ok = r.symmetry->mn_symmetry && r.symmetry->qt_symmetry;
    if (!ok && options.symmetry_as_warning)
      r.warnings.push_back("external symmetry regression failed");
    else
      pass = pass && ok;
  }
  if (options.daha) {
    r.daha = daha_report(r.params);
    // Every ratio must be a signed monomial; a shared global monomial is only reported.
    pass = pass && r.daha->all_monomial;
  }
  r.pass = pass;
  return r;
}

namespace {

Json ratio_json(const std::optional<MonomialRatio>& ratio) {
  if (!ratio) return nullptr;
  return {{"sign", ratio->sign},
          {"a", ratio->exp.a},
          {"q2", ratio->exp.q2},
          {"t2", ratio->exp.t2},
          {"magnitude", std::to_string(ratio->magnitude)}};
}

}  // namespace

Json to_json(const VerificationReport& r) {
  Json j;
  j["m"] = r.params.m;
  j["n"] = r.params.n;
  if (r.options.identities) {
    Json ids = Json::array();
    for (const auto& id : r.identities)
      ids.push_back({{"path", id.path},
                     {"interior", id.interior},
                     {"opairs", id.opairs},
                     {"hplus", id.hplus},
                     {"sum_k_interior", id.sum_k_interior},
                     {"sum_k_inner", id.sum_k_inner},
                     {"sum_k_vstar", id.sum_k_vstar},
                     {"i1", id.i1},
                     {"i2", id.i2},
                     {"i3", id.i3},
                     {"i4", id.i4}});
    j["identities"] = ids;
  }
  if (r.cross) {
    Json mism = Json::array();
    for (const auto& m : r.cross->mismatches)
      mism.push_back({{"path", m.path}, {"sweep", to_json(m.swept)}, {"formula", to_json(m.direct)}});
    j["cross_check"] = {{"pass", r.cross->pass()},
                        {"totals_equal", r.cross->totals_equal},
                        {"bijective", r.cross->bijective},
                        {"leaves", r.cross->leaf_count},
                        {"total", to_json(r.cross->direct)},
                        {"mismatches", mism}};
  }
  if (r.coherence)
    j["coherence"] = {{"pass", r.coherence->pass()},
                      {"branch_events", r.coherence->branch_events},
                      {"contract_events", r.coherence->contract_events},
                      {"leaves", r.coherence->leaf_count},
                      {"expected_leaves", r.coherence->expected_leaves},
                      {"failures", r.coherence->failures}};
  if (r.catalan)
    j["catalan"] = {{"pass", r.catalan->pass()},
                    {"count", r.catalan->count},
                    {"expected", r.catalan->expected}};
  if (r.parity) j["parity"] = {{"pass", *r.parity}};
  if (r.signs) j["signs"] = {{"pass", *r.signs}};
  if (r.symmetry)
    j["symmetry"] = {{"external_property", true},
                     {"mn", r.symmetry->mn_symmetry},
                     {"qt", r.symmetry->qt_symmetry}};
  if (r.daha) {
    Json leaves = Json::array();
    for (const auto& l : r.daha->leaves)
      leaves.push_back({{"path", l.path}, {"ratio", ratio_json(l.ratio)}});
    j["daha"] = {{"all_monomial", r.daha->all_monomial},
                 {"single_monomial", r.daha->single_monomial},
                 {"leaves", leaves}};
  }
  j["warnings"] = r.warnings;
  j["pass"] = r.pass;
  return j;
}

std::string summary(const VerificationReport& r) {
  std::ostringstream out;
  auto line = [&](const std::string& name, bool ok, const std::string& detail = {}) {
    out << "  " << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << '\n';
  };
  out << "(" << r.params.m << "," << r.params.n << ")\n";
  if (r.options.identities) {
    std::size_t bad = 0;
    for (const auto& id : r.identities) bad += id.ok() ? 0 : 1;
    line("identities", bad == 0,
         std::to_string(r.identities.size()) + " paths, " + std::to_string(bad) + " failing");
  }
  if (r.cross)
    line("cross-check", r.cross->pass(),
         std::to_string(r.cross->leaf_count) + " leaves, " +
             std::to_string(r.cross->mismatches.size()) + " mismatches");
  if (r.coherence)
    line("coherence", r.coherence->pass(),
         std::to_string(r.coherence->branch_events) + " branch and " +
             std::to_string(r.coherence->contract_events) + " contraction events");
  if (r.catalan)
    line("catalan", r.catalan->pass(),
         std::to_string(r.catalan->count) + " vs " + std::to_string(r.catalan->expected));
  if (r.parity) line("parity", *r.parity);
  if (r.signs) line("signs", *r.signs);
  if (r.symmetry) {
    const bool ok = r.symmetry->mn_symmetry && r.symmetry->qt_symmetry;
    out << "  " << (ok ? "PASS" : (r.options.symmetry_as_warning ? "WARN" : "FAIL"))
        << "  symmetry [external property]  (m<->n " << (r.symmetry->mn_symmetry ? "ok" : "differs")
        << ", q<->t " << (r.symmetry->qt_symmetry ? "ok" : "differs") << ")\n";
  }
  if (r.daha) {
    line("daha ratios are monomials", r.daha->all_monomial);
    out << "  INFO  daha global monomial: " << (r.daha->single_monomial ? "shared" : "varies by leaf")
        << '\n';
    for (const auto& l : r.daha->leaves) {
      out << "        " << l.path << "  ";
      if (l.ratio)
        out << (l.ratio->sign < 0 ? "-" : "+")
            << render(LaurentPoly::monomial(l.ratio->exp, l.ratio->magnitude), RenderStyle::Text);
      else
        out << "not a monomial";
      out << '\n';
    }
  }
  out << (r.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace khr
