#include "edim/engine.hpp"

#include <algorithm>

namespace edim::engine {

using basis_search::LiftMode;
using basis_search::SocleTable;

namespace {

constexpr std::size_t kOptimalBasisLimit = 64;
constexpr std::size_t kComboBudget = 4096;
constexpr std::size_t kRelaxedBasisCap = 5000;
constexpr std::size_t kRelaxedOptionsPerElement = 8;

std::string coords_text(const abelian::Coords& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

std::string reps_text(const SemisimpleGroup& g, const Character& chi) {
  std::string out;
  for (auto i : catalog::support(g.spec.factors, chi)) {
    if (!out.empty()) out += " x ";
    out += repdata::to_string(repdata::rep_choice(g.factor(i), g.component(chi, i))) + " of " + g.factor(i).name();
  }
  return out.empty() ? "trivial" : out;
}

freeness::FreenessVerdict safe_verdict(const SemisimpleGroup& g, const Character& chi) {
  try {
    return freeness::check_character(g, chi);
  } catch (const Error& e) {
    return {false, freeness::Reason::CriterionFailed, 0, e.detail()};
  }
}

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

void add_common_caveats(const SemisimpleGroup& g, std::int64_t p, EdReport& r) {
  r.caveats.push_back("char(k) ≠ " + std::to_string(p) + " assumed");
  if (g.permuted()) {
    std::string perm;
    for (auto i : g.permutation) perm += (perm.empty() ? "" : ",") + std::to_string(i);
    r.caveats.push_back("factors reordered by descending parameter; input index of each factor: [" + perm + "]");
  }
  for (const auto& f : g.spec.factors) {
    if (f.family() == catalog::Family::Sp && !is_power_of_two(f.parameter())) {
      r.caveats.push_back("Sp rank not a 2-power: exactness unavailable");
      break;
    }
  }
}

void add_outcome_caveats(const SemisimpleGroup& g, EdReport& r) {
  if (r.exact) r.caveats.push_back("ed(G) = ed_p(G) holds here as a remark; it is not certified");
  if (r.lower && *r.lower < 0) r.caveats.push_back("lower bound is negative, hence vacuous");
  if (g.factor_count() == 1 && g.factor(0).family() == catalog::Family::SpinEven && !r.exact) {
    const auto n = g.factor(0).parameter();
    if (n == 16)
      r.caveats.push_back(
          "Spin(16): the half-spin and vector representations are both listed as not generically free "
          "(rows 1 and 8), so the exact value is left open");
    else if (n % 4 == 0 && n >= 20)
      r.caveats.push_back("Spin(" + std::to_string(n) +
                          "), 4 | n: the exact value needs a central extension; use extend with a suitable (H, nu)");
  }
}

EdReport skeleton(const SemisimpleGroup& g, std::int64_t p) {
  EdReport r;
  r.group = g.spec;
  r.permutation = g.permutation;
  r.family = g.family_tag;
  r.prime = p;
  r.dim_g = g.dim_g;
  r.rank_z = g.rank_z;
  r.center_structure = g.char_group.structure().orders();
  return r;
}

BasisEntry make_entry(const SemisimpleGroup& g, const SocleTable& table, const Character& chi) {
  BasisEntry e;
  e.character = chi;
  e.socle_image = table.socle().restrict(chi);
  if (!e.socle_image.is_zero()) {
    const auto& se = table.lookup(e.socle_image);
    e.n_socle = se.n.value;
    e.n_socle_exact = se.exact();
  } else {
    e.n_socle = 0;
    e.n_socle_exact = false;
  }
  e.support = catalog::support(g.spec.factors, chi);
  if (std::all_of(e.support.begin(), e.support.end(),
                  [&](std::size_t i) { return repdata::supported_component(g.factor(i), g.component(chi, i)); })) {
    e.dim_v = repdata::dim_V(g, chi);
    for (const auto& rc : repdata::rep_choices(g, chi)) e.reps.push_back(repdata::to_string(rc));
  } else {
    e.dim_v = 0;
    for (std::size_t i = 0; i < g.factor_count(); ++i) e.reps.push_back("untabulated");
  }
  e.verdict = safe_verdict(g, chi);
  return e;
}

// Cartesian product over per-element options, visiting at most `budget` tuples.
template <class Visit>
void for_each_choice(const std::vector<std::size_t>& sizes, std::size_t budget, Visit visit) {
  for (auto s : sizes)
    if (s == 0) return;
  std::vector<std::int64_t> radices(sizes.begin(), sizes.end());
  std::size_t seen = 0;
  abelian::for_each_tuple(radices, [&](const abelian::Coords& c) {
    if (seen++ >= budget) return false;
    return visit(c);
  });
}

}  // namespace

bool center_is_p_group(const SemisimpleGroup& g, std::int64_t p) {
  for (auto d : g.char_group.structure().orders()) {
    while (d % p == 0) d /= p;
    if (d != 1) return false;
  }
  return true;
}

BigInt upper_bound(const SemisimpleGroup& g, const std::vector<Character>& basis,
                   const std::vector<std::size_t>& b0) {
  auto fail = [](const std::string& d) { return Error(ErrorKind::HypothesisFailed, d); };
  if (basis.size() != g.rank_z)
    throw fail("basis has " + std::to_string(basis.size()) + " characters but rank Z(G) = " +
               std::to_string(g.rank_z));
  for (const auto& chi : basis)
    if (!g.char_group.contains(chi)) throw fail("character " + coords_text(chi.coords) + " is not in Z(G)^*");
  if (abelian::Subgroup<Character>(g.center_tilde, basis).order() != g.char_group.order())
    throw fail("basis does not generate Z(G)^*");
  std::vector<bool> covered(g.factor_count(), false);
  for (auto i : b0) {
    if (i >= basis.size()) throw fail("B0 index out of range");
    const auto v = safe_verdict(g, basis[i]);
    if (!v.free)
      throw fail("NotGenericallyFree: " + coords_text(basis[i].coords) + " " + freeness::to_string(v));
    for (auto s : catalog::support(g.spec.factors, basis[i])) covered[s] = true;
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
    throw fail("SupportNotCovering: supports of B0 miss a factor");
  BigInt sum = 0;
  for (const auto& chi : basis) sum += repdata::dim_V(g, chi);
  return sum - g.dim_g;
}

BigInt upper_bound_red(const SemisimpleGroup& g, const std::vector<Character>& basis,
                       const std::vector<std::size_t>& b0) {
  return upper_bound(g, basis, b0) - g.rank_z;
}

BigInt lower_bound(const SemisimpleGroup& g, std::int64_t p) {
  SocleTable table(g, p);
  const auto search = basis_search::index_minimal_bases(table, 1);
  if (!search.certified)
    throw Error(ErrorKind::HypothesisFailed, "n-values of the socle dual are not all exact");
  return search.best_score - g.dim_g;
}

EdReport certify_exact(const SemisimpleGroup& g, std::int64_t p, const std::vector<Character>& basis,
                       const std::vector<std::size_t>& b0) {
  EdReport r = skeleton(g, p);
  SocleTable table(g, p);
  const auto search = basis_search::index_minimal_bases(table, 1);
  r.index_minimal_score = search.best_score;
  if (search.certified)
    r.lower = search.best_score - g.dim_g;
  else
    r.hypothesis_failures.push_back("n-values of the socle dual are not all exact; no lower bound");

  for (const auto& chi : basis) r.basis.push_back(make_entry(g, table, chi));
  for (auto i : b0)
    if (i < r.basis.size()) r.basis[i].in_b0 = true;
  r.b0 = b0;

  try {
    const BigInt up = upper_bound(g, basis, b0);
    r.upper = up;
    r.ed_red_upper = up - g.rank_z;
  } catch (const Error& e) {
    r.hypothesis_failures.push_back(e.detail());
  }

  bool ok = r.lower.has_value() && r.upper.has_value();
  std::vector<Character> images;
  BigInt score = 0;
  for (const auto& e : r.basis) {
    images.push_back(e.socle_image);
    score += e.n_socle;
    if (!e.n_socle_exact) {
      ok = false;
    } else if (e.dim_v != e.n_socle) {
      ok = false;
      r.hypothesis_failures.push_back("dim V = " + to_decimal(e.dim_v) + " differs from n = " + to_decimal(e.n_socle) +
                                      " for " + coords_text(e.character.coords));
    }
  }
  if (images.size() != table.rank() || !basis_search::independent_mod_p(images, p)) {
    ok = false;
    r.hypothesis_failures.push_back("socle images do not form a basis of the socle dual");
  } else if (score != search.best_score) {
    ok = false;
    r.hypothesis_failures.push_back("socle basis score " + to_decimal(score) + " is not index-minimal (" +
                                    to_decimal(search.best_score) + ")");
  }
  if (ok && *r.lower == *r.upper) {
    r.exact = true;
    r.ed = r.upper;
    if (center_is_p_group(g, p)) {
      r.ed_red_exact = true;
      r.ed_red = *r.ed - g.rank_z;
    }
  }
  add_common_caveats(g, p, r);
  if (r.upper && !r.ed_red_exact && r.exact)
    r.caveats.push_back("Z(G) is not a " + std::to_string(p) + "-group: ed(G_red) is an upper bound only");
  add_outcome_caveats(g, r);
  return r;
}

EdReport compute_ed(const GroupSpec& spec, std::optional<std::int64_t> prime) {
  const SemisimpleGroup g = catalog::build(spec);
  if (!catalog::is_reduced(g))
    throw Error(ErrorKind::NotReduced, "a factor's whole center lies in mu, so an adjoint factor splits off");
  const std::int64_t p = prime.value_or(g.prime);
  SocleTable table(g, p);
  const auto search = basis_search::index_minimal_bases(table, kOptimalBasisLimit);

  std::vector<std::string> failures;
  // Exact route: lifts with dim V = n(chi-bar) of an index-minimal basis.
  for (std::size_t bi = 0; bi < search.optimal.size(); ++bi) {
    const auto& sb = search.optimal[bi];
    std::vector<std::vector<Character>> options(sb.size());
    bool usable = true;
    for (std::size_t j = 0; j < sb.size(); ++j) {
      const auto& entry = table.lookup(sb[j]);
      if (!entry.exact()) {
        if (bi == 0)
          failures.push_back("n of socle character " + coords_text(sb[j].coords) + " is only an upper estimate");
        usable = false;
        continue;
      }
      for (auto& opt : basis_search::lift_options(g, table.socle(), sb[j], LiftMode::Exact))
        if (opt.dim_v == entry.n.value) options[j].push_back(std::move(opt.chi));
      if (options[j].empty()) {
        if (bi == 0)
          failures.push_back("socle character " + coords_text(sb[j].coords) + " has no lift with dim V = n = " +
                             to_decimal(entry.n.value));
        usable = false;
      }
    }
    if (!usable) continue;
    std::vector<std::size_t> sizes;
    for (const auto& o : options) sizes.push_back(o.size());
    std::optional<EdReport> found;
    for_each_choice(sizes, kComboBudget, [&](const abelian::Coords& c) {
      std::vector<Character> lifts;
      for (std::size_t j = 0; j < c.size(); ++j) lifts.push_back(options[j][static_cast<std::size_t>(c[j])]);
      const auto b0 = basis_search::select_b0(g, lifts);
      if (!b0) return true;
      auto r = certify_exact(g, p, lifts, *b0);
      if (!r.exact) return true;
      found = std::move(r);
      return false;
    });
    if (found) return *found;
    if (bi == 0) {
      for (std::size_t j = 0; j < sb.size(); ++j) {
        const auto& chi = options[j].front();
        failures.push_back(coords_text(chi.coords) + " [" + reps_text(g, chi) +
                           "]: " + freeness::to_string(safe_verdict(g, chi)));
      }
      failures.push_back("no generically free subset of the lifted basis covers every factor");
    }
  }

  // Relaxed route: best available upper bound from any basis.
  std::optional<BigInt> best_sum;
  std::vector<Character> best_basis;
  std::vector<std::size_t> best_b0;
  for (const auto& [score, sb] : basis_search::all_bases(table, kRelaxedBasisCap)) {
    std::vector<std::vector<basis_search::LiftOption>> options;
    for (const auto& s : sb) {
      auto opts = basis_search::lift_options(g, table.socle(), s, LiftMode::Relaxed);
      if (opts.size() > kRelaxedOptionsPerElement) opts.resize(kRelaxedOptionsPerElement);
      options.push_back(std::move(opts));
    }
    BigInt floor = 0;
    bool empty = false;
    for (const auto& o : options) {
      if (o.empty()) empty = true;
      else floor += o.front().dim_v;
    }
    if (empty || (best_sum && floor >= *best_sum)) continue;
    std::vector<std::size_t> sizes;
    for (const auto& o : options) sizes.push_back(o.size());
    for_each_choice(sizes, kComboBudget, [&](const abelian::Coords& c) {
      BigInt sum = 0;
      std::vector<Character> lifts;
      for (std::size_t j = 0; j < c.size(); ++j) {
        const auto& opt = options[j][static_cast<std::size_t>(c[j])];
        sum += opt.dim_v;
        lifts.push_back(opt.chi);
      }
      if (best_sum && sum >= *best_sum) return true;
      const auto b0 = basis_search::select_b0(g, lifts);
      if (!b0) return true;
      best_sum = sum;
      best_basis = std::move(lifts);
      best_b0 = *b0;
      return true;
    });
  }

  EdReport r;
  if (best_sum) {
    r = certify_exact(g, p, best_basis, best_b0);
  } else {
    // No upper bound: report the first index-minimal basis with its lifts.
    std::vector<Character> lifts;
    for (const auto& s : search.optimal.front()) {
      auto opts = basis_search::lift_options(g, table.socle(), s, LiftMode::Relaxed);
      lifts.push_back(opts.empty() ? table.socle().representative(s) : opts.front().chi);
    }
    r = certify_exact(g, p, lifts, {});
    std::erase_if(r.hypothesis_failures,
                  [](const std::string& s) { return s.starts_with("SupportNotCovering"); });
    r.hypothesis_failures.push_back("no basis lifting admits a generically free covering subset; no upper bound");
  }
  std::vector<std::string> all = failures;
  all.insert(all.end(), r.hypothesis_failures.begin(), r.hypothesis_failures.end());
  r.hypothesis_failures = std::move(all);
  return r;
}

EdReport extend_ed(const GroupSpec& h_spec, const GroupElement& nu_input, std::optional<std::int64_t> prime) {
  const SemisimpleGroup hg = catalog::build(h_spec);
  if (!catalog::is_reduced(hg))
    throw Error(ErrorKind::NotReduced, "a factor's whole center lies in mu, so an adjoint factor splits off");
  const std::int64_t p = prime.value_or(hg.prime);
  const auto fail = [](const std::string& d) { return Error(ErrorKind::ExtensionHypothesisFailed, d); };

  if (nu_input.size() != hg.center_tilde.size())
    throw Error(ErrorKind::ArityMismatch, "nu has " + std::to_string(nu_input.size()) + " coordinates, expected " +
                                              std::to_string(hg.center_tilde.size()));
  abelian::validate(hg.center_tilde, nu_input.coords);
  const GroupElement nu =
      catalog::permute(GroupSpec{h_spec.factors, {nu_input}}, hg.permutation).mu_generators.front();

  const abelian::SubgroupPresentation mu_h(hg.center_tilde, hg.spec.mu_generators);
  if (mu_h.contains(nu)) throw fail("nu is trivial in Z(H)");
  if (!mu_h.contains(GroupElement{abelian::scale(hg.center_tilde, p, nu.coords)}))
    throw fail("nu does not have order " + std::to_string(p) + " in Z(H)");

  GroupSpec g_spec = hg.spec;
  g_spec.mu_generators.push_back(nu);

  std::vector<std::string> failures;
  auto downgrade = [&](const std::string& why) {
    EdReport r = compute_ed(h_spec, p);
    r.hypothesis_failures.push_back("extension: " + why);
    return r;
  };

  EdReport g_report;
  try {
    g_report = compute_ed(g_spec, p);
  } catch (const Error& e) {
    return downgrade("H / nu: " + std::string(e.what()));
  }
  if (!g_report.exact) return downgrade("ed(H / nu) is not exact");
  const SemisimpleGroup gg = catalog::build(g_spec);

  auto h_orders = hg.char_group.structure().orders();
  auto g_orders = gg.char_group.structure().orders();
  g_orders.push_back(p);
  std::sort(h_orders.begin(), h_orders.end());
  std::sort(g_orders.begin(), g_orders.end());
  if (h_orders != g_orders) return downgrade("Z(H) is not isomorphic to Z(H / nu) x nu");

  SocleTable th(hg, p);
  const auto search = basis_search::index_minimal_bases(th, 1);

  std::vector<Character> base;
  for (const auto& e : g_report.basis) base.push_back(e.character);
  std::vector<Character> base_images;
  BigInt base_score = 0;
  for (const auto& chi : base) {
    base_images.push_back(th.socle().restrict(chi));
    if (base_images.back().is_zero()) return downgrade("a basis character of H / nu vanishes on the socle of Z(H)");
    base_score += th.lookup(base_images.back()).n.value;
  }

  auto h_chars = hg.char_group.elements();
  std::sort(h_chars.begin(), h_chars.end());
  std::optional<Character> omega;
  BigInt omega_n;
  for (const auto& w : h_chars) {
    if (abelian::pairing(hg.center_tilde, w.coords, nu.coords) == 0) continue;
    auto imgs = base_images;
    imgs.push_back(th.socle().restrict(w));
    if (imgs.back().is_zero() || !basis_search::independent_mod_p(imgs, p)) continue;
    const auto& entry = th.lookup(imgs.back());
    if (!entry.available) continue;
    if (!omega || entry.n.value < omega_n) {
      omega = w;
      omega_n = entry.n.value;
    }
  }
  if (!omega) return downgrade("no character omega nontrivial on nu extends the basis of the socle dual");
  if (!search.certified || base_score + omega_n != search.best_score)
    return downgrade("B + omega does not restrict to an index-minimal basis of the socle dual of Z(H)");

  // n_H(omega-check): gcd of n over all characters with the same value on nu.
  const auto target = abelian::pairing(hg.center_tilde, omega->coords, nu.coords);
  BigInt n_h = 0;
  for (const auto& w : h_chars) {
    if (abelian::pairing(hg.center_tilde, w.coords, nu.coords) != target) continue;
    for (std::size_t i = 0; i < hg.factor_count(); ++i)
      if (!repdata::supported_component(hg.factor(i), hg.component(w, i)))
        return downgrade("n_H(omega) needs an untabulated component");
    const auto nv = repdata::n_char(hg, w);
    if (nv.validity != repdata::Validity::Exact) return downgrade("n_H(omega) is not exact");
    n_h = boost::multiprecision::gcd(n_h, nv.value);
  }

  EdReport r = skeleton(hg, p);
  for (const auto& chi : base) r.basis.push_back(make_entry(hg, th, chi));
  r.basis.push_back(make_entry(hg, th, *omega));
  r.b0 = g_report.b0;
  for (auto i : r.b0) r.basis[i].in_b0 = true;
  const BigInt ed_h = *g_report.ed + n_h;
  r.index_minimal_score = search.best_score;
  r.lower = ed_h;
  r.upper = ed_h;
  r.exact = true;
  r.ed = ed_h;
  r.ed_red_upper = ed_h - hg.rank_z;
  r.ed_red_exact = true;
  r.ed_red = ed_h - hg.rank_z;
  r.extension = ExtensionInfo{nu, *omega, n_h, *g_report.ed, g_spec};
  add_common_caveats(hg, p, r);
  r.caveats.push_back("ed(H) = ed(H / nu) + n_H(omega) = " + to_decimal(*g_report.ed) + " + " + to_decimal(n_h));
  add_outcome_caveats(hg, r);
  return r;
}

}  // namespace edim::engine
