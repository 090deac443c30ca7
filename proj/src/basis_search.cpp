#include "edim/basis_search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "edim/abelian_oracle.hpp"

namespace edim::basis_search {

using abelian::Coords;
using repdata::NValue;
using repdata::Validity;

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  return ((t % p) + p) % p;
}

// Row-echelon accumulator over F_p.
class Echelon {
 public:
  explicit Echelon(std::int64_t p) : p_(p) {}

  /// Adds v if it is independent of the rows so far.
  bool insert(Coords v) {
    for (const auto& [pivot, row] : rows_) {
      const std::int64_t f = v[pivot];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - f * row[j]) % p_ + p_) % p_;
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot] == 0) ++pivot;
    if (pivot == v.size()) return false;
    const std::int64_t inv = inverse_mod(v[pivot], p_);
    for (auto& x : v) x = (x * inv) % p_;
    // Keep rows fully reduced against the new pivot.
    for (auto& [_, row] : rows_) {
      const std::int64_t f = row[pivot];
      if (f == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = ((row[j] - f * v[j]) % p_ + p_) % p_;
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

 private:
  std::int64_t p_;
  std::vector<std::pair<std::size_t, Coords>> rows_;
};

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

bool all_supported(const SemisimpleGroup& g, const Character& chi) {
  for (std::size_t i = 0; i < g.factor_count(); ++i)
    if (!repdata::supported_component(g.factor(i), g.component(chi, i))) return false;
  return true;
}

void absorb(SocleEntry& e, const NValue& nv) {
  e.n.value = e.available ? BigInt(boost::multiprecision::gcd(e.n.value, nv.value)) : nv.value;
  if (nv.validity != Validity::Exact) e.n.validity = nv.validity;
  e.available = true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Socle n-values
// ---------------------------------------------------------------------------

SocleEntry socle_n(const SemisimpleGroup& g, const abelian::SocleDual& socle, const Character& socle_char) {
  SocleEntry e;
  e.socle = socle_char;
  e.available = false;
  e.n.value = 0;
  for (const auto& lift : socle.lifts(socle_char)) {
    if (!all_supported(g, lift)) {
      e.complete = false;
      continue;
    }
    absorb(e, repdata::n_char(g, lift));
  }
  return e;
}

SocleTable::SocleTable(const SemisimpleGroup& g, std::int64_t p) : socle_(g.char_group, p) {
  abelian::for_each_tuple(socle_.structure().orders(), [&](const Coords& c) {
    Character sc{c};
    if (sc.is_zero()) return true;
    entries_.push_back(socle_n(g, socle_, sc));
    if (!entries_.back().exact()) all_exact_ = false;
    return true;
  });
}

const SocleEntry& SocleTable::lookup(const Character& socle_char) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), socle_char,
                             [](const SocleEntry& e, const Character& c) { return e.socle < c; });
  if (it == entries_.end() || it->socle != socle_char)
    throw Error(ErrorKind::MalformedElement, "not a nonzero socle character");
  return *it;
}

bool independent_mod_p(const std::vector<Character>& vectors, std::int64_t p) {
  Echelon ech(p);
  for (const auto& v : vectors)
    if (!ech.insert(v.coords)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Index-minimal search
// ---------------------------------------------------------------------------

namespace {

std::vector<const SocleEntry*> usable_entries(const SocleTable& table) {
  std::vector<const SocleEntry*> out;
  for (const auto& e : table.entries())
    if (e.available) out.push_back(&e);
  return out;
}

}  // namespace

SearchResult index_minimal_bases(const SocleTable& table, std::size_t limit) {
  const auto usable = usable_entries(table);
  const std::size_t r = table.rank();
  const std::size_t count = usable.size();

  std::vector<BigInt> suffix_min(count + 1);
  for (std::size_t i = count; i-- > 0;)
    suffix_min[i] = (i + 1 == count) ? usable[i]->n.value : std::min(usable[i]->n.value, suffix_min[i + 1]);

  std::optional<BigInt> best;
  std::vector<std::vector<Character>> optimal;
  std::vector<std::size_t> chosen;

  std::function<void(std::size_t, const BigInt&, const Echelon&)> dfs =
      [&](std::size_t start, const BigInt& partial, const Echelon& ech) {
        const std::size_t depth = chosen.size();
        if (depth == r) {
          std::vector<Character> basis;
          for (auto i : chosen) basis.push_back(usable[i]->socle);
          if (!best || partial < *best) {
            best = partial;
            optimal.clear();
            optimal.push_back(std::move(basis));
          } else if (partial == *best && optimal.size() < limit) {
            optimal.push_back(std::move(basis));
          }
          return;
        }
        const std::size_t remaining = r - depth - 1;
        for (std::size_t i = start; i + remaining < count; ++i) {
          BigInt bound = partial + usable[i]->n.value;
          if (remaining > 0) bound += suffix_min[i + 1] * remaining;
          if (best && bound > *best) continue;
          Echelon next = ech;
          if (!next.insert(usable[i]->socle.coords)) continue;
          chosen.push_back(i);
          dfs(i + 1, partial + usable[i]->n.value, next);
          chosen.pop_back();
        }
      };
  dfs(0, BigInt(0), Echelon(table.prime()));

  SearchResult out;
  if (!best) throw Error(ErrorKind::HypothesisFailed, "no basis of the socle dual has tabulated n-values");
  out.best_score = *best;
  out.optimal = std::move(optimal);
  out.certified = table.all_exact();
  return out;
}

BasisCandidate index_minimal_basis(const SemisimpleGroup& g, std::int64_t p) {
  SocleTable table(g, p);
  auto result = index_minimal_bases(table, 1);
  BasisCandidate c;
  c.socle_images = result.optimal.front();
  c.score = result.best_score;
  for (const auto& s : c.socle_images) {
    c.chars.push_back(table.socle().representative(s));
    c.flags.push_back(satisfies_rules(g, c.chars.back(), LiftMode::Exact));
  }
  return c;
}

std::vector<std::pair<BigInt, std::vector<Character>>> all_bases(const SocleTable& table,
                                                                  std::size_t cap) {
  const auto usable = usable_entries(table);
  const std::size_t r = table.rank();
  std::vector<std::pair<BigInt, std::vector<Character>>> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const BigInt&, const Echelon&)> dfs =
      [&](std::size_t start, const BigInt& partial, const Echelon& ech) {
        if (out.size() >= cap) return;
        if (chosen.size() == r) {
          std::vector<Character> basis;
          for (auto i : chosen) basis.push_back(usable[i]->socle);
          out.emplace_back(partial, std::move(basis));
          return;
        }
        for (std::size_t i = start; i < usable.size() && out.size() < cap; ++i) {
          Echelon next = ech;
          if (!next.insert(usable[i]->socle.coords)) continue;
          chosen.push_back(i);
          dfs(i + 1, partial + usable[i]->n.value, next);
          chosen.pop_back();
        }
      };
  dfs(0, BigInt(0), Echelon(table.prime()));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

BigInt brute_force_min(const SemisimpleGroup& g, std::int64_t p) {
  const auto& amb = g.center_tilde;
  std::vector<Coords> mu;
  for (const auto& m : g.spec.mu_generators) mu.push_back(m.coords);
  const std::set<Coords> chars = abelian::oracle::annihilator(amb, mu);

  std::set<Coords> p_multiples;
  for (const auto& x : chars) p_multiples.insert(abelian::scale(amb, p, x));

  // Coset key: smallest member of x + pX.
  std::map<Coords, Coords> key_of;
  for (const auto& x : chars) {
    if (key_of.count(x)) continue;
    std::vector<Coords> coset;
    for (const auto& y : p_multiples) coset.push_back(abelian::add(amb, x, y));
    const Coords key = *std::min_element(coset.begin(), coset.end());
    for (auto& c : coset) key_of[c] = key;
  }

  struct ClassValue {
    BigInt n = 0;
    bool available = false;
  };
  std::map<Coords, ClassValue> classes;
  for (const auto& x : chars) {
    ClassValue& cv = classes[key_of[x]];
    const Character chi{x};
    if (!all_supported(g, chi)) continue;
    const BigInt n = repdata::n_char(g, chi).value;
    cv.n = cv.available ? BigInt(boost::multiprecision::gcd(cv.n, n)) : n;
    cv.available = true;
  }

  const std::size_t quotient_order = classes.size();
  if (quotient_order > 6561) throw Error(ErrorKind::TooLarge, "socle dual larger than 3^8");
  std::size_t r = 0;
  for (std::size_t q = 1; q < quotient_order; q *= static_cast<std::size_t>(p)) ++r;
  if (r == 0) throw Error(ErrorKind::TrivialSocle, "trivial socle");

  const Coords zero(amb.size(), 0);
  std::vector<Coords> keys;
  for (const auto& [k, v] : classes)
    if (k != key_of[zero]) keys.push_back(k);

  // Bound the number of r-subsets.
  long double combos = 1;
  for (std::size_t i = 0; i < r; ++i) combos = combos * (keys.size() - i) / (i + 1);
  if (combos > 2e7L) throw Error(ErrorKind::TooLarge, "too many generating sets to enumerate");

  std::optional<BigInt> best;
  std::vector<std::size_t> pick(r);
  std::vector<std::int64_t> radices(r, p);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == r) {
      BigInt sum = 0;
      for (auto i : pick) {
        const auto& cv = classes[keys[i]];
        if (!cv.available) return;
        sum += cv.n;
      }
      std::set<Coords> span;
      abelian::for_each_tuple(radices, [&](const Coords& c) {
        Coords acc = zero;
        for (std::size_t j = 0; j < r; ++j) acc = abelian::add(amb, acc, abelian::scale(amb, c[j], keys[pick[j]]));
        span.insert(key_of[acc]);
        return true;
      });
      if (span.size() == quotient_order && (!best || sum < *best)) best = sum;
      return;
    }
    for (std::size_t i = start; i < keys.size(); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  if (!best) throw Error(ErrorKind::HypothesisFailed, "no generating set with tabulated n-values");
  return *best;
}

// ---------------------------------------------------------------------------
// Lifting and B0
// ---------------------------------------------------------------------------

bool satisfies_rules(const SemisimpleGroup& g, const Character& chi, LiftMode mode) {
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    const auto& f = g.factor(i);
    const auto c = g.component(chi, i);
    if (!repdata::supported_component(f, c)) return false;
    if (mode != LiftMode::Exact || f.family() != catalog::Family::SpinEven) continue;
    if (c.size() == 1 && c[0] == 2) return false;
    if (c.size() == 2 && c[0] == 1 && c[1] == 1 && !is_power_of_two(f.parameter())) return false;
  }
  return true;
}

std::vector<LiftOption> lift_options(const SemisimpleGroup& g, const abelian::SocleDual& socle,
                                     const Character& socle_char, LiftMode mode) {
  std::vector<LiftOption> out;
  for (auto& chi : socle.lifts(socle_char)) {
    if (!satisfies_rules(g, chi, mode)) continue;
    LiftOption opt;
    opt.dim_v = repdata::dim_V(g, chi);
    opt.verdict = freeness::check_character(g, chi);
    opt.support = catalog::support(g.spec.factors, chi);
    opt.chi = std::move(chi);
    out.push_back(std::move(opt));
  }
  std::stable_sort(out.begin(), out.end(), [](const LiftOption& a, const LiftOption& b) {
    if (a.dim_v != b.dim_v) return a.dim_v < b.dim_v;
    return a.verdict.free && !b.verdict.free;
  });
  return out;
}

std::vector<Character> lift_basis(const SemisimpleGroup& g, const abelian::SocleDual& socle,
                                  const std::vector<Character>& socle_basis, LiftMode mode) {
  if (!independent_mod_p(socle_basis, socle.prime()))
    throw Error(ErrorKind::HypothesisFailed, "socle characters are not a basis");
  std::vector<Character> out;
  for (const auto& sc : socle_basis) {
    auto options = lift_options(g, socle, sc, mode);
    if (options.empty()) {
      std::string rule;
      switch (g.family_tag) {
        case catalog::FamilyTag::A: rule = "every lift has an SL component outside {0, 1, p^k - 1}"; break;
        case catalog::FamilyTag::BD:
          rule = "every lift has a component 2, or (1,1) on a Spin(n) with n not a power of 2";
          break;
        default: rule = "no lift satisfies the family rules"; break;
      }
      std::string coords;
      for (auto c : sc.coords) coords += (coords.empty() ? "" : ",") + std::to_string(c);
      throw Error(ErrorKind::NoAdmissibleLift, "socle character (" + coords + "): " + rule);
    }
    out.push_back(options.front().chi);
  }
  return out;
}

std::optional<std::vector<std::size_t>> select_b0(const SemisimpleGroup& g,
                                                  const std::vector<Character>& basis) {
  std::vector<std::size_t> free_idx;
  std::vector<std::vector<std::size_t>> supports;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool free = false;
    try {
      free = freeness::check_character(g, basis[i]).free;
    } catch (const Error&) {
      free = false;
    }
    if (free) free_idx.push_back(i);
    supports.push_back(catalog::support(g.spec.factors, basis[i]));
  }
  const std::size_t m = g.factor_count();
  const std::size_t f = free_idx.size();
  if (f > 24) throw Error(ErrorKind::TooLarge, "too many free characters for B0 subset search");
  for (std::size_t k = 1; k <= f; ++k) {
    std::vector<bool> mask(f, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    // prev_permutation over a leading-true mask enumerates k-subsets in lex order.
    do {
      std::vector<bool> covered(m, false);
      std::vector<std::size_t> subset;
      for (std::size_t j = 0; j < f; ++j) {
        if (!mask[j]) continue;
        subset.push_back(free_idx[j]);
        for (auto s : supports[free_idx[j]]) covered[s] = true;
      }
      if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) return subset;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return std::nullopt;
}

}  // namespace edim::basis_search
