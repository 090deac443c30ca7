#include "edim/freeness.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace edim::freeness {

using repdata::RepTag;

namespace {

FreenessVerdict free_because(Reason r) { return {true, r, 0, ""}; }
FreenessVerdict row_hit(int row) { return {false, Reason::TableRow, row, ""}; }
FreenessVerdict failed(std::string detail) { return {false, Reason::CriterionFailed, 0, std::move(detail)}; }

bool in(std::int64_t n, std::initializer_list<std::int64_t> set) {
  return std::find(set.begin(), set.end(), n) != set.end();
}

BigInt rep_dim(const SpinRep& r) {
  if (r.tag == RepTag::Vector) return BigInt(r.n);
  return r.n % 2 ? pow_big(2, (r.n - 1) / 2) : pow_big(2, (r.n - 2) / 2);
}

// Rows 1-7: tensor products of (half-)spin representations only.
int spin_only_row(std::vector<std::int64_t> ns) {
  std::sort(ns.begin(), ns.end());
  const std::multiset<std::int64_t> ms(ns.begin(), ns.end());
  auto pair_row = [&](std::int64_t fixed, std::initializer_list<std::int64_t> others) {
    if (ns.size() != 2) return false;
    return (ns[0] == fixed && in(ns[1], others)) || (ns[1] == fixed && in(ns[0], others));
  };
  if (ns.size() == 1 && ns[0] >= 3 && ns[0] <= 16 && ns[0] != 4 && ns[0] != 15) return 1;
  if (pair_row(3, {3, 5, 6, 7, 9, 11})) return 2;
  if (pair_row(5, {5, 6, 7})) return 3;
  if (pair_row(6, {6, 7, 10})) return 4;
  if (ns.size() == 3 && ms.count(3) >= 2) {
    std::multiset<std::int64_t> rest = ms;
    rest.erase(rest.find(3));
    rest.erase(rest.find(3));
    if (in(*rest.begin(), {3, 5, 6, 7})) return 5;
  }
  if (ns.size() == 3 && ms.count(3) >= 1 && ms.count(6) >= 1) {
    std::multiset<std::int64_t> rest = ms;
    rest.erase(rest.find(3));
    rest.erase(rest.find(6));
    if (in(*rest.begin(), {5, 6})) return 6;
  }
  if (ns.size() == 4 && ms.count(3) == 4) return 7;
  return 0;
}

}  // namespace

std::string to_string(const FreenessVerdict& v) {
  switch (v.reason) {
    case Reason::NotInTable: return "free (not in table)";
    case Reason::TableRow: return "not free (table row " + std::to_string(v.row) + ")";
    case Reason::TypeCCriterion: return "free (type C criterion)";
    case Reason::TypeACriterion: return "free (type A criterion)";
    case Reason::E6Criterion: return "free (E6 criterion)";
    case Reason::CriterionFailed: return "not free (" + v.detail + ")";
  }
  return "?";
}

FreenessVerdict check_bd(std::vector<SpinRep> factors) {
  std::vector<SpinRep> active;
  for (const auto& f : factors) {
    if (f.n < 3 || f.n == 4) throw Error(ErrorKind::NotSpinFamily, "Spin(" + std::to_string(f.n) + ")");
    switch (f.tag) {
      case RepTag::Trivial: continue;
      case RepTag::Spin:
        if (f.n % 2 == 0) throw Error(ErrorKind::NotSpinFamily, "spin rep needs odd n");
        break;
      case RepTag::HalfSpinPlus:
      case RepTag::HalfSpinMinus:
      case RepTag::Vector:
        if (f.n % 2 == 1) throw Error(ErrorKind::NotSpinFamily, "half-spin/vector rep needs even n");
        break;
      default:
        throw Error(ErrorKind::NotSpinFamily, "representation is not a spin-group representation");
    }
    active.push_back(f);
  }
  if (active.empty()) return failed("trivial representation");

  const bool spin_only = std::none_of(active.begin(), active.end(),
                                      [](const SpinRep& r) { return r.tag == RepTag::Vector; });
  if (spin_only) {
    std::vector<std::int64_t> ns;
    for (const auto& r : active) ns.push_back(r.n);
    if (int row = spin_only_row(ns)) return row_hit(row);
    return free_because(Reason::NotInTable);
  }

  if (active.size() == 1 && active[0].n >= 6) return row_hit(8);
  if (active.size() == 2 && active[0].tag == RepTag::Vector && active[1].tag == RepTag::Vector &&
      active[0].n == active[1].n && active[0].n >= 6)
    return row_hit(9);
  if (active.size() >= 2) {
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (active[i].tag != RepTag::Vector) continue;
      BigInt rest = 1;
      for (std::size_t j = 0; j < active.size(); ++j)
        if (j != i) rest *= rep_dim(active[j]);
      if (BigInt(active[i].n) > rest + 1) return row_hit(10);
    }
  }
  return free_because(Reason::NotInTable);
}

FreenessVerdict check_c(std::vector<std::int64_t> ranks) {
  for (auto n : ranks)
    if (n < 3) throw Error(ErrorKind::NotSpFamily, "Sp(" + std::to_string(2 * n) + ")");
  if (ranks.size() < 3) return failed("support of size " + std::to_string(ranks.size()) + " < 3");
  std::sort(ranks.begin(), ranks.end(), std::greater<>());
  BigInt rest = 1;
  for (std::size_t i = 1; i < ranks.size(); ++i) rest *= 2 * ranks[i];
  if (BigInt(2 * ranks[0]) > rest)
    return failed(std::to_string(2 * ranks[0]) + " > " + to_decimal(rest));
  return free_because(Reason::TypeCCriterion);
}

FreenessVerdict check_a(std::int64_t p, std::vector<std::int64_t> exponents) {
  if (p < 2) throw Error(ErrorKind::NotSLFamily, "prime " + std::to_string(p));
  for (auto k : exponents)
    if (k < 1) throw Error(ErrorKind::NotSLFamily, "exponent " + std::to_string(k));
  const std::size_t m = exponents.size();
  if (m < 3) return failed("support of size " + std::to_string(m) + " < 3");
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  std::int64_t rest = 0;
  for (std::size_t i = 1; i < m; ++i) rest += exponents[i];
  if (exponents[0] >= rest)
    return failed("leading exponent " + std::to_string(exponents[0]) + " >= " + std::to_string(rest));
  const bool all_one = std::all_of(exponents.begin(), exponents.end(), [](auto k) { return k == 1; });
  if (p == 2 && m == 4 && all_one) return failed("SL(2)^4");
  if (p == 3 && m == 3 && all_one) return failed("SL(3)^3");
  if (p == 2 && m == 3 && exponents[1] == exponents[0] && exponents[2] == 1)
    return failed("SL(q)^2 x SL(2)");
  return free_because(Reason::TypeACriterion);
}

FreenessVerdict check_e6(std::size_t support_size) {
  if (support_size >= 2) return free_because(Reason::E6Criterion);
  return failed("support of size " + std::to_string(support_size) + " < 2");
}

FreenessVerdict check_character(const catalog::SemisimpleGroup& g, const abelian::Character& chi) {
  const auto supp = catalog::support(g.spec.factors, chi);
  switch (g.family_tag) {
    case catalog::FamilyTag::BD: {
      std::vector<SpinRep> reps;
      for (auto i : supp)
        reps.push_back({g.factor(i).parameter(), repdata::rep_choice(g.factor(i), g.component(chi, i)).tag});
      return check_bd(std::move(reps));
    }
    case catalog::FamilyTag::C: {
      std::vector<std::int64_t> ranks;
      for (auto i : supp) ranks.push_back(g.factor(i).parameter());
      return check_c(std::move(ranks));
    }
    case catalog::FamilyTag::A: {
      std::vector<std::int64_t> ks;
      for (auto i : supp) {
        repdata::rep_choice(g.factor(i), g.component(chi, i));  // rejects untabulated components
        ks.push_back(g.factor(i).parameter());
      }
      return check_a(g.prime, std::move(ks));
    }
    case catalog::FamilyTag::E6:
      return check_e6(supp.size());
  }
  return failed("unknown family");
}

}  // namespace edim::freeness
