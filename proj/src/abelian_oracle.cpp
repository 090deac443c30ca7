#include "edim/abelian_oracle.hpp"

#include <algorithm>
#include <deque>

namespace edim::abelian::oracle {

namespace {

void check_cap(const CyclicDecomposition& ambient) {
  if (ambient.order() > kEnumerationCap)
    throw Error(ErrorKind::TooLarge, "group of order " + to_decimal(ambient.order()) +
                                         " exceeds the enumeration cap");
}

Coords plus(const CyclicDecomposition& ambient, const Coords& x, const Coords& y) {
  Coords out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + y[i]) % ambient.orders()[i];
  return out;
}

}  // namespace

std::vector<Coords> enumerate(const CyclicDecomposition& ambient) {
  check_cap(ambient);
  std::vector<Coords> out;
  Coords c(ambient.size(), 0);
  for (;;) {
    out.push_back(c);
    std::size_t i = c.size();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++c[i] < ambient.orders()[i]) break;
      c[i] = 0;
    }
  }
}

std::set<Coords> closure(const CyclicDecomposition& ambient, const std::vector<Coords>& generators) {
  check_cap(ambient);
  std::set<Coords> seen{Coords(ambient.size(), 0)};
  std::deque<Coords> frontier{Coords(ambient.size(), 0)};
  while (!frontier.empty()) {
    Coords x = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Coords y = plus(ambient, x, g);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return seen;
}

std::set<Coords> annihilator(const CyclicDecomposition& ambient,
                             const std::vector<Coords>& generators) {
  // chi annihilates g iff sum chi_i g_i / o_i is an integer.
  std::set<Coords> out;
  for (const auto& chi : enumerate(ambient)) {
    bool kills_all = true;
    for (const auto& g : generators) {
      // Compare exactly over the common denominator lcm(orders).
      std::int64_t e = ambient.exponent();
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < chi.size(); ++i)
        acc = (acc + (chi[i] * g[i]) % e * (e / ambient.orders()[i])) % e;
      if (acc != 0) {
        kills_all = false;
        break;
      }
    }
    if (kills_all) out.insert(chi);
  }
  return out;
}

std::int64_t exponent(const CyclicDecomposition& ambient, const std::set<Coords>& elements) {
  std::int64_t best = 1;
  for (const auto& x : elements) {
    Coords acc = x;
    std::int64_t k = 1;
    while (std::any_of(acc.begin(), acc.end(), [](auto v) { return v != 0; })) {
      acc = plus(ambient, acc, x);
      ++k;
    }
    best = std::max(best, k);
  }
  return best;
}

}  // namespace edim::abelian::oracle
