// Acceptance criteria: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "edim/abelian_oracle.hpp"
#include "edim/engine.hpp"
#include "edim/sampling.hpp"
#include "edim/spec_io.hpp"

using namespace edim;
using catalog::SimpleFactor;
using repdata::RepTag;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [" << what << "]";
    }
  }
};

engine::EdReport compute(const std::string& text) { return engine::compute_ed(spec_io::parse(text)); }

bool exact_pair(const engine::EdReport& r, const BigInt& ed, const BigInt& ed_red) {
  return r.exact && r.ed == ed && r.ed_red_exact && r.ed_red == ed_red;
}

BigInt spin_dim(std::int64_t n) { return BigInt(n) * (n - 1) / 2; }

// 1
void single_spin(Outcome& o) {
  for (std::int64_t n : {15, 17, 19}) {
    const BigInt ed = pow_big(2, (n - 1) / 2) - spin_dim(n);
    o.expect(exact_pair(compute("Spin(" + std::to_string(n) + ")"), ed, ed - 1), "Spin(" + std::to_string(n) + ")");
  }
  const BigInt ed18 = pow_big(2, 8) - spin_dim(18);
  o.expect(exact_pair(compute("Spin(18)"), ed18, ed18 - 1), "Spin(18)");
}

// 2
void spin16(Outcome& o) {
  const auto r = compute("Spin(16)");
  // Characters of (Z/2)^2: half-spins n = 2^7 each, vector n = 16; the best
  // basis pairs one half-spin with the vector.
  const BigInt expected = pow_big(2, 7) + 16 - spin_dim(16);
  o.expect(r.lower == expected, "lower bound");
  o.expect(basis_search::brute_force_min(catalog::build(spec_io::parse("Spin(16)")), 2) == pow_big(2, 7) + 16,
           "brute force score");
  o.expect(!r.exact && !r.hypothesis_failures.empty(), "hypothesis failure reported");
  bool row1 = false, open = false;
  for (const auto& f : r.hypothesis_failures) row1 = row1 || f.find("table row 1") != std::string::npos;
  for (const auto& c : r.caveats) open = open || c.find("left open") != std::string::npos;
  o.expect(row1, "row 1 named");
  o.expect(open, "open question flagged");
}

// 3
void mixed_bd(Outcome& o) {
  const std::int64_t a = 2;
  const BigInt prod = pow_big(4, a) * 2 * 2;
  const BigInt dim = spin_dim(4 * a + 2) + 2 * spin_dim(3);
  o.expect(exact_pair(compute("Spin(10)*Spin(3)^2/[(2,1,0),(2,0,1)]"), prod - dim, prod - dim - 1), "ed/ed_red");
}

// 4
void example_extension(Outcome& o) {
  const std::int64_t a = 2, b = 2;
  const BigInt ed_g = pow_big(4, a + b) - BigInt((2 * a + 1) * (4 * a + 1)) - BigInt((2 * b + 1) * (4 * b + 1));
  o.expect(exact_pair(compute("Spin(10)^2/[(1,3)]"), ed_g, ed_g - 1), "G");
  const auto h = spec_io::parse("Spin(10)^2/[(2,2)]");
  const auto r = engine::extend_ed(h, spec_io::parse_element("(1,3)", h.factors));
  o.expect(exact_pair(r, ed_g + 2, ed_g), "H");
  o.expect(r.extension && r.extension->n_h_omega == 2, "n_H(omega) = 2");
}

// 5
void type_c(Outcome& o) {
  const std::vector<std::int64_t> k{3, 3, 3};  // 2n_i = 2^k_i for Sp(8)
  std::int64_t total = 0;
  BigInt dim = 0;
  for (auto ki : k) {
    total += ki;
    dim += pow_big(2, ki - 1) * (pow_big(2, ki) + 1);
  }
  const BigInt ed = pow_big(2, total) - dim;
  o.expect(exact_pair(compute("Sp(8)^3/[(1,1,0),(0,1,1)]"), ed, ed - 1), "ed/ed_red");
}

// 6
void type_a(Outcome& o) {
  const std::int64_t p = 2, m = 5;
  const BigInt ed = pow_big(p, m) - BigInt(m) * (p * p - 1);
  o.expect(exact_pair(compute("SL(2)^5/[(1,1,0,0,0),(0,1,1,0,0),(0,0,1,1,0),(0,0,0,1,1)]"), ed, ed - 1), "ed/ed_red");
}

// 7
void type_e6(Outcome& o) {
  const std::int64_t m = 2;
  const BigInt ed = pow_big(27, m) - 78 * m;
  o.expect(exact_pair(compute("E6^2/[(1,2)]"), ed, ed - 1), "ed/ed_red");
}

// 8
void table1(Outcome& o) {
  using F = freeness::SpinRep;
  auto s = [](std::int64_t n) { return F{n, n % 2 ? RepTag::Spin : RepTag::HalfSpinPlus}; };
  auto v = [](std::int64_t n) { return F{n, RepTag::Vector}; };
  std::vector<std::pair<int, std::vector<F>>> listed;
  for (std::int64_t n : {3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 16}) listed.push_back({1, {s(n)}});
  for (std::int64_t n : {3, 5, 6, 7, 9, 11}) listed.push_back({2, {s(3), s(n)}});
  for (std::int64_t n : {5, 6, 7}) listed.push_back({3, {s(5), s(n)}});
  for (std::int64_t n : {6, 7, 10}) listed.push_back({4, {s(6), s(n)}});
  for (std::int64_t n : {3, 5, 6, 7}) listed.push_back({5, {s(3), s(3), s(n)}});
  for (std::int64_t n : {5, 6}) listed.push_back({6, {s(3), s(6), s(n)}});
  listed.push_back({7, {s(3), s(3), s(3), s(3)}});
  for (std::int64_t n : {6, 8, 10, 12, 14, 16}) listed.push_back({8, {v(n)}});
  for (std::int64_t n : {6, 8, 10, 12, 14, 16}) listed.push_back({9, {v(n), v(n)}});
  listed.push_back({10, {v(20), s(3), s(3)}});
  listed.push_back({10, {v(10), s(7)}});
  listed.push_back({10, {v(8), s(5)}});
  listed.push_back({10, {v(12), s(3), s(5)}});
  std::size_t hits = 0;
  for (const auto& [row, reps] : listed) {
    const auto verdict = freeness::check_bd(reps);
    if (!verdict.free && verdict.row == row) ++hits;
    else o.expect(false, "row " + std::to_string(row) + " instance reported free");
  }
  const std::vector<std::vector<F>> near = {
      {s(17)},
      {s(3), s(13)},
      {s(5), s(8)},
      {s(6), s(11)},
      {s(3), s(3), s(8)},
      {s(3), s(6), s(7)},
      {s(3), s(3), s(3), s(3), s(3)},
      {v(6), s(7)},
      {v(6), v(6), v(6)},
      {v(8), s(7)},
  };
  std::size_t frees = 0;
  for (const auto& reps : near) {
    if (freeness::check_bd(reps).free) ++frees;
    else o.expect(false, "near miss reported not free");
  }
  o.notes << " (" << hits << "/" << listed.size() << " listed not free, " << frees << "/" << near.size()
          << " near misses free)";
}

// 9
void oracle_equivalence(Outcome& o) {
  std::mt19937_64 rng(20261017);
  std::size_t agree = 0, law = 0;
  const std::size_t count = 50;
  for (std::size_t i = 0; i < count; ++i) {
    const auto spec = sampling::random_reduced_spec(rng, 81);
    const auto g = catalog::build(spec);
    std::optional<BigInt> fast, slow;
    try {
      fast = basis_search::index_minimal_basis(g, g.prime).score;
    } catch (const Error&) {
    }
    try {
      slow = basis_search::brute_force_min(g, g.prime);
    } catch (const Error&) {
    }
    if (fast == slow && fast) ++agree;
    else o.expect(false, "score mismatch on " + spec_io::render(spec));

    std::vector<abelian::Coords> raw;
    for (const auto& m : g.spec.mu_generators) raw.push_back(m.coords);
    const BigInt mu_order = abelian::oracle::closure(g.center_tilde, raw).size();
    if (g.char_group.order() * mu_order == g.center_tilde.order()) ++law;
    else o.expect(false, "annihilator law on " + spec_io::render(spec));
  }
  o.notes << " (" << agree << "/" << count << " scores, " << law << "/" << count << " annihilator law)";
}

// 10
void snf_properties(Outcome& o) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dim(1, 6), entry(-50, 50);
  std::size_t ok_count = 0;
  for (int t = 0; t < 200; ++t) {
    abelian::IntMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    const auto s = abelian::smith_normal_form(a);
    bool ok = s.u * a * s.v == s.d;
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j && s.d(i, j) != 0) ok = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto& x = s.d(i, i);
      const auto& y = s.d(i + 1, i + 1);
      if (x < 0 || y < 0) ok = false;
      else if (x == 0 ? y != 0 : y % x != 0) ok = false;
    }
    const auto du = s.u.determinant(), dv = s.v.determinant();
    ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    if (ok) ++ok_count;
  }
  o.expect(ok_count == 200, "SNF property failures");
  o.notes << " (" << ok_count << "/200)";
}

// 11
void round_trip(Outcome& o) {
  std::vector<engine::EdReport> reports;
  for (const char* text : {"Spin(15)", "Spin(17)", "Spin(19)", "Spin(18)", "Spin(16)", "Spin(20)",
                           "Spin(10)*Spin(3)^2/[(2,1,0),(2,0,1)]", "Spin(10)^2/[(1,3)]", "Sp(8)^3/[(1,1,0),(0,1,1)]",
                           "SL(2)^5/[(1,1,0,0,0),(0,1,1,0,0),(0,0,1,1,0),(0,0,0,1,1)]", "E6^2/[(1,2)]",
                           "Spin(7)^3/[(1,1,0),(0,1,1)]"})
    reports.push_back(compute(text));
  const auto h = spec_io::parse("Spin(10)^2/[(2,2)]");
  reports.push_back(engine::extend_ed(h, spec_io::parse_element("(1,3)", h.factors)));
  std::size_t ok = 0;
  for (const auto& r : reports) {
    const auto doc = spec_io::emit(r, spec_io::Format::Json);
    const auto back = spec_io::parse_report(doc);
    if (back == r && spec_io::emit(back, spec_io::Format::Json) == doc) ++ok;
    else o.expect(false, "round trip of " + spec_io::render(r.group));
  }
  o.notes << " (" << ok << "/" << reports.size() << ")";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"single spin groups Spin(15), Spin(17), Spin(19), Spin(18)", single_spin},
      {"Spin(16) lower bound 24 and reported hypothesis failure", spin16},
      {"Spin(10)*Spin(3)^2 mod kernel of product: ed 13, ed_red 12", mixed_bd},
      {"Spin(10)^2/<(1,3)> ed 166, 165; extension H ed 168, 166, n_H 2", example_extension},
      {"Sp(8)^3 mod kernel of product: ed 404, ed_red 403", type_c},
      {"SL(2)^5 mod kernel of product: ed 17, ed_red 16", type_a},
      {"E6^2/<(1,2)>: ed 573, ed_red 572", type_e6},
      {"non-free table: listed instances not free, near misses free", table1},
      {"optimizer = brute force and annihilator law on 50 random groups", oracle_equivalence},
      {"Smith normal form properties on 200 random matrices", snf_properties},
      {"report JSON round trip on every fixture", round_trip},
  };
  std::size_t passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) o.expect(false, "took longer than 10 s");
    passed += o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first
              << o.notes.str() << "\n";
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass\n";
  return passed == criteria.size() ? 0 : 1;
}
