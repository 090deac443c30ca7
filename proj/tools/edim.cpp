// edim: essential dimension of reduced split semisimple groups.

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "edim/abelian_oracle.hpp"
#include "edim/engine.hpp"
#include "edim/sampling.hpp"
#include "edim/spec_io.hpp"

namespace {

using namespace edim;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBoundsOnly = 2;
constexpr int kExitUsage = 64;

int exit_code(const engine::EdReport& r) { return r.exact ? kExitOk : kExitBoundsOnly; }

void diagnose(const std::string& context, const std::exception& e) {
  std::cerr << "edim: " << (context.empty() ? "" : context + ": ") << e.what() << "\n";
}

int run_compute(const std::string& spec_text, bool as_json, std::optional<std::int64_t> prime) {
  try {
    const auto report = engine::compute_ed(spec_io::parse(spec_text), prime);
    std::cout << spec_io::emit(report, as_json ? spec_io::Format::Json : spec_io::Format::Text);
    return exit_code(report);
  } catch (const std::exception& e) {
    diagnose(spec_text, e);
    return kExitError;
  }
}

int run_batch(const std::string& path, bool as_json, std::optional<std::int64_t> prime) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) {
      std::cerr << "edim: cannot open " << path << "\n";
      return kExitError;
    }
    in = &file;
  }
  std::vector<std::string> specs;
  for (std::string line; std::getline(*in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    specs.push_back(line.substr(first, line.find_last_not_of(" \t\r") - first + 1));
  }

  struct Outcome {
    std::string text;
    std::string error;
    int code = kExitOk;
  };
  auto work = [&](const std::string& s) {
    Outcome o;
    try {
      const auto report = engine::compute_ed(spec_io::parse(s), prime);
      o.text = spec_io::emit(report, as_json ? spec_io::Format::Json : spec_io::Format::Text);
      o.code = exit_code(report);
    } catch (const std::exception& e) {
      o.error = "edim: " + s + ": " + e.what();
      o.code = kExitError;
    }
    return o;
  };

  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Outcome> outcomes(specs.size());
  for (std::size_t start = 0; start < specs.size(); start += width) {
    std::vector<std::future<Outcome>> wave;
    for (std::size_t i = start; i < std::min(specs.size(), start + width); ++i)
      wave.push_back(std::async(std::launch::async, work, specs[i]));
    for (std::size_t i = 0; i < wave.size(); ++i) outcomes[start + i] = wave[i].get();
  }

  int code = kExitOk;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (!o.error.empty()) std::cerr << o.error << "\n";
    if (!o.text.empty()) {
      if (!as_json && i > 0) std::cout << "\n";
      std::cout << o.text;
    }
    if (o.code == kExitError) code = kExitError;
    else if (o.code == kExitBoundsOnly && code == kExitOk) code = kExitBoundsOnly;
  }
  return code;
}

int run_extend(const std::string& h_text, const std::string& nu_text, bool as_json,
               std::optional<std::int64_t> prime) {
  try {
    const auto h = spec_io::parse(h_text);
    const auto nu = spec_io::parse_element(nu_text, h.factors);
    const auto report = engine::extend_ed(h, nu, prime);
    std::cout << spec_io::emit(report, as_json ? spec_io::Format::Json : spec_io::Format::Text);
    return exit_code(report);
  } catch (const std::exception& e) {
    diagnose(h_text, e);
    return kExitError;
  }
}

int run_oracle_check(std::int64_t max_order, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t score_pass = 0, law_pass = 0, ann_pass = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto spec = sampling::random_reduced_spec(rng, max_order);
    const auto g = catalog::build(spec);
    const std::string name = spec_io::render(spec);

    std::optional<BigInt> fast, slow;
    std::string fast_err, slow_err;
    try {
      basis_search::SocleTable table(g, g.prime);
      fast = basis_search::index_minimal_bases(table, 1).best_score;
    } catch (const Error& e) {
      fast_err = std::string(to_string(e.kind()));
    }
    try {
      slow = basis_search::brute_force_min(g, g.prime);
    } catch (const Error& e) {
      slow_err = std::string(to_string(e.kind()));
    }
    if (fast == slow && fast_err == slow_err) ++score_pass;
    else std::cerr << "score mismatch: " << name << "\n";

    const abelian::SubgroupPresentation mu(g.center_tilde, g.spec.mu_generators);
    if (g.char_group.order() * mu.order() == g.center_tilde.order()) ++law_pass;
    else std::cerr << "annihilator law fails: " << name << "\n";

    std::vector<abelian::Coords> raw;
    for (const auto& m : g.spec.mu_generators) raw.push_back(m.coords);
    const auto brute = abelian::oracle::annihilator(g.center_tilde, raw);
    std::set<abelian::Coords> fast_set;
    for (const auto& c : g.char_group.elements()) fast_set.insert(c.coords);
    if (fast_set == brute) ++ann_pass;
    else std::cerr << "annihilator mismatch: " << name << "\n";
  }
  std::cout << "index-minimal score vs brute force: " << score_pass << "/" << count << " pass\n";
  std::cout << "annihilator order law: " << law_pass << "/" << count << " pass\n";
  std::cout << "annihilator vs enumeration: " << ann_pass << "/" << count << " pass\n";
  return (score_pass == count && law_pass == count && ann_pass == count) ? kExitOk : kExitError;
}

struct Fixture {
  std::string spec;
  std::string nu;  // empty: compute; otherwise extend
  bool exact;
  std::optional<BigInt> ed;
  std::optional<BigInt> ed_red;
  std::optional<BigInt> lower;
};

int run_paper_suite() {
  const std::vector<Fixture> fixtures = {
      {"Spin(15)", "", true, 23, 22, 23},
      {"Spin(17)", "", true, 120, 119, 120},
      {"Spin(19)", "", true, 341, 340, 341},
      {"Spin(18)", "", true, 103, 102, 103},
      {"Spin(16)", "", false, std::nullopt, std::nullopt, 24},
      {"Spin(10)*Spin(3)^2/[(2,1,0),(2,0,1)]", "", true, 13, 12, 13},
      {"Spin(10)^2/[(1,3)]", "", true, 166, 165, 166},
      {"Spin(10)^2/[(2,2)]", "(1,3)", true, 168, 166, 168},
      {"Sp(8)^3/[(1,1,0),(0,1,1)]", "", true, 404, 403, 404},
      {"SL(2)^5/[(1,1,0,0,0),(0,1,1,0,0),(0,0,1,1,0),(0,0,0,1,1)]", "", true, 17, 16, 17},
      {"E6^2/[(1,2)]", "", true, 573, 572, 573},
      {"Spin(7)^3/[(1,1,0),(0,1,1)]", "", true, 449, 448, 449},
  };
  auto show = [](const std::optional<BigInt>& v) { return v ? to_decimal(*v) : std::string("-"); };
  std::size_t pass = 0;
  for (const auto& f : fixtures) {
    std::string label = f.nu.empty() ? f.spec : f.spec + " nu=" + f.nu;
    try {
      const auto h = spec_io::parse(f.spec);
      const auto r = f.nu.empty() ? engine::compute_ed(h)
                                  : engine::extend_ed(h, spec_io::parse_element(f.nu, h.factors));
      const bool ok = r.exact == f.exact && r.ed == f.ed && r.ed_red == f.ed_red && r.lower == f.lower;
      std::cout << (ok ? "PASS " : "FAIL ") << label << ": ed=" << show(r.ed) << " ed_red=" << show(r.ed_red)
                << " lower=" << show(r.lower) << " upper=" << show(r.upper);
      if (!ok)
        std::cout << " (expected ed=" << show(f.ed) << " ed_red=" << show(f.ed_red) << " lower=" << show(f.lower)
                  << ")";
      std::cout << "\n";
      pass += ok;
    } catch (const std::exception& e) {
      std::cout << "FAIL " << label << ": " << e.what() << "\n";
    }
  }
  std::cout << pass << "/" << fixtures.size() << " fixtures pass\n";
  return pass == fixtures.size() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Essential dimension of reduced split semisimple groups"};
  app.require_subcommand(1);

  std::string spec_text, batch, nu_text;
  bool as_json = false;
  std::optional<std::int64_t> prime;
  std::int64_t max_order = 81;
  std::size_t count = 50;
  std::uint64_t seed = 1;

  auto* compute = app.add_subcommand("compute", "Bounds or exact value of ed(G) and ed(G_red)");
  compute->add_option("spec", spec_text, "Group, e.g. \"Spin(10)^2/[(1,3)]\"");
  compute->add_flag("--json", as_json, "Emit JSON");
  compute->add_option("--prime", prime, "Override the socle prime");
  compute->add_option("--batch", batch, "File with one spec per line, or - for stdin");

  auto* extend = app.add_subcommand("extend", "ed(H) from ed(H/nu) for a central subgroup nu of order p");
  extend->add_option("spec", spec_text, "The group H")->required();
  extend->add_option("--nu", nu_text, "Generator of nu, e.g. \"(1,3)\"")->required();
  extend->add_flag("--json", as_json, "Emit JSON");
  extend->add_option("--prime", prime, "Override the socle prime");

  auto* oracle = app.add_subcommand("oracle-check", "Optimizer and annihilator checks against brute force");
  oracle->add_option("--max-order", max_order, "Largest socle dual order sampled")->check(CLI::Range(2, 6561));
  oracle->add_option("--count", count, "Number of random groups");
  oracle->add_option("--seed", seed, "Random seed");

  auto* suite = app.add_subcommand("paper-suite", "Pinned regression fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*compute) {
    if (batch.empty() == spec_text.empty()) {
      std::cerr << "edim: compute needs exactly one of <spec> or --batch\n" << compute->help();
      return kExitUsage;
    }
    return batch.empty() ? run_compute(spec_text, as_json, prime) : run_batch(batch, as_json, prime);
  }
  if (*extend) return run_extend(spec_text, nu_text, as_json, prime);
  if (*oracle) return run_oracle_check(max_order, count, seed);
  if (*suite) return run_paper_suite();
  return kExitUsage;
}
