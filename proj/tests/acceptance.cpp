// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance and time limit below is fixed; nothing is calibrated at
// run time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "satgenus/satgenus.hpp"
#include "support/reference.hpp"

namespace {

using namespace satgenus;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail << "first failure: " << what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  std::function<void(Outcome&)> run;
};

void exponent_sums(Outcome& out) {
  for (int n = 2; n <= 10; ++n) {
    out.require(exponent_sum(orevkov_k1(n)) == n * n - 1, "exponent sum of K1 braid at n=" + std::to_string(n));
  }
  out.detail << "n=2..10";
}

void component_counts(Outcome& out) {
  for (int n = 2; n <= 8; ++n) {
    out.require(closure_component_count(full_twist(n)) == static_cast<std::size_t>(n),
                "Δ_n² closure components at n=" + std::to_string(n));
    out.require(closure_component_count(orevkov_k1(n)) == 1, "K1 closure connected at n=" + std::to_string(n));
  }
  out.detail << "n=2..8";
}

void commutator_constructions(Outcome& out) {
  for (int m = 1; m <= 10; ++m) {
    const auto [a, b] = example1_pair(m);
    out.require(cycle_type(commutator(a, b)).parts == std::vector<std::size_t>{std::size_t(2 * m + 1)},
                "odd example m=" + std::to_string(m));
  }
  for (int m = 2; m <= 10; ++m) {
    const auto [a, b] = example2_pair(m);
    out.require(cycle_type(commutator(a, b)).parts == std::vector<std::size_t>{std::size_t(m), std::size_t(m)},
                "even example cycle type m=" + std::to_string(m));
    const std::vector<Permutation> gens{a, b};
    out.require(is_transitive(gens, 2 * m), "even example transitivity m=" + std::to_string(m));
  }
  out.detail << "odd m=1..10, even m=2..10";
}

void sharp_families(Outcome& out) {
  for (int g = 1; g <= 3; ++g) {
    for (int n = 1; n <= 6; ++n) {
      const auto c = cyclic_cover(g, n);
      out.require(c.cover == SurfaceShape{1, n * g - (n - 1), n} && c.branch == 0,
                  "cyclic cover g=" + std::to_string(g) + " n=" + std::to_string(n));
    }
  }
  const auto odd = cover_from_homomorphism(pair_homomorphism(1, example1_pair(3)));
  out.require(odd.cover.boundary == 1 && odd.cover.genus == 4 && odd.cover.components == 1, "odd example cover n=7");
  const auto even = cover_from_homomorphism(pair_homomorphism(1, example2_pair(4)));
  out.require(even.cover.boundary == 2 && even.cover.genus == 4, "even example cover n=8");
  const auto merged = add_branch_point(even, std::pair{0, 1});
  out.require(merged.cover.boundary == 1 && merged.cover.genus == 5 && merged.branch == 1,
              "even example plus merging branch point");
  out.detail << "n=7: k=" << odd.cover.boundary << " g=" << odd.cover.genus << "; n=8+branch: k="
             << merged.cover.boundary << " g=" << merged.cover.genus;
}

void proposition_sweep(Outcome& out) {
  std::vector<std::pair<int, int>> grid;
  for (int g : {1, 2}) {
    for (int n : {2, 3, 4}) grid.emplace_back(g, n);
  }
  grid.emplace_back(1, 5);
  std::uint64_t tuples = 0;
  for (const auto& [g, n] : grid) {
    const auto run = run_oracle(g, n, {kDefaultBudget, 1});
    const std::string cell = "(" + std::to_string(g) + "," + std::to_string(n) + ")";
    out.require(run.enumeration.violations.empty(), "violations at " + cell);
    out.require(run.sharpness.sharp && run.sharpness.counterexamples.empty(), "sharpness at " + cell);
    out.require(run.enumeration.min_genus_overall == n * g - (n - 1), "overall minimum at " + cell);
    tuples += run.enumeration.total_tuples;
  }
  out.detail << grid.size() << " cells, " << tuples << " tuples, single-threaded";
}

void orevkov_gap(Outcome& out) {
  for (int n : {9, 12}) {
    const int N = suggest_odd_twists(n);
    const auto r = orevkov_gap_report(n, N);
    const std::string at = " at n=" + std::to_string(n);
    out.require(N % 2 == 1, "auto N odd" + at);
    out.require(r.bound.value == static_cast<long>(n) * n - n, "bound n²−n" + at);
    out.require(r.g4_k2.value == (r.b2 - 2 * n + 1) / 2, "g4(K2) from b2" + at);
    out.require(r.gap && r.g4_k2.value < r.bound.value, "gap" + at);
    // Ratio in [0.55, 0.80], compared in integers: 55·n² ≤ 100·g4 ≤ 80·n².
    const long n2 = static_cast<long>(n) * n;
    out.require(55 * n2 <= 100 * r.g4_k2.value && 100 * r.g4_k2.value <= 80 * n2, "ratio window" + at);
    out.detail << "n=" << n << ": N=" << N << " g4(K2)=" << r.g4_k2.value << " bound=" << r.bound.value << "; ";
  }
}

void ore_oracle(Outcome& out) {
  std::size_t checked = 0;
  for (std::size_t n : {4u, 5u}) {
    for (const auto& p : all_permutations(n)) {
      const auto found = ore_commutator_search(p);
      out.require(found.has_value() == is_even(p), "witness iff even for " + format_cycles(p));
      if (found) out.require(commutator(found->first, found->second) == p, "witness correct for " + format_cycles(p));
      ++checked;
    }
  }
  out.detail << checked << " permutations of S4 and S5";
}

void cross_formula(Outcome& out) {
  std::size_t cells = 0;
  for (long g = 0; g <= 5; ++g) {
    for (long n = 1; n <= 6; ++n) {
      for (long b = 0; b <= 40; ++b) {
        if ((b - n + 1) % 2 != 0 || b < n - 1) continue;
        out.require(lemma1_satellite_genus(g, n, b).value >= thm1_knot_bound(g, n).value, "lemma1 ≥ knot bound");
        out.require(qp_closure_euler(n, b).value == 1 - 2 * qp_closure_genus(n, b).value, "χ = 1 − 2g");
        ++cells;
      }
    }
  }
  out.detail << cells << " parity-valid cells";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exponent sums of K1 braids equal n²−1", 1.0, exponent_sums},
      {2, "closure component counts of Δ_n² and K1", 1.0, component_counts},
      {3, "odd/even commutator constructions", 1.0, commutator_constructions},
      {4, "Riemann–Hurwitz sharp families", 1.0, sharp_families},
      {5, "exhaustive cover sweep: inequalities and sharpness", 60.0, proposition_sweep},
      {6, "Orevkov gap at n=9 and n=12", 1.0, orevkov_gap},
      {7, "commutator search finds witness iff even (S4, S5)", 30.0, ore_oracle},
      {8, "cross-formula consistency grid", 1.0, cross_formula},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.time_limit_s;
    const bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.3f s, limit %.0f s) %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.time_limit_s, out.detail.str().c_str(), in_time ? "" : " [time limit exceeded]");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
