#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "satgenus/covering.hpp"
#include "satgenus/error.hpp"
#include "satgenus/permutation.hpp"

namespace satgenus {

/// Permutation operations the enumeration may spend unless told otherwise.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

/// A generator tuple (s_1, t_1, ..., s_g, t_g) together with its cover.
struct CoverWitness {
  std::vector<Permutation> images;
  CoverData cover;
};

struct Violation {
  std::string rule;
  std::string detail;
  CoverWitness witness;
};

struct EnumerationReport {
  int base_genus = 0;
  int degree = 0;
  std::uint64_t total_tuples = 0;
  std::uint64_t abelian_tuples = 0;  // all images pairwise commute
  std::vector<Violation> violations;
  int min_genus_overall = 0;
  CoverWitness min_overall_witness;
  std::optional<int> min_genus_connected_boundary;  // none when no cover has k = 1
  std::optional<CoverWitness> min_connected_boundary_witness;
  std::map<int, std::uint64_t> boundary_histogram;
};

struct SharpnessReport {
  bool sharp = true;
  std::vector<Violation> counterexamples;
  std::uint64_t covers_checked = 0;  // B = 0 covers plus B = 1 perturbations
  // Even n only: whether some k = 1 cover attains n·g − (n − 2)/2. Recorded,
  // never asserted; the inequality's equality clause is only necessary there.
  std::optional<bool> even_equality_attained;
};

/// (components, boundary circles, total genus)
using RealizabilityKey = std::tuple<int, int, int>;

struct RealizabilityTable {
  int base_genus = 0;
  int degree = 0;
  std::map<RealizabilityKey, std::vector<Permutation>> rows;
  bool cyclic_row_present = false;   // (1, n, n·g − (n − 1))
  bool example_row_present = false;  // odd n: (1, 1, n·g − (n − 1)/2); even n: (1, 2, n·g − n/2)
};

/// (n!)^(2g) tuples at 4g permutation operations each, saturating.
inline std::uint64_t enumeration_cost(int g, int n) {
  if (g < 1 || n < 1) throw ValidationError("enumeration needs g >= 1 and n >= 1");
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  auto mul = [](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > kMax / b) ? kMax : a * b; };
  std::uint64_t order = 1;
  for (int i = 2; i <= n; ++i) order = mul(order, static_cast<std::uint64_t>(i));
  std::uint64_t cost = 4 * static_cast<std::uint64_t>(g);
  for (int i = 0; i < 2 * g; ++i) cost = mul(cost, order);
  return cost;
}

namespace detail {

struct SweepState {
  int g = 0;
  int n = 0;
  EnumerationReport report;
  SharpnessReport sharpness;
  RealizabilityTable table;
  bool has_min = false;

  void violation(std::vector<Violation>& into, std::string rule, std::string what, const std::vector<Permutation>& t,
                 const CoverData& c) {
    into.push_back(Violation{std::move(rule), std::move(what), CoverWitness{t, c}});
  }

  long eq4_prime_floor() const { return static_cast<long>(n) * g - (n - 1); }
  long eq4_double_prime_floor() const { return static_cast<long>(n) * g - (n - 1) / 2; }

  // Checks shared by the unramified covers and their B = 1 perturbations.
  void check_inequalities(const std::vector<Permutation>& t, const CoverData& c, int source_boundary) {
    ++sharpness.covers_checked;
    if (c.cover.genus < eq4_prime_floor()) {
      violation(report.violations, "eq4'", "genus below n·g − (n − 1)", t, c);
    }
    const bool equal = c.cover.genus == eq4_prime_floor();
    const bool predicted = c.cover.components == 1 && c.branch == 0 && c.cover.boundary == n;
    if (equal != predicted) {
      violation(sharpness.counterexamples, "eq4' equality",
                "equality in n·g − (n − 1) does not match {m = 1, B = 0, k = n}", t, c);
    }
    if (c.cover.boundary != 1) return;
    if (c.cover.genus < eq4_double_prime_floor()) {
      violation(report.violations, "eq4''", "connected-boundary genus below n·g − ⌊(n − 1)/2⌋", t, c);
    }
    const bool tight = c.cover.genus == eq4_double_prime_floor();
    if (n % 2 == 1) {
      if (tight != (c.cover.components == 1 && c.branch == 0)) {
        violation(sharpness.counterexamples, "eq4'' odd equality",
                  "equality for odd n does not match {connected, unramified}", t, c);
      }
    } else if (tight) {
      sharpness.even_equality_attained = true;
      if (source_boundary != 1 && source_boundary != 2) {
        violation(sharpness.counterexamples, "eq4'' even equality",
                  "minimiser built from a cover with " + std::to_string(source_boundary) + " boundary circles", t,
                  c);
      }
    }
  }

  void absorb(const std::vector<Permutation>& t) {
    const HomomorphismCover h{g, n, t};
    const Permutation boundary = boundary_permutation(h);
    const CoverData c = cover_from_homomorphism(h);
    const int k = c.cover.boundary;

    ++report.total_tuples;
    ++report.boundary_histogram[k];
    if (!is_even(boundary)) violation(report.violations, "boundary parity", "boundary monodromy is odd", t, c);

    bool abelian = true;
    for (std::size_t i = 0; i < t.size() && abelian; ++i) {
      for (std::size_t j = i + 1; j < t.size() && abelian; ++j) {
        abelian = compose(t[i], t[j]) == compose(t[j], t[i]);
      }
    }
    if (abelian) ++report.abelian_tuples;

    if (!has_min || c.cover.genus < report.min_genus_overall) {
      has_min = true;
      report.min_genus_overall = c.cover.genus;
      report.min_overall_witness = CoverWitness{t, c};
    }
    if (k == 1 && (!report.min_genus_connected_boundary || c.cover.genus < *report.min_genus_connected_boundary)) {
      report.min_genus_connected_boundary = c.cover.genus;
      report.min_connected_boundary_witness = CoverWitness{t, c};
    }
    table.rows.try_emplace(RealizabilityKey{c.cover.components, k, c.cover.genus}, t);

    check_inequalities(t, c, k);
    if (c.cover.components != 1) return;

    // One simple branch point, i.e. boundary monodromy times a transposition.
    // The numeric ledger must agree with the permutation it describes.
    const auto circles = cycles(boundary);
    const auto degree = static_cast<std::size_t>(n);
    if (k < n) {
      const auto long_cycle = std::find_if(circles.begin(), circles.end(), [](const auto& cy) { return cy.size() > 1; });
      const Permutation split = compose(boundary, Permutation::transposition(degree, (*long_cycle)[0] + 1,
                                                                             (*long_cycle)[1] + 1));
      const CoverData perturbed = add_branch_point(c, std::nullopt);
      if (static_cast<int>(cycle_count(split)) != perturbed.cover.boundary) {
        violation(report.violations, "branch-point ledger", "split count disagrees with monodromy", t, perturbed);
      }
      check_inequalities(t, perturbed, k);
    }
    if (k >= 2) {
      const Permutation merged =
          compose(boundary, Permutation::transposition(degree, circles[0][0] + 1, circles[1][0] + 1));
      const CoverData perturbed = add_branch_point(c, std::pair{0, 1});
      if (static_cast<int>(cycle_count(merged)) != perturbed.cover.boundary) {
        violation(report.violations, "branch-point ledger", "merge count disagrees with monodromy", t, perturbed);
      }
      check_inequalities(t, perturbed, k);
    }
  }

  // `later` covers tuples that come after this state's in enumeration order.
  void merge(SweepState&& later) {
    report.total_tuples += later.report.total_tuples;
    report.abelian_tuples += later.report.abelian_tuples;
    for (auto& v : later.report.violations) report.violations.push_back(std::move(v));
    for (const auto& [k, count] : later.report.boundary_histogram) report.boundary_histogram[k] += count;
    if (later.has_min && (!has_min || later.report.min_genus_overall < report.min_genus_overall)) {
      has_min = true;
      report.min_genus_overall = later.report.min_genus_overall;
      report.min_overall_witness = std::move(later.report.min_overall_witness);
    }
    if (later.report.min_genus_connected_boundary &&
        (!report.min_genus_connected_boundary ||
         *later.report.min_genus_connected_boundary < *report.min_genus_connected_boundary)) {
      report.min_genus_connected_boundary = later.report.min_genus_connected_boundary;
      report.min_connected_boundary_witness = std::move(later.report.min_connected_boundary_witness);
    }
    sharpness.covers_checked += later.sharpness.covers_checked;
    for (auto& v : later.sharpness.counterexamples) sharpness.counterexamples.push_back(std::move(v));
    if (later.sharpness.even_equality_attained) sharpness.even_equality_attained = true;
    for (auto& [key, witness] : later.table.rows) table.rows.try_emplace(key, std::move(witness));
  }
};

/// Visits every tuple in S_n^{2g} in lexicographic order, split into
/// contiguous blocks of the first coordinate when threads > 1.
inline SweepState sweep(int g, int n, const EnumerationOptions& options) {
  const std::uint64_t cost = enumeration_cost(g, n);
  if (cost > options.budget) {
    throw BudgetExceeded("enumerating S_" + std::to_string(n) + "^" + std::to_string(2 * g) + " costs " +
                         std::to_string(cost) + " permutation operations, budget is " +
                         std::to_string(options.budget));
  }
  const auto group = all_permutations(static_cast<std::size_t>(n));
  const std::size_t order = group.size();
  const auto slots = 2 * static_cast<std::size_t>(g);

  auto run_block = [&](std::size_t first_begin, std::size_t first_end) {
    SweepState state;
    state.g = g;
    state.n = n;
    if (first_begin >= first_end) return state;
    std::vector<std::size_t> digits(slots, 0);
    digits[0] = first_begin;
    std::vector<Permutation> tuple(slots, group[0]);
    tuple[0] = group[first_begin];
    while (true) {
      state.absorb(tuple);
      std::size_t pos = slots;
      while (pos > 0) {
        --pos;
        if (++digits[pos] < (pos == 0 ? first_end : order)) {
          tuple[pos] = group[digits[pos]];
          break;
        }
        if (pos == 0) return state;
        digits[pos] = 0;
        tuple[pos] = group[0];
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, order);
  std::vector<SweepState> parts(workers);
  if (workers == 1) {
    parts[0] = run_block(0, order);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = order * w / workers;
      const std::size_t end = order * (w + 1) / workers;
      pool.emplace_back([&parts, &run_block, w, begin, end] { parts[w] = run_block(begin, end); });
    }
    for (auto& t : pool) t.join();
  }
  SweepState total = std::move(parts[0]);
  for (std::size_t w = 1; w < workers; ++w) total.merge(std::move(parts[w]));

  total.report.base_genus = g;
  total.report.degree = n;
  total.sharpness.sharp = total.sharpness.counterexamples.empty();
  if (n % 2 == 0 && !total.sharpness.even_equality_attained) total.sharpness.even_equality_attained = false;
  total.table.base_genus = g;
  total.table.degree = n;
  total.table.cyclic_row_present = total.table.rows.contains(RealizabilityKey{1, n, n * g - (n - 1)});
  total.table.example_row_present =
      n % 2 == 1 ? total.table.rows.contains(RealizabilityKey{1, 1, n * g - (n - 1) / 2})
                 : total.table.rows.contains(RealizabilityKey{1, 2, n * g - n / 2});
  return total;
}

}  // namespace detail

/// Builds every unramified n-cover of the genus-g one-holed surface and
/// checks n·g − (n − 1) on all of them and n·g − ⌊(n − 1)/2⌋ on those with
/// one boundary circle.
inline EnumerationReport enumerate_covers(int g, int n, const EnumerationOptions& options = {}) {
  return detail::sweep(g, n, options).report;
}

/// Checks the equality characterisations over all unramified covers and
/// over every connected cover with one added simple branch point.
inline SharpnessReport verify_sharpness(int g, int n, const EnumerationOptions& options = {}) {
  return detail::sweep(g, n, options).sharpness;
}

/// First witness (in enumeration order) for each (m, k, genus) that occurs.
inline RealizabilityTable realizability_table(int g, int n, const EnumerationOptions& options = {}) {
  return detail::sweep(g, n, options).table;
}

/// All three results from a single sweep.
struct OracleRun {
  EnumerationReport enumeration;
  SharpnessReport sharpness;
  RealizabilityTable table;
};

inline OracleRun run_oracle(int g, int n, const EnumerationOptions& options = {}) {
  auto state = detail::sweep(g, n, options);
  return {std::move(state.report), std::move(state.sharpness), std::move(state.table)};
}

}  // namespace satgenus
