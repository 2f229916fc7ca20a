#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satgenus/braid.hpp"
#include "satgenus/error.hpp"

namespace satgenus {

enum class Quantity { genus4_lower, genus4_exact, euler4_upper, euler4_exact, genus3_lower };

enum class FormulaId { schubert_1, schubert_2, thm1_knot, thm1_link, lemma1, qp_euler, chi4_satellite };

inline std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::genus4_lower: return "genus4_lower";
    case Quantity::genus4_exact: return "genus4_exact";
    case Quantity::euler4_upper: return "euler4_upper";
    case Quantity::euler4_exact: return "euler4_exact";
    case Quantity::genus3_lower: return "genus3_lower";
  }
  return "?";
}

inline std::string_view to_string(FormulaId f) {
  switch (f) {
    case FormulaId::schubert_1: return "schubert_1";
    case FormulaId::schubert_2: return "schubert_2";
    case FormulaId::thm1_knot: return "thm1_knot";
    case FormulaId::thm1_link: return "thm1_link";
    case FormulaId::lemma1: return "lemma1";
    case FormulaId::qp_euler: return "qp_euler";
    case FormulaId::chi4_satellite: return "chi4_satellite";
  }
  return "?";
}

inline std::optional<Quantity> quantity_from_string(std::string_view s) {
  for (auto q : {Quantity::genus4_lower, Quantity::genus4_exact, Quantity::euler4_upper, Quantity::euler4_exact,
                 Quantity::genus3_lower}) {
    if (to_string(q) == s) return q;
  }
  return std::nullopt;
}

inline std::optional<FormulaId> formula_from_string(std::string_view s) {
  for (auto f : {FormulaId::schubert_1, FormulaId::schubert_2, FormulaId::thm1_knot, FormulaId::thm1_link,
                 FormulaId::lemma1, FormulaId::qp_euler, FormulaId::chi4_satellite}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

struct NamedInput {
  std::string name;
  long value;

  friend bool operator==(const NamedInput&, const NamedInput&) = default;
};

/// One evaluated bound. `value` is the raw formula value; `clamped` is
/// max(value, 0) for genus quantities and equal to `value` for Euler ones.
struct BoundReport {
  Quantity quantity;
  long value;
  long clamped;
  FormulaId formula;
  std::vector<NamedInput> inputs;

  long input(std::string_view name) const {
    for (const auto& in : inputs) {
      if (in.name == name) return in.value;
    }
    throw ValidationError("bound report has no input '" + std::string(name) + "'");
  }

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// ⌊a / b⌋ for b > 0.
inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

namespace detail {

inline bool is_genus(Quantity q) {
  return q == Quantity::genus4_lower || q == Quantity::genus4_exact || q == Quantity::genus3_lower;
}

inline BoundReport make_report(Quantity q, long value, FormulaId f, std::vector<NamedInput> inputs) {
  return BoundReport{q, value, is_genus(q) ? std::max(value, 0L) : value, f, std::move(inputs)};
}

inline long qp_genus_value(long strands, long bands) {
  const long twice = bands - strands + 1;
  if (twice % 2 != 0) {
    throw ValidationError("bands − strands + 1 = " + std::to_string(twice) +
                          " is odd; the closure of such a braid is not a knot");
  }
  if (twice < 0) {
    throw ValidationError("fewer than strands − 1 bands; the closure cannot be connected");
  }
  return twice / 2;
}

}  // namespace detail

/// Classical genus of a satellite: |n|·g(K), plus g(pattern) when given.
inline BoundReport schubert_bound(long genus_companion, long winding, std::optional<long> genus_pattern = std::nullopt) {
  if (genus_companion < 0) throw ValidationError("companion genus must be >= 0");
  if (genus_pattern && *genus_pattern < 0) throw ValidationError("pattern genus must be >= 0");
  const long base = std::abs(winding) * genus_companion;
  if (!genus_pattern) {
    return detail::make_report(Quantity::genus3_lower, base, FormulaId::schubert_1,
                               {{"gK", genus_companion}, {"n", winding}});
  }
  return detail::make_report(Quantity::genus3_lower, base + *genus_pattern, FormulaId::schubert_2,
                             {{"gK", genus_companion}, {"n", winding}, {"gPattern", *genus_pattern}});
}

/// Lower bound n·g4(K) − ⌊(n − 1)/2⌋ for an analytic satellite knot.
inline BoundReport thm1_knot_bound(long g4_companion, long winding) {
  if (g4_companion < 0 || winding < 0) throw ValidationError("knot bound needs g4K >= 0 and n >= 0");
  return detail::make_report(Quantity::genus4_lower, winding * g4_companion - floor_div(winding - 1, 2),
                             FormulaId::thm1_knot, {{"g4K", g4_companion}, {"n", winding}});
}

/// Lower bound n·g4(K) − (n − 1) for a link bounding a connected curve.
inline BoundReport thm1_link_bound(long g4_companion, long winding) {
  if (g4_companion < 0) throw ValidationError("link bound needs g4K >= 0");
  if (winding < 1) throw ValidationError("link bound needs n >= 1");
  return detail::make_report(Quantity::genus4_lower, winding * g4_companion - (winding - 1), FormulaId::thm1_link,
                             {{"g4K", g4_companion}, {"n", winding}});
}

/// χ4 = n − B for the closure of a quasipositive n-braid with B bands.
inline BoundReport qp_closure_euler(long strands, long bands) {
  if (strands < 1 || bands < 0) throw ValidationError("need strands >= 1 and bands >= 0");
  return detail::make_report(Quantity::euler4_exact, strands - bands, FormulaId::qp_euler,
                             {{"strands", strands}, {"bands", bands}});
}

/// g4 = (B − n + 1)/2 for a quasipositive n-braid with B bands whose closure
/// is a knot.
inline BoundReport qp_closure_genus(long strands, long bands) {
  if (strands < 1 || bands < 0) throw ValidationError("need strands >= 1 and bands >= 0");
  return detail::make_report(Quantity::genus4_exact, detail::qp_genus_value(strands, bands), FormulaId::qp_euler,
                             {{"strands", strands}, {"bands", bands}});
}

/// g4 of a satellite with quasipositive pattern: n·g4(K) + (B − n + 1)/2.
inline BoundReport lemma1_satellite_genus(long g4_companion, long winding, long pattern_bands) {
  if (g4_companion < 0 || winding < 1 || pattern_bands < 0) {
    throw ValidationError("need g4K >= 0, n >= 1, bands >= 0");
  }
  return detail::make_report(Quantity::genus4_exact,
                             winding * g4_companion + detail::qp_genus_value(winding, pattern_bands),
                             FormulaId::lemma1, {{"g4K", g4_companion}, {"n", winding}, {"bands", pattern_bands}});
}

/// χ4(L) ≤ n·χ4(K).
inline BoundReport chi4_satellite_bound(long chi4_companion, long winding) {
  if (winding < 1) throw ValidationError("χ4 bound needs n >= 1");
  return detail::make_report(Quantity::euler4_upper, winding * chi4_companion, FormulaId::chi4_satellite,
                             {{"chi4K", chi4_companion}, {"n", winding}});
}

/// Re-evaluates a report from its formula id, quantity and inputs alone.
inline long recompute(const BoundReport& r) {
  switch (r.formula) {
    case FormulaId::schubert_1: return schubert_bound(r.input("gK"), r.input("n")).value;
    case FormulaId::schubert_2: return schubert_bound(r.input("gK"), r.input("n"), r.input("gPattern")).value;
    case FormulaId::thm1_knot: return thm1_knot_bound(r.input("g4K"), r.input("n")).value;
    case FormulaId::thm1_link: return thm1_link_bound(r.input("g4K"), r.input("n")).value;
    case FormulaId::lemma1: return lemma1_satellite_genus(r.input("g4K"), r.input("n"), r.input("bands")).value;
    case FormulaId::qp_euler:
      return r.quantity == Quantity::euler4_exact ? qp_closure_euler(r.input("strands"), r.input("bands")).value
                                                  : qp_closure_genus(r.input("strands"), r.input("bands")).value;
    case FormulaId::chi4_satellite: return chi4_satellite_bound(r.input("chi4K"), r.input("n")).value;
  }
  throw ValidationError("unknown formula id");
}

/// Largest odd N not exceeding ⌈8n²/3⌉.
inline int suggest_odd_twists(int n) {
  if (n < 1) throw ValidationError("n must be >= 1");
  const long ceiling = (8L * n * n + 2) / 3;
  return static_cast<int>(ceiling % 2 == 1 ? ceiling : ceiling - 1);
}

/// The quasipositive 2-cable K2 of K1 against the analytic-satellite bound.
struct OrevkovGapReport {
  int n;
  int twists;
  long b1;                     // exponent sum of orevkov_k1(n)
  BoundReport g4_k1;           // genus of K1 from its bands
  long b2;                     // exponent sum of orevkov_k2(n, N)
  BoundReport g4_k2;           // genus of K2 from its bands
  BoundReport bound;           // thm1_knot_bound(g4(K1), 2)
  std::size_t k1_components;
  std::size_t k2_components;
  bool gap;                    // g4(K2) < bound
};

inline OrevkovGapReport orevkov_gap_report(int n, int twists) {
  if (n < 2) throw ValidationError("gap report needs n >= 2");
  if (twists < 1) throw ValidationError("gap report needs N >= 1");
  const BraidWord k1 = orevkov_k1(n);
  const BraidWord k2 = orevkov_k2(n, twists);
  OrevkovGapReport r{n,
                     twists,
                     exponent_sum(k1),
                     qp_closure_genus(n, exponent_sum(k1)),
                     exponent_sum(k2),
                     qp_closure_genus(2L * n, exponent_sum(k2)),
                     thm1_knot_bound(0, 2),
                     closure_component_count(k1),
                     closure_component_count(k2),
                     false};
  if (r.k1_components != 1 || r.k2_components != 1) {
    throw ValidationError("closure of the Orevkov braids is not a knot for n=" + std::to_string(n) +
                          ", N=" + std::to_string(twists));
  }
  r.bound = thm1_knot_bound(r.g4_k1.value, 2);
  r.gap = r.g4_k2.value < r.bound.value;
  return r;
}

}  // namespace satgenus
