// satgenus: command-line front end for the satgenus library.
//
// Exit codes: 0 success, 2 usage or validation error, 3 resource budget
// exceeded, 4 an invariant that must always hold was found violated.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satgenus/io.hpp"
#include "satgenus/satgenus.hpp"

namespace {

using namespace satgenus;

constexpr const char* kFormatVersion = "1.0.0";
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvariant = 4;

struct OutputFlags {
  bool json = false;
  bool csv = false;
  std::string out;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_flag("--json", flags.json, "Print the JSON envelope instead of text");
  cmd->add_option("--out", flags.out, "Also write the JSON envelope to this file (atomically)");
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(temp, std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cannot open '" + temp.string() + "' for writing");
    f << text;
    f.flush();
    if (!f) throw ValidationError("failed writing '" + temp.string() + "'");
  }
  std::filesystem::rename(temp, target);
}

void print_text(const Json& value, const std::string& prefix, std::ostream& os) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) print_text(child, prefix.empty() ? key : prefix + "." + key, os);
  } else if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
    for (std::size_t i = 0; i < value.size(); ++i) print_text(value[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

Json envelope_of(const std::string& command, Json inputs, Json results) {
  return {{"command", command},
          {"format_version", kFormatVersion},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)}};
}

void emit_file(const std::string& command, Json inputs, Json results, const std::string& path) {
  write_atomically(path, envelope_of(command, std::move(inputs), std::move(results)).dump(2) + "\n");
}

void emit(const std::string& command, Json inputs, Json results, const OutputFlags& flags) {
  const Json envelope = envelope_of(command, std::move(inputs), std::move(results));
  const std::string text = envelope.dump(2) + "\n";
  if (!flags.out.empty()) write_atomically(flags.out, text);
  if (flags.json) {
    std::cout << text;
  } else {
    std::cout << command << "\n";
    print_text(envelope["results"], "", std::cout);
  }
}

std::string csv_of(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "formula,quantity,inputs,value,clamped\n";
  for (const auto& r : reports) {
    os << to_string(r.formula) << "," << to_string(r.quantity) << ",";
    for (std::size_t i = 0; i < r.inputs.size(); ++i) {
      os << (i ? ";" : "") << r.inputs[i].name << "=" << r.inputs[i].value;
    }
    os << "," << r.value << "," << r.clamped << "\n";
  }
  return os.str();
}

Json cycle_type_json(const CycleType& t) { return Json(t.parts); }

Json braid_summary(const BraidWord& w) {
  const Permutation p = permutation_of(w);
  return {{"strands", w.strands()},
          {"length", w.size()},
          {"exponent_sum", exponent_sum(w)},
          {"permutation", format_cycles(p)},
          {"cycle_type", cycle_type_json(cycle_type(p))},
          {"components", closure_component_count(w)}};
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SATGENUS_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("SATGENUS_BUDGET is not an unsigned integer: '") + env + "'");
  }
  return kDefaultBudget;
}

std::vector<std::pair<BraidWord, BraidWord>> parse_commutators(const std::vector<std::string>& specs, int strands) {
  std::vector<std::pair<BraidWord, BraidWord>> out;
  for (const auto& spec : specs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ValidationError("commutator '" + spec + "' must be written A:B");
    out.emplace_back(parse_braid(spec.substr(0, colon), strands), parse_braid(spec.substr(colon + 1), strands));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot read '" + path + "'");
    buffer << f.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Four-ball genus bounds for analytic satellites, with exhaustive covering checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kFormatVersion);

  // braid ------------------------------------------------------------------
  auto* braid = app.add_subcommand("braid", "Braid words and the named braid families");
  braid->require_subcommand(1);

  OutputFlags analyze_out;
  std::string word;
  int strands = 0;
  auto* analyze = braid->add_subcommand("analyze", "Exponent sum, permutation and closure components of a word");
  analyze->add_option("--word", word, "Whitespace-separated generators, e.g. \"1 2 -1\" or \"1^3\"")->required();
  analyze->add_option("--strands", strands, "Number of strands")->required();
  add_output_flags(analyze, analyze_out);

  OutputFlags halftwist_out;
  int halftwist_n = 0;
  auto* halftwist = braid->add_subcommand("halftwist", "Garside half twist and its square");
  halftwist->add_option("--strands", halftwist_n, "Number of strands")->required()->check(CLI::NonNegativeNumber);
  add_output_flags(halftwist, halftwist_out);

  OutputFlags orevkov_out;
  int orevkov_n = 0;
  std::optional<int> orevkov_twists;
  auto* orevkov = braid->add_subcommand("orevkov", "The K1 braid and, with --N, its 2-cable K2");
  orevkov->add_option("--n", orevkov_n, "Strand count of K1")->required();
  orevkov->add_option("--N", orevkov_twists, "Number of σ1⁻¹ twists in K2");
  add_output_flags(orevkov, orevkov_out);

  OutputFlags bands_out;
  std::string bands_file;
  std::vector<std::string> bands_commutators;
  auto* bands = braid->add_subcommand("bands", "Expand a band factorization, optionally times commutators");
  bands->add_option("--file", bands_file, "Band factorization JSON ('-' for stdin)")->required();
  bands->add_option("--commutator", bands_commutators, "Word commutator factor A:B, repeatable");
  add_output_flags(bands, bands_out);

  // bounds -----------------------------------------------------------------
  OutputFlags bounds_out;
  long bounds_g4k = 0;
  long bounds_n = 0;
  std::optional<long> bounds_pattern_genus;
  std::optional<long> bounds_pattern_bands;
  std::optional<long> bounds_chi4k;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the genus and Euler bounds for a satellite");
  bounds->add_option("--g4k", bounds_g4k, "Genus of the companion knot")->required();
  bounds->add_option("--n", bounds_n, "Winding number")->required();
  bounds->add_option("--pattern-genus", bounds_pattern_genus, "Pattern genus (adds the refined classical bound)");
  bounds->add_option("--pattern-bands", bounds_pattern_bands, "Bands of a quasipositive pattern braid (exact g4)");
  bounds->add_option("--chi4k", bounds_chi4k, "Companion χ4 (adds the χ4 bound)");
  bounds->add_flag("--csv", bounds_out.csv, "Print the table as CSV");
  add_output_flags(bounds, bounds_out);

  // examples ---------------------------------------------------------------
  auto* examples = app.add_subcommand("examples", "Worked examples");
  examples->require_subcommand(1);
  OutputFlags gap_out;
  int gap_n = 0;
  std::string gap_twists = "auto";
  auto* gap = examples->add_subcommand("orevkov", "Quasipositive 2-cable against the analytic-satellite bound");
  gap->add_option("--n", gap_n, "Strand count of K1")->required();
  gap->add_option("--N", gap_twists, "Odd twist count, or 'auto' for the largest odd N ≤ ⌈8n²/3⌉");
  add_output_flags(gap, gap_out);

  // cover ------------------------------------------------------------------
  auto* cover = app.add_subcommand("cover", "Branched coverings and exhaustive enumeration");
  cover->require_subcommand(1);

  OutputFlags enum_out;
  int enum_g = 0;
  int enum_n = 0;
  std::optional<std::uint64_t> enum_budget;
  unsigned enum_threads = 1;
  bool enum_table = false;
  auto* enumerate = cover->add_subcommand("enumerate", "Enumerate every homomorphism cover and check the bounds");
  enumerate->add_option("--genus", enum_g, "Base genus")->required();
  enumerate->add_option("--degree", enum_n, "Covering degree")->required();
  enumerate->add_option("--budget", enum_budget, "Permutation-operation budget (default 1e9 or SATGENUS_BUDGET)");
  enumerate->add_option("--threads", enum_threads, "Worker threads; results are identical for any count")
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--table", enum_table, "Include the realizability table");
  add_output_flags(enumerate, enum_out);

  OutputFlags cyclic_out;
  int cyclic_g = 0;
  int cyclic_n = 0;
  auto* cyclic = cover->add_subcommand("cyclic", "Connected unramified cover with n boundary circles");
  cyclic->add_option("--genus", cyclic_g, "Base genus")->required();
  cyclic->add_option("--degree", cyclic_n, "Covering degree")->required();
  add_output_flags(cyclic, cyclic_out);

  OutputFlags hom_out;
  int hom_g = 0;
  int hom_n = 0;
  std::vector<std::string> hom_images;
  std::string hom_example;
  int hom_m = 0;
  std::string hom_branch;
  auto* from_hom = cover->add_subcommand("from-hom", "Cover defined by generator images in S_n");
  from_hom->add_option("--genus", hom_g, "Base genus")->required();
  from_hom->add_option("--degree", hom_n, "Covering degree (implied by --example)");
  auto* images_opt = from_hom->add_option("--image", hom_images, "Generator image in cycle notation, 2g times");
  auto* example_opt =
      from_hom->add_option("--example", hom_example, "Use a commutator example pair for (s1, t1)")
          ->check(CLI::IsMember({"odd", "even"}));
  from_hom->add_option("--m", hom_m, "Parameter m of the example pair");
  from_hom->add_option("--branch", hom_branch, "Add one simple branch point")->check(CLI::IsMember({"merge", "split"}));
  images_opt->excludes(example_opt);
  add_output_flags(from_hom, hom_out);

  // perm -------------------------------------------------------------------
  auto* perm = app.add_subcommand("perm", "Symmetric-group computations");
  perm->require_subcommand(1);

  OutputFlags comm_out;
  std::size_t comm_degree = 0;
  std::string comm_a, comm_b;
  auto* comm = perm->add_subcommand("commutator", "Commutator a·b·a⁻¹·b⁻¹ (left to right)");
  comm->add_option("--degree", comm_degree, "Degree n")->required();
  comm->add_option("--a", comm_a, "First permutation, cycle notation")->required();
  comm->add_option("--b", comm_b, "Second permutation, cycle notation")->required();
  add_output_flags(comm, comm_out);

  OutputFlags pex_out;
  std::string pex_type;
  int pex_m = 0;
  auto* pex = perm->add_subcommand("examples", "Commutator examples with full-cycle or two-cycle commutators");
  pex->add_option("--type", pex_type, "odd (n = 2m+1) or even (n = 2m)")
      ->required()
      ->check(CLI::IsMember({"odd", "even"}));
  pex->add_option("--m", pex_m, "Parameter m")->required();
  add_output_flags(pex, pex_out);

  OutputFlags ore_out;
  std::size_t ore_degree = 0;
  std::string ore_target;
  std::size_t ore_max = kDefaultOreMaxDegree;
  auto* ore = perm->add_subcommand("ore", "Exhaustive search for a commutator pair");
  ore->add_option("--target", ore_target, "Target permutation, cycle notation")->required();
  ore->add_option("--degree", ore_degree, "Degree n")->required();
  ore->add_option("--max-degree", ore_max, "Override the degree cap of the exhaustive search");
  add_output_flags(ore, ore_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*analyze) {
    const BraidWord w = parse_braid(word, strands);
    emit("braid analyze", {{"word", word}, {"strands", strands}}, braid_summary(w), analyze_out);
  } else if (*halftwist) {
    const BraidWord delta = half_twist(halftwist_n);
    emit("braid halftwist", {{"strands", halftwist_n}},
         {{"half_twist", format_braid(delta)},
          {"half_twist_summary", braid_summary(delta)},
          {"full_twist_summary", braid_summary(concat(delta, delta))}},
         halftwist_out);
  } else if (*orevkov) {
    const BraidWord k1 = orevkov_k1(orevkov_n);
    Json results = {{"K1", format_braid(k1)}, {"K1_summary", braid_summary(k1)}};
    Json inputs = {{"n", orevkov_n}};
    if (orevkov_twists) {
      const BraidWord k2 = orevkov_k2(orevkov_n, *orevkov_twists);
      results["K2"] = format_braid(k2);
      results["K2_summary"] = braid_summary(k2);
      inputs["N"] = *orevkov_twists;
    }
    emit("braid orevkov", inputs, results, orevkov_out);
  } else if (*bands) {
    const BandFactorization f = band_factorization_from_json(read_json_file(bands_file));
    const BraidWord w = pattern_word(f, parse_commutators(bands_commutators, f.strands));
    Json results = braid_summary(w);
    results["word"] = format_braid(w);
    results["bands"] = f.bands.size();
    results["euler4"] = to_json(qp_closure_euler(f.strands, static_cast<long>(f.bands.size())));
    if (closure_component_count(w) == 1) {
      results["genus4"] = to_json(qp_closure_genus(f.strands, static_cast<long>(f.bands.size())));
    }
    emit("braid bands", {{"factorization", to_json(f)}, {"commutators", bands_commutators}}, results, bands_out);
  } else if (*bounds) {
    std::vector<BoundReport> table{schubert_bound(bounds_g4k, bounds_n)};
    if (bounds_pattern_genus) table.push_back(schubert_bound(bounds_g4k, bounds_n, *bounds_pattern_genus));
    table.push_back(thm1_knot_bound(bounds_g4k, bounds_n));
    table.push_back(thm1_link_bound(bounds_g4k, bounds_n));
    if (bounds_pattern_bands) table.push_back(lemma1_satellite_genus(bounds_g4k, bounds_n, *bounds_pattern_bands));
    if (bounds_chi4k) table.push_back(chi4_satellite_bound(*bounds_chi4k, bounds_n));
    Json rows = Json::array();
    Json by_formula = Json::object();
    for (const auto& r : table) {
      rows.push_back(to_json(r));
      by_formula[std::string(to_string(r.formula))] = r.value;
    }
    Json inputs = {{"g4k", bounds_g4k}, {"n", bounds_n}};
    if (bounds_pattern_genus) inputs["pattern_genus"] = *bounds_pattern_genus;
    if (bounds_pattern_bands) inputs["pattern_bands"] = *bounds_pattern_bands;
    if (bounds_chi4k) inputs["chi4k"] = *bounds_chi4k;
    Json results = {{"values", by_formula}, {"reports", rows}};
    if (bounds_out.csv && !bounds_out.json) {
      // CSV replaces the text rendering; --out still receives the envelope.
      std::cout << csv_of(table);
      if (!bounds_out.out.empty()) emit_file("bounds", inputs, results, bounds_out.out);
    } else {
      emit("bounds", inputs, results, bounds_out);
    }
  } else if (*gap) {
    int twists = 0;
    if (gap_twists == "auto") {
      twists = suggest_odd_twists(gap_n);
    } else {
      try {
        std::size_t used = 0;
        twists = std::stoi(gap_twists, &used);
        if (used != gap_twists.size()) throw std::invalid_argument(gap_twists);
      } catch (const std::exception&) {
        throw ValidationError("--N must be an integer or 'auto'");
      }
    }
    emit("examples orevkov", {{"n", gap_n}, {"N", gap_twists}}, to_json(orevkov_gap_report(gap_n, twists)), gap_out);
  } else if (*enumerate) {
    const EnumerationOptions options{enum_budget.value_or(default_budget()), enum_threads};
    const OracleRun run = run_oracle(enum_g, enum_n, options);
    Json results = {{"enumeration", to_json(run.enumeration)}, {"sharpness", to_json(run.sharpness)}};
    if (enum_table) results["realizability"] = to_json(run.table);
    emit("cover enumerate",
         {{"genus", enum_g}, {"degree", enum_n}, {"budget", options.budget}, {"threads", options.threads}}, results,
         enum_out);
    if (!run.enumeration.violations.empty() || !run.sharpness.sharp) return kExitInvariant;
  } else if (*cyclic) {
    emit("cover cyclic", {{"genus", cyclic_g}, {"degree", cyclic_n}},
         {{"cover", to_json(cyclic_cover(cyclic_g, cyclic_n))},
          {"images", tuple_to_json(cyclic_homomorphism(cyclic_g, cyclic_n).generator_images)}},
         cyclic_out);
  } else if (*from_hom) {
    HomomorphismCover h;
    if (!hom_example.empty()) {
      const auto pair = hom_example == "odd" ? example1_pair(hom_m) : example2_pair(hom_m);
      if (hom_n != 0 && static_cast<std::size_t>(hom_n) != pair.first.degree()) {
        throw ValidationError("--degree disagrees with the example pair's degree " +
                              std::to_string(pair.first.degree()));
      }
      h = pair_homomorphism(hom_g, pair);
    } else {
      if (hom_n < 1) throw ValidationError("--degree is required with --image");
      h = HomomorphismCover{hom_g, hom_n, {}};
      for (const auto& text : hom_images) {
        h.generator_images.push_back(parse_cycles(text, static_cast<std::size_t>(hom_n)));
      }
    }
    CoverData c = cover_from_homomorphism(h);
    Json results = {{"images", tuple_to_json(h.generator_images)},
                    {"boundary_permutation", format_cycles(boundary_permutation(h))},
                    {"unramified", to_json(c)}};
    if (!hom_branch.empty()) {
      c = add_branch_point(c, hom_branch == "merge" ? std::optional{std::pair{0, 1}} : std::nullopt);
      results["branched"] = to_json(c);
    }
    results["cover"] = to_json(c);
    Json inputs = {{"genus", hom_g}, {"degree", h.degree}};
    if (!hom_example.empty()) {
      inputs["example"] = hom_example;
      inputs["m"] = hom_m;
    } else {
      inputs["images"] = hom_images;
    }
    if (!hom_branch.empty()) inputs["branch"] = hom_branch;
    emit("cover from-hom", inputs, results, hom_out);
  } else if (*comm) {
    const Permutation a = parse_cycles(comm_a, comm_degree);
    const Permutation b = parse_cycles(comm_b, comm_degree);
    const Permutation c = commutator(a, b);
    emit("perm commutator", {{"degree", comm_degree}, {"a", comm_a}, {"b", comm_b}},
         {{"commutator", format_cycles(c)}, {"cycle_type", cycle_type_json(cycle_type(c))}, {"even", is_even(c)}},
         comm_out);
  } else if (*pex) {
    const auto [s1, s2] = pex_type == "odd" ? example1_pair(pex_m) : example2_pair(pex_m);
    const Permutation c = commutator(s1, s2);
    const std::vector<Permutation> gens{s1, s2};
    emit("perm examples", {{"type", pex_type}, {"m", pex_m}},
         {{"degree", s1.degree()},
          {"s1", format_cycles(s1)},
          {"s2", format_cycles(s2)},
          {"commutator", format_cycles(c)},
          {"cycle_type", cycle_type_json(cycle_type(c))},
          {"transitive", is_transitive(gens, s1.degree())}},
         pex_out);
  } else if (*ore) {
    const Permutation target = parse_cycles(ore_target, ore_degree);
    const auto found = ore_commutator_search(target, ore_max);
    Json results = {{"even", is_even(target)}, {"found", found.has_value()}};
    results["witness"] = found ? Json{{"a", format_cycles(found->first)}, {"b", format_cycles(found->second)}}
                               : Json(nullptr);
    emit("perm ore", {{"target", ore_target}, {"degree", ore_degree}, {"max_degree", ore_max}}, results, ore_out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const satgenus::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const satgenus::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const satgenus::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
