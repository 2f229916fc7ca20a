#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satgenus/error.hpp"

namespace satgenus {

/// A point of {0, ..., n-1}. Cycle notation shown to users is 1-based.
using Point = std::uint32_t;

/// An element of the symmetric group S_n stored as its image table.
///
/// Products are read left to right: `compose(a, b)` applies `a` first and
/// then `b`. This matches braid words, whose first letter acts first.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// Zero-based image table; throws ValidationError unless it is a bijection.
  static Permutation from_images(std::vector<Point> images) {
    std::vector<bool> hit(images.size(), false);
    for (Point x : images) {
      if (x >= images.size() || hit[x]) {
        throw ValidationError("image table is not a bijection");
      }
      hit[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds a permutation from 1-based disjoint cycles, e.g. {{2,3},{4,5}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point from = cycle[i];
        const Point to = cycle[(i + 1) % cycle.size()];
        if (from < 1 || from > degree) {
          throw ValidationError("point " + std::to_string(from) + " outside 1.." + std::to_string(degree));
        }
        if (used[from - 1]) {
          throw ValidationError("point " + std::to_string(from) + " appears twice in cycle notation");
        }
        used[from - 1] = true;
        p.images_[from - 1] = to - 1;
      }
    }
    return p;
  }

  /// The transposition of the 1-based points i and j.
  static Permutation transposition(std::size_t degree, Point i, Point j) {
    return from_cycles(degree, {{i, j}});
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                  b.images_.begin(), b.images_.end());
  }

private:
  std::vector<Point> images_;
};

/// Cycle lengths including fixed points, sorted in descending order.
struct CycleType {
  std::vector<std::size_t> parts;

  std::size_t degree() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }
  std::size_t cycle_count() const { return parts.size(); }

  friend bool operator==(const CycleType&, const CycleType&) = default;

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts[i]);
    }
    return out + "}";
  }
};

namespace detail {

inline void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw ValidationError("degree mismatch: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  }
}

}  // namespace detail

/// Apply `a`, then `b`.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  detail::require_same_degree(a, b);
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b[a[i]];
  return Permutation::from_images(std::move(images));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[p[i]] = static_cast<Point>(i);
  return Permutation::from_images(std::move(images));
}

/// a·b·a⁻¹·b⁻¹, products read left to right.
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(compose(a, b), inverse(a)), inverse(b));
}

/// g·p·g⁻¹.
inline Permutation conjugate(const Permutation& p, const Permutation& g) {
  return compose(compose(g, p), inverse(g));
}

/// Disjoint cycles (zero-based), each starting at its least point, ordered by
/// that point. Fixed points are included as singleton cycles.
inline std::vector<std::vector<Point>> cycles(const Permutation& p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    auto& cycle = out.emplace_back();
    for (Point x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
  }
  return out;
}

inline std::size_t cycle_count(const Permutation& p) {
  std::size_t count = 0;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Point x = start; !seen[x]; x = p[x]) seen[x] = true;
  }
  return count;
}

inline CycleType cycle_type(const Permutation& p) {
  CycleType t;
  for (const auto& c : cycles(p)) t.parts.push_back(c.size());
  std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
  return t;
}

/// Even iff n minus the number of cycles is even.
inline bool is_even(const Permutation& p) { return (p.degree() - cycle_count(p)) % 2 == 0; }

/// Orbits of the subgroup generated by `gens` on {0..degree-1}, found by
/// union-find over the generator edges. Each orbit is sorted; orbits are
/// ordered by least element.
inline std::vector<std::vector<Point>> orbits(std::span<const Permutation> gens, std::size_t degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw ValidationError("generator of degree " + std::to_string(g.degree()) + " in a degree-" +
                            std::to_string(degree) + " family");
    }
  }
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& g : gens) {
    for (Point i = 0; i < degree; ++i) {
      const Point a = find(i);
      const Point b = find(g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Point>> out;
  std::vector<std::size_t> slot(degree, degree);
  for (Point i = 0; i < degree; ++i) {
    const Point r = find(i);
    if (slot[r] == degree) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

inline std::size_t orbit_count(std::span<const Permutation> gens, std::size_t degree) {
  return orbits(gens, degree).size();
}

inline bool is_transitive(std::span<const Permutation> gens, std::size_t degree) {
  return orbit_count(gens, degree) == 1;
}

/// All of S_n in lexicographic order of image tables.
inline std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<Permutation> out;
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// s1 = (2 3)(4 5)...(2m 2m+1), s2 = (1 2)(3 4)...(2m-1 2m) in S_{2m+1}.
/// Their commutator is a single (2m+1)-cycle.
inline std::pair<Permutation, Permutation> example1_pair(int m) {
  if (m < 1) throw ValidationError("odd commutator example needs m >= 1");
  const auto n = static_cast<std::size_t>(2 * m + 1);
  std::vector<std::vector<Point>> c1, c2;
  for (Point i = 1; i <= static_cast<Point>(m); ++i) {
    c1.push_back({2 * i, 2 * i + 1});
    c2.push_back({2 * i - 1, 2 * i});
  }
  return {Permutation::from_cycles(n, c1), Permutation::from_cycles(n, c2)};
}

/// s1 = (2 3)...(2m-2 2m-1), s2 = (1 2)...(2m-1 2m) in S_{2m}.
/// The commutator splits into two m-cycles; <s1, s2> is transitive.
inline std::pair<Permutation, Permutation> example2_pair(int m) {
  if (m < 2) throw ValidationError("even commutator example needs m >= 2");
  const auto n = static_cast<std::size_t>(2 * m);
  std::vector<std::vector<Point>> c1, c2;
  for (Point i = 1; i < static_cast<Point>(m); ++i) c1.push_back({2 * i, 2 * i + 1});
  for (Point i = 1; i <= static_cast<Point>(m); ++i) c2.push_back({2 * i - 1, 2 * i});
  return {Permutation::from_cycles(n, c1), Permutation::from_cycles(n, c2)};
}

inline constexpr std::size_t kDefaultOreMaxDegree = 6;

/// Exhaustive search over S_n x S_n for (a, b) with commutator(a, b) == target.
///
/// Pairs are visited with b in lexicographic order (outer) and a in
/// lexicographic order (inner), so the result is deterministic. For a fixed
/// b the equation reads a·b·a⁻¹ = target·b, so b is skipped unless b and
/// target·b share a cycle type. Odd targets never pass that filter.
inline std::optional<std::pair<Permutation, Permutation>> ore_commutator_search(
    const Permutation& target, std::size_t max_degree = kDefaultOreMaxDegree) {
  const std::size_t n = target.degree();
  if (n > max_degree) {
    throw BudgetExceeded("commutator search in S_" + std::to_string(n) + " exceeds the degree cap " +
                         std::to_string(max_degree));
  }
  const auto group = all_permutations(n);
  std::vector<Permutation> inverses;
  inverses.reserve(group.size());
  for (const auto& p : group) inverses.push_back(inverse(p));

  for (const auto& b : group) {
    const Permutation tb = compose(target, b);
    if (cycle_type(tb) != cycle_type(b)) continue;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (compose(compose(group[i], b), inverses[i]) == tb) return std::pair{group[i], b};
    }
  }
  return std::nullopt;
}

/// 1-based cycle notation with fixed points omitted; the identity is "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(c[i] + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

/// Parses cycle notation such as "(2 3)(4 5)" for a permutation of the given
/// degree. Points are whitespace-separated, 1-based; "" and "()" are the
/// identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles_out;
  std::vector<bool> used(degree, false);
  bool open = false;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
    } else if (c == '(') {
      if (open) throw ParseError("nested '('", i);
      open = true;
      cycles_out.emplace_back();
      ++i;
    } else if (c == ')') {
      if (!open) throw ParseError("unmatched ')'", i);
      open = false;
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (!open) throw ParseError("point outside of a cycle", i);
      const std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        if (value <= degree) value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        ++i;
      }
      if (value < 1 || value > degree) {
        throw ParseError("point '" + std::string(text.substr(start, i - start)) + "' outside 1.." +
                             std::to_string(degree),
                         start);
      }
      if (used[value - 1]) throw ParseError("point " + std::to_string(value) + " repeated", start);
      used[value - 1] = true;
      cycles_out.back().push_back(static_cast<Point>(value));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (open) throw ParseError("unterminated cycle", text.size());
  return Permutation::from_cycles(degree, cycles_out);
}

}  // namespace satgenus
