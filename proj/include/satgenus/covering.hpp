#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satgenus/braid.hpp"
#include "satgenus/error.hpp"
#include "satgenus/permutation.hpp"

namespace satgenus {

/// A compact oriented surface up to diffeomorphism: m components, total
/// genus g summed over components, k boundary circles.
struct SurfaceShape {
  int components = 1;
  int genus = 0;
  int boundary = 0;

  friend bool operator==(const SurfaceShape&, const SurfaceShape&) = default;
};

/// χ = 2m − 2g − k.
inline long euler_characteristic(const SurfaceShape& s) {
  return 2L * s.components - 2L * s.genus - s.boundary;
}

/// χ(cover) = n·χ(base) − B for an n-fold branched covering.
inline long rh_euler(int degree, long chi_base, long branch) {
  if (degree < 1) throw ValidationError("covering degree must be >= 1");
  if (branch < 0) throw ValidationError("branch count must be >= 0");
  return degree * chi_base - branch;
}

/// Total genus of a surface with the given components, boundary circles and
/// Euler characteristic. Throws InvariantViolation when no such surface exists.
inline int genus_from_euler(int components, int boundary, long chi) {
  const long twice = 2L * components - boundary - chi;
  if (twice < 0 || twice % 2 != 0) {
    throw InvariantViolation("no surface with m=" + std::to_string(components) + ", k=" + std::to_string(boundary) +
                             ", χ=" + std::to_string(chi));
  }
  return static_cast<int>(twice / 2);
}

/// The Riemann–Hurwitz ledger of an n-fold covering of a connected base.
struct CoverData {
  int degree = 1;
  SurfaceShape base{1, 0, 1};
  int branch = 0;
  SurfaceShape cover{1, 0, 1};

  friend bool operator==(const CoverData&, const CoverData&) = default;
};

/// n(2g(base) − 1) + B + 2m − k; must equal 2·g(cover).
inline long eq4a_twice_genus(const CoverData& c) {
  return static_cast<long>(c.degree) * (2L * c.base.genus - 1) + c.branch + 2L * c.cover.components -
         c.cover.boundary;
}

/// Throws InvariantViolation unless every ledger identity holds.
inline void check_cover(const CoverData& c) {
  auto fail = [](const std::string& what) { throw InvariantViolation("cover ledger: " + what); };
  if (c.degree < 1) fail("degree < 1");
  if (c.base.components != 1) fail("base must be connected");
  if (c.branch < 0) fail("negative branch count");
  if (c.cover.components < 1 || c.cover.components > c.degree) fail("component count outside 1..n");
  if (c.cover.boundary > c.degree * c.base.boundary) fail("more boundary circles than n·k(base)");
  if (c.cover.genus < 0) fail("negative genus");
  if (euler_characteristic(c.cover) != rh_euler(c.degree, euler_characteristic(c.base), c.branch)) {
    fail("Riemann–Hurwitz relation broken");
  }
  if (eq4a_twice_genus(c) != 2L * c.cover.genus) fail("genus identity 2g = n(2g_X − 1) + B + 2m − k broken");
}

/// An unramified cover of the genus-g surface with one boundary circle,
/// given by the images (s_1, t_1, ..., s_g, t_g) of the standard generators
/// of its free fundamental group.
struct HomomorphismCover {
  int base_genus = 1;
  int degree = 1;
  std::vector<Permutation> generator_images;
};

namespace detail {

inline void check_homomorphism(const HomomorphismCover& h) {
  if (h.base_genus < 1) throw ValidationError("base genus must be >= 1");
  if (h.degree < 1) throw ValidationError("covering degree must be >= 1");
  if (h.generator_images.size() != 2 * static_cast<std::size_t>(h.base_genus)) {
    throw ValidationError("expected " + std::to_string(2 * h.base_genus) + " generator images, got " +
                          std::to_string(h.generator_images.size()));
  }
  for (const auto& p : h.generator_images) {
    if (p.degree() != static_cast<std::size_t>(h.degree)) {
      throw ValidationError("generator image of degree " + std::to_string(p.degree()) + " in a degree-" +
                            std::to_string(h.degree) + " cover");
    }
  }
}

}  // namespace detail

/// Monodromy around the boundary circle: [s_1,t_1]·[s_2,t_2]⋯[s_g,t_g].
inline Permutation boundary_permutation(const HomomorphismCover& h) {
  detail::check_homomorphism(h);
  Permutation product = Permutation::identity(static_cast<std::size_t>(h.degree));
  for (std::size_t i = 0; i < h.generator_images.size(); i += 2) {
    product = compose(product, commutator(h.generator_images[i], h.generator_images[i + 1]));
  }
  return product;
}

/// Components are the orbits of the image group; boundary circles are the
/// cycles of the boundary monodromy. Each component's genus is computed
/// from its own χ = |orbit|·χ(base) and checked before summing.
inline CoverData cover_from_homomorphism(const HomomorphismCover& h) {
  const Permutation boundary = boundary_permutation(h);
  const auto n = static_cast<std::size_t>(h.degree);
  const auto components = orbits(h.generator_images, n);
  const long chi_base = 1 - 2L * h.base_genus;

  std::vector<int> orbit_of(n);
  for (std::size_t o = 0; o < components.size(); ++o) {
    for (Point x : components[o]) orbit_of[x] = static_cast<int>(o);
  }
  std::vector<int> circles(components.size(), 0);
  for (const auto& c : cycles(boundary)) ++circles[orbit_of[c.front()]];

  int genus = 0;
  int boundary_total = 0;
  for (std::size_t o = 0; o < components.size(); ++o) {
    const long chi = static_cast<long>(components[o].size()) * chi_base;
    genus += genus_from_euler(1, circles[o], chi);
    boundary_total += circles[o];
  }

  CoverData out;
  out.degree = h.degree;
  out.base = SurfaceShape{1, h.base_genus, 1};
  out.branch = 0;
  out.cover = SurfaceShape{static_cast<int>(components.size()), genus, boundary_total};
  check_cover(out);
  return out;
}

/// s_1 ↦ (1 2 ⋯ n), every other generator ↦ identity.
inline HomomorphismCover cyclic_homomorphism(int g, int n) {
  if (g < 1) throw ValidationError("base genus must be >= 1");
  if (n < 1) throw ValidationError("covering degree must be >= 1");
  std::vector<Point> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<Point>(i + 1);
  const auto degree = static_cast<std::size_t>(n);
  HomomorphismCover h{g, n, std::vector<Permutation>(2 * static_cast<std::size_t>(g), Permutation::identity(degree))};
  h.generator_images[0] = Permutation::from_cycles(degree, {cycle});
  return h;
}

/// (s_1, t_1) ↦ the given pair, every other generator ↦ identity.
inline HomomorphismCover pair_homomorphism(int g, const std::pair<Permutation, Permutation>& pair) {
  if (g < 1) throw ValidationError("base genus must be >= 1");
  detail::require_same_degree(pair.first, pair.second);
  const auto degree = pair.first.degree();
  HomomorphismCover h{g, static_cast<int>(degree),
                      std::vector<Permutation>(2 * static_cast<std::size_t>(g), Permutation::identity(degree))};
  h.generator_images[0] = pair.first;
  h.generator_images[1] = pair.second;
  return h;
}

/// The connected unramified n-cover of the genus-g one-holed surface with n
/// boundary circles; its genus n·g − (n − 1) is the least possible.
inline CoverData cyclic_cover(int g, int n) { return cover_from_homomorphism(cyclic_homomorphism(g, n)); }

/// Adds one simple branch point to a connected cover. With `merge` set to
/// two distinct boundary-circle indices the circles are joined (k − 1);
/// without it one circle is split in two (k + 1). The caller chooses,
/// since the numbers alone cannot.
inline CoverData add_branch_point(const CoverData& c, std::optional<std::pair<int, int>> merge) {
  check_cover(c);
  if (c.cover.components != 1) throw ValidationError("branch point can only be added to a connected cover");
  CoverData out = c;
  out.branch += 1;
  if (merge) {
    const auto [i, j] = *merge;
    const int k = c.cover.boundary;
    if (i < 0 || j < 0 || i >= k || j >= k) {
      throw ValidationError("boundary-circle index out of range 0.." + std::to_string(k - 1));
    }
    if (i == j) throw ValidationError("cannot merge a boundary circle with itself");
    out.cover.boundary -= 1;
  } else {
    if (c.cover.boundary + 1 > c.degree * c.base.boundary) {
      throw ValidationError("every boundary circle is already a single sheet; nothing to split");
    }
    out.cover.boundary += 1;
  }
  const long chi = rh_euler(out.degree, euler_characteristic(out.base), out.branch);
  out.cover.genus = genus_from_euler(out.cover.components, out.cover.boundary, chi);
  check_cover(out);
  return out;
}

/// expand_bands(qp) followed by the word commutators [α_i, β_i], unreduced.
inline BraidWord pattern_word(const BandFactorization& qp, const std::vector<std::pair<BraidWord, BraidWord>>& pairs) {
  BraidWord out = expand_bands(qp);
  for (const auto& [alpha, beta] : pairs) out = concat(out, commutator(alpha, beta));
  return out;
}

}  // namespace satgenus
