#pragma once

#include <charconv>
#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satgenus/error.hpp"
#include "satgenus/permutation.hpp"

namespace satgenus {

/// A word in the Artin generators of B_n. Letter i > 0 is σ_i, letter -i is
/// σ_i⁻¹. Words are stored exactly as built; nothing is reduced implicitly.
class BraidWord {
public:
  explicit BraidWord(int strands, std::vector<int> letters = {}) : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw ValidationError("braid needs at least one strand");
    for (int l : letters_) {
      if (l == 0 || std::abs(l) > strands_ - 1) {
        throw ValidationError("generator " + std::to_string(l) + " not in B_" + std::to_string(strands_));
      }
    }
  }

  static BraidWord identity(int strands) { return BraidWord(strands); }

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_;
  std::vector<int> letters_;
};

/// One band w⁻¹·σ_k·w of a quasipositive factorization.
struct Band {
  BraidWord conjugator;
  int index;
};

/// A braid presented as an ordered product of bands. Holding one of these is
/// what makes a braid quasipositive here; quasipositivity is never decided.
struct BandFactorization {
  int strands;
  std::vector<Band> bands;
};

namespace detail {

inline void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw ValidationError("strand mismatch: " + std::to_string(a.strands()) + " vs " + std::to_string(b.strands()));
  }
}

inline void append(std::vector<int>& out, const BraidWord& w) {
  out.insert(out.end(), w.letters().begin(), w.letters().end());
}

}  // namespace detail

/// Parses whitespace-separated signed generator indices. A token may carry
/// an exponent suffix: `1^-3` is `-1 -1 -1`, `2^0` is empty.
inline BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw ValidationError("braid needs at least one strand");
  std::vector<int> letters;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
  auto parse_int = [&](std::string_view token, std::size_t offset, std::string_view whole) {
    int value = 0;
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("malformed token '" + std::string(whole) + "'", offset);
    }
    return value;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    const std::string_view token = text.substr(start, i - start);
    const std::size_t caret = token.find('^');
    const int generator = parse_int(token.substr(0, caret), start, token);
    int exponent = 1;
    if (caret != std::string_view::npos) exponent = parse_int(token.substr(caret + 1), start, token);
    if (generator == 0) throw ParseError("generator index 0 in token '" + std::string(token) + "'", start);
    if (std::abs(generator) > strands - 1) {
      throw ParseError("token '" + std::string(token) + "' names σ_" + std::to_string(std::abs(generator)) +
                           ", outside B_" + std::to_string(strands),
                       start);
    }
    const int letter = exponent < 0 ? -generator : generator;
    letters.insert(letters.end(), static_cast<std::size_t>(std::abs(exponent)), letter);
  }
  return BraidWord(strands, std::move(letters));
}

inline std::string format_braid(const BraidWord& w) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  detail::require_same_strands(a, b);
  std::vector<int> letters(a.letters().begin(), a.letters().end());
  detail::append(letters, b);
  return BraidWord(a.strands(), std::move(letters));
}

inline BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strands(), std::move(letters));
}

/// Word-level commutator a·b·a⁻¹·b⁻¹, unreduced.
inline BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  return concat(concat(concat(a, b), inverse(a)), inverse(b));
}

/// Number of positive letters minus number of negative letters.
inline long exponent_sum(const BraidWord& w) {
  long sum = 0;
  for (int l : w.letters()) sum += l > 0 ? 1 : -1;
  return sum;
}

/// Cancels adjacent pairs σ_i σ_i⁻¹ and σ_i⁻¹ σ_i until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  for (int l : w.letters()) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

/// Garside's half twist, unrolled from Δ_n = σ_1 ⋯ σ_{n-1} · Δ_{n-1} with
/// Δ_0 = Δ_1 = 1. Δ_0 is returned as the empty word on one strand.
inline BraidWord half_twist(int n) {
  if (n < 0) throw ValidationError("half twist needs n >= 0");
  std::vector<int> letters;
  for (int k = n; k >= 2; --k) {
    for (int i = 1; i < k; ++i) letters.push_back(i);
  }
  return BraidWord(std::max(n, 1), std::move(letters));
}

inline BraidWord full_twist(int n) {
  const BraidWord delta = half_twist(n);
  return concat(delta, delta);
}

/// The 2-cable image c(σ_j) = σ_{2j} σ_{2j-1} σ_{2j+1} σ_{2j} in B_strands.
inline BraidWord cable_generator(int j, int strands) {
  if (j < 1) throw ValidationError("cable generator needs j >= 1");
  if (strands < 2 * j + 2) {
    throw ValidationError("c(σ_" + std::to_string(j) + ") needs at least " + std::to_string(2 * j + 2) + " strands");
  }
  return BraidWord(strands, {2 * j, 2 * j - 1, 2 * j + 1, 2 * j});
}

inline BraidWord cable_generator(int j) {
  if (j < 1) throw ValidationError("cable generator needs j >= 1");
  return cable_generator(j, 2 * j + 2);
}

/// Δ_n² · σ_{n-1} ⋯ σ_1 in B_n. Positive, with connected closure.
inline BraidWord orevkov_k1(int n) {
  if (n < 2) throw ValidationError("orevkov_k1 needs n >= 2");
  std::vector<int> letters;
  detail::append(letters, full_twist(n));
  for (int i = n - 1; i >= 1; --i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

/// σ_1^{-N} · c(σ_{n-1}) ⋯ c(σ_1) · Δ_{2n}² in B_{2n}: a 2-cable of the
/// closure of orevkov_k1(n), connected exactly when N is odd.
inline BraidWord orevkov_k2(int n, int twists) {
  if (n < 2) throw ValidationError("orevkov_k2 needs n >= 2");
  if (twists < 0) throw ValidationError("orevkov_k2 needs N >= 0");
  const int strands = 2 * n;
  std::vector<int> letters(static_cast<std::size_t>(twists), -1);
  for (int j = n - 1; j >= 1; --j) detail::append(letters, cable_generator(j, strands));
  detail::append(letters, full_twist(strands));
  return BraidWord(strands, std::move(letters));
}

/// Image under B_n → S_n, σ_i ↦ (i i+1), letters applied in reading order.
inline Permutation permutation_of(const BraidWord& w) {
  const auto n = static_cast<std::size_t>(w.strands());
  std::vector<Point> images(n);
  std::vector<Point> preimage(n);
  for (Point i = 0; i < n; ++i) images[i] = preimage[i] = i;
  for (int l : w.letters()) {
    const auto a = static_cast<Point>(std::abs(l) - 1);
    std::swap(images[preimage[a]], images[preimage[a + 1]]);
    std::swap(preimage[a], preimage[a + 1]);
  }
  return Permutation::from_images(std::move(images));
}

/// Number of link components of the closed braid.
inline std::size_t closure_component_count(const BraidWord& w) { return cycle_count(permutation_of(w)); }

inline BraidWord expand_bands(const BandFactorization& f) {
  if (f.strands < 1) throw ValidationError("band factorization needs at least one strand");
  std::vector<int> letters;
  for (const auto& band : f.bands) {
    if (band.conjugator.strands() != f.strands) {
      throw ValidationError("band conjugator on " + std::to_string(band.conjugator.strands()) +
                            " strands in a factorization on " + std::to_string(f.strands));
    }
    if (band.index < 1 || band.index > f.strands - 1) {
      throw ValidationError("band index " + std::to_string(band.index) + " not in B_" + std::to_string(f.strands));
    }
    detail::append(letters, inverse(band.conjugator));
    letters.push_back(band.index);
    detail::append(letters, band.conjugator);
  }
  return BraidWord(f.strands, std::move(letters));
}

}  // namespace satgenus
