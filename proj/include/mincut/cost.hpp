#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace mincut {

/// Edge weights of the input graph. Always >= 1.
using Weight = std::int64_t;

/**
 * Signed edge cost with an exact infinite part.
 *
 * A cost stands for `inf * INFINITY + fin`. Ordering is lexicographic on
 * (inf, fin), so any cost with inf > 0 is larger than every finite cost, and
 * adding an infinite amount to a path and subtracting it again restores the
 * original values bit for bit.
 */
struct Cost {
  std::int64_t inf = 0;
  std::int64_t fin = 0;

  static constexpr Cost finite(std::int64_t v) { return {0, v}; }
  static constexpr Cost infinity() { return {1, 0}; }
  /// Magnitude used to temporarily paint root paths; dominates every cost
  /// that can arise from ordinary infinite edges.
  static constexpr Cost paint() { return {std::int64_t{1} << 40, 0}; }
  /// Placeholder for "no edge here"; never produced by arithmetic on real costs.
  static constexpr Cost none() { return {std::int64_t{1} << 60, 0}; }

  constexpr bool is_finite() const { return inf == 0; }
  constexpr bool is_painted() const { return inf >= paint().inf; }

  constexpr Cost& operator+=(Cost o) {
    inf += o.inf;
    fin += o.fin;
    return *this;
  }
  constexpr Cost& operator-=(Cost o) {
    inf -= o.inf;
    fin -= o.fin;
    return *this;
  }
  friend constexpr Cost operator+(Cost a, Cost b) { return a += b; }
  friend constexpr Cost operator-(Cost a, Cost b) { return a -= b; }
  friend constexpr Cost operator-(Cost a) { return {-a.inf, -a.fin}; }
  friend constexpr auto operator<=>(const Cost&, const Cost&) = default;
};

std::string to_string(const Cost& c);

}  // namespace mincut
