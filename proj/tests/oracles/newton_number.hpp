#pragma once

// Independent combinatorial oracle for the Milnor number of a convenient
// Newton-nondegenerate plane curve singularity: nu = 2*Area - a - b + 1,
// with Area the area under the Newton diagram and a, b the axis intercepts.
// Pure lattice geometry, no polynomial arithmetic: keeps the oracle
// independent of the division engine it checks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

// Support points as (i, j) exponent pairs. Returns nothing when the support
// is not convenient (misses an axis intercept).
inline std::optional<std::int64_t> newton_number_2d(
    std::vector<std::pair<int, int>> support) {
  std::int64_t a = -1;  // x-axis intercept
  std::int64_t b = -1;  // y-axis intercept
  for (const auto& [i, j] : support) {
    if (j == 0 && (a < 0 || i < a)) a = i;
    if (i == 0 && (b < 0 || j < b)) b = j;
  }
  if (a <= 0 || b <= 0) return std::nullopt;

  // Keep only non-dominated points: dominated ones never touch the diagram.
  std::vector<std::pair<int, int>> points;
  for (const auto& p : support) {
    bool dominated = false;
    for (const auto& q : support) {
      if (q != p && q.first <= p.first && q.second <= p.second) {
        dominated = true;
        break;
      }
    }
    if (!dominated) points.push_back(p);
  }
  std::sort(points.begin(), points.end());

  // Lower convex chain from (0, b) to (a, 0).
  std::vector<std::pair<std::int64_t, std::int64_t>> chain;
  for (const auto& [i, j] : points) {
    std::pair<std::int64_t, std::int64_t> p{i, j};
    while (chain.size() >= 2) {
      auto& u = chain[chain.size() - 2];
      auto& v = chain[chain.size() - 1];
      std::int64_t cross = (v.first - u.first) * (p.second - u.second) -
                           (v.second - u.second) * (p.first - u.first);
      if (cross >= 0) {
        chain.pop_back();  // v above or on segment u-p
      } else {
        break;
      }
    }
    chain.push_back(p);
  }

  // Shoelace over (0,0) -> chain -> back; chain runs from (0,b) to (a,0).
  std::int64_t twice_area = 0;
  std::pair<std::int64_t, std::int64_t> prev{0, 0};
  for (const auto& p : chain) {
    twice_area += prev.first * p.second - p.first * prev.second;
    prev = p;
  }
  twice_area += prev.first * 0 - 0 * prev.second;
  if (twice_area < 0) twice_area = -twice_area;

  return twice_area - a - b + 1;
}

}  // namespace oracle
