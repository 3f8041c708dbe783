#pragma once

#include "tdm/graph.hpp"
#include "tdm/ip.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace tdm {

struct SearchBox {
  std::vector<std::pair<std::int64_t, std::int64_t>> range;  // inclusive

  static SearchBox uniform(std::size_t n, std::int64_t lo, std::int64_t hi);
  // Box of the instance bounds; throws PreconditionError if some bound is missing.
  static SearchBox from_bounds(const IPInstance& ip);
  // Integer points within L-infinity distance radius of center.
  static SearchBox around(const RVec& center, const Rational& radius);
  SearchBox intersect(const SearchBox& o) const;
  bool empty() const;
  long double volume() const;
};

inline constexpr long double kDefaultBoxCap = 1e7L;

// Exhaustive search; the lexicographically smallest optimal point wins ties.
IPResult brute_force_ip(const IPInstance& ip, const SearchBox& box, long double cap = kDefaultBoxCap);

// Exact LP-based branch and bound.  Optional cutoff: only solutions with
// objective strictly above it are reported (result is infeasible otherwise).
IPResult branch_and_bound_ip(const IPInstance& ip, std::optional<Rational> cutoff = std::nullopt,
                             std::size_t node_cap = 200000);

inline constexpr int kStableSetCap = 24;

// Calls f(mask) for every stable set exactly once (masks in increasing order of
// the lowest differing vertex, empty set first).
void enumerate_stable_sets(const Graph& g, const std::function<void(std::uint64_t)>& f,
                           int cap = kStableSetCap);
std::uint64_t count_stable_sets(const Graph& g, int cap = kStableSetCap);

}  // namespace tdm
