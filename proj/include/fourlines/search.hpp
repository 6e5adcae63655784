#pragma once

// Case patterns and bounded enumeration of minimal volumes, limit points of
// volumes along series, and the series scan.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourlines/fast_eval.hpp"
#include "fourlines/surface.hpp"

namespace fourlines {

/// Position of one survivor: a corner (j < 0) or an edge {i, j}, i < j.
struct Slot {
  int i = 0;
  int j = -1;
  bool is_corner() const { return j < 0; }
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct CasePattern {
  int index = 0;                 // 1-based case number
  Context set = Context::S0;
  std::array<Slot, 4> slots;     // corners first, then edges, lexicographic
  /// Corners get b = 1 in S1; edge survivors always get b = 0.
  std::array<Rational, 4> coefficients() const;
  std::string describe() const;  // e.g. "12,12,34,34" or "L1 + 12,14,23"
};

std::vector<CasePattern> patterns_S0();
std::vector<CasePattern> patterns_S1();
/// Pattern `index` (1-based) of the given set; throws std::out_of_range.
CasePattern pattern(Context set, int index);

struct Argmin {
  IntMatrix4 matrix;
  std::array<Rational, 4> b;
  friend bool operator==(const Argmin&, const Argmin&) = default;
  friend auto operator<=>(const Argmin&, const Argmin&) = default;
};

/// Lexicographically smallest form over the 24 relabelings of the lines,
/// rows sorted ascending (each row keeps its coefficient).
Argmin canonical_form(const IntMatrix4& m, const std::array<Rational, 4>& b);

struct SearchOptions {
  int cap = 12;
  unsigned jobs = 1;
  /// Evaluate only one configuration per orbit of the pattern's symmetry
  /// group. Must not change the minimum.
  bool symmetry_reduce = false;
};

struct SearchResult {
  CasePattern pattern;
  int cap = 0;
  std::optional<Rational> minimum;
  std::vector<Argmin> argmins;   // canonical forms, sorted, distinct
  std::uint64_t examined = 0;    // candidates generated
};

/// Exact minimum of the volume over all valid, lc, ample configurations of
/// the pattern with every weight entry <= cap.
SearchResult enumerate_min(const CasePattern& p, const SearchOptions& opt);

/// All coprime pairs (a, b) with 1 <= a, b <= cap, sorted by fraction b/a.
std::vector<WeightPair> coprime_pairs(int cap);

struct Placement {
  std::array<Slot, 4> slots;
  std::optional<int> s0_case;    // matching S0 pattern, if any
  bool covers_all_lines = false;
  bool admits_lc_ample = false;  // some lc + ample instance within the cap
  bool only_zero = false;        // every lc instance has det W^ = 0
};

/// The edge-only survivor placements with at most two survivors per edge, up
/// to relabeling, with what a bounded sweep finds in each.
std::vector<Placement> derive_placements(int cap);

/// Volume of the configuration with survivor `row` replaced by the line
/// `line` (default: the line carrying the larger weight) with coefficient 1.
/// This is the limit of the volumes as that weight grows.
Rational limit_volume(const SurfaceConfig& cfg, std::size_t row, std::optional<int> line = std::nullopt);
SurfaceConfig limit_config(const SurfaceConfig& cfg, std::size_t row, std::optional<int> line = std::nullopt);

struct LimitPoint {
  Rational value;
  CasePattern pattern;
  IntMatrix4 family;      // with the growing entry set to 0
  std::size_t row = 0;
  int line = 0;
};

/// Smallest limit of volumes over families of lc, ample S0 surfaces with
/// three fixed survivors of weight <= cap and one survivor (n, k), k <= cap,
/// n -> infinity.
LimitPoint min_limit_point(int cap);

/// The four-parameter series, 1-based, as weight matrices in x1..x4.
IntMatrix4 series_matrix(int series, const std::array<std::int64_t, 4>& x);
/// Position (row, column) of x_k (1-based) in the series matrix.
std::pair<std::size_t, int> series_parameter(int series, int k);

/// Iterated limit: sends the parameters in `order` to infinity one after the
/// other; the remaining parameters take their values from `x`.
Rational acc_demo(int series, const std::vector<int>& order, const std::array<std::int64_t, 4>& x);

struct SeriesCount {
  int case_index = 0;
  std::size_t found = 0;
  std::size_t expected = 0;
  std::array<std::size_t, 5> by_parameters{};  // number of series with p parameters
};

/// Series of lc surfaces in the six S0 cases, read off from the lc and ample
/// configurations with weights in 1..7. The larger weight of a survivor is a
/// parameter when every larger value up to 7 keeps the configuration lc.
/// Counted up to relabeling of the lines.
std::vector<SeriesCount> series_scan();

}  // namespace fourlines
