#pragma once

// Integer-only evaluation of a configuration for the search loops. Agrees
// with evaluate() on det W, det W^, Delta, the volume and the lc decision
// whenever the log discrepancies c_k = 1 - b_k are integers.
//
// Delta comes from the core (the lines that are not survivors) with marks
// mu_v = -1 + sum p/q over its hairs; row v is scaled by Q_v = prod q so the
// core matrix is integral and its determinant is det of the hairy graph.
// Log discrepancies a = 1 - beta satisfy, after eliminating the legs,
//   mu_v a_v - sum_{core nbrs} a_u = -1 + sum_hairs c_s / q + sum_{corner nbrs} c_u
// and the legs and edge chains interpolate between nonnegative boundary
// values, so the pair is lc iff every core a_v >= 0.

#include <array>
#include <cstdint>
#include <optional>

#include "fourlines/surface.hpp"

namespace fourlines::fast {

using i128 = __int128;

struct Candidate {
  std::array<Survivor, 4> s;
  std::array<std::int64_t, 4> c{1, 1, 1, 1};  // log discrepancies
};

Candidate from_config(const SurfaceConfig& cfg);  // throws unless every c_k is an integer

/// Unreduced volume num / den with den = Delta > 0.
struct Volume {
  i128 num = 0;
  i128 den = 1;
};

/// Upper bound for pruning; ties are admitted.
struct Bound {
  bool set = false;
  i128 num = 0;
  i128 den = 1;
  bool admits(const Volume& v) const { return !set || v.num * den <= num * v.den; }
  bool less(const Volume& v) const { return !set || v.num * den < num * v.den; }
  void tighten(const Volume& v) {
    set = true;
    num = v.num;
    den = v.den;
  }
};

enum class Status { det_w_zero, not_ample, not_definite, pruned, incoherent, not_lc, accepted };
const char* to_string(Status s);

i128 det_w(const Candidate& c);
i128 det_w_hat(const Candidate& c);

/// Full pipeline: det W != 0, ample, definite, within bound, coherent
/// cofactors, lc. `dw` and `dwh` are the raw determinants.
Status evaluate(const Candidate& c, i128 dw, i128 dwh, const Bound& bound, Volume& out);
Status evaluate(const Candidate& c, const Bound& bound, Volume& out);

/// Delta of a candidate, or nullopt if the contracted part is not definite.
std::optional<i128> delta(const Candidate& c);
/// (det W^)^2 / Delta with the sign of det W^ * det W, or nullopt when
/// det W = 0 or the contracted part is not definite.
std::optional<Volume> signed_volume(const Candidate& c);
/// lc check on its own; nullopt when not definite.
std::optional<bool> is_lc(const Candidate& c);

Rational to_rational(const Volume& v);

}  // namespace fourlines::fast
