#pragma once

// Picard-rank-one surfaces from four general lines L1..L4 in the plane:
// blow up nodes of the line configuration (Y -> P^2), keep four visible curves
// ("survivors") and contract the rest (Y -> X). Lines are indexed 0..3 in code
// and printed 1..4.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourlines/farey.hpp"
#include "fourlines/markedgraph.hpp"
#include "fourlines/rational.hpp"

namespace fourlines {

using IntRow = std::array<std::int64_t, 4>;
using IntMatrix4 = std::array<IntRow, 4>;

/// Either a line L_i itself (a corner of the K4 graph) or an exceptional curve
/// over L_i ∩ L_j with weight pair (w_i, w_j), i < j.
struct Survivor {
  int i = 0;
  int j = -1;
  WeightPair w{1, 1};

  static Survivor corner(int line);
  /// Normalises to i < j, swapping the pair if needed.
  static Survivor on_edge(int i, int j, WeightPair w);
  /// Reads a weight-matrix row: a standard basis vector or a row with two
  /// coprime positive entries. Throws std::invalid_argument.
  static Survivor from_row(const IntRow& row);

  bool is_corner() const { return j < 0; }
  IntRow weight_vector() const;
  std::string str() const;

  friend bool operator==(const Survivor&, const Survivor&) = default;
};

struct SurfaceConfig {
  std::array<Survivor, 4> survivors;
  std::array<Rational, 4> coefficients;  // b_k in [0, 1]

  /// Throws std::invalid_argument on duplicate survivors or b outside [0, 1].
  static SurfaceConfig make(std::array<Survivor, 4> survivors, std::array<Rational, 4> b);
  static SurfaceConfig from_matrix(const IntMatrix4& rows, std::array<Rational, 4> b);
  static SurfaceConfig from_matrix(const IntMatrix4& rows);  // b = 0

  bool corner_survives(int line) const;
  /// Indices of the survivors on edge {i, j}, in increasing fraction order.
  std::vector<std::size_t> edge_survivors(int i, int j) const;
  IntMatrix4 matrix() const;
  /// Log discrepancies c_k = 1 - b_k.
  std::array<Rational, 4> log_discrepancies() const;
};

struct WeightMatrix {
  IntMatrix4 rows;
  /// Sign of det(rows) as given. The normalisation multiplies det W,
  /// the cofactors and det W^ by this sign; it is the same as permuting two
  /// rows but keeps rows aligned with the survivors.
  int sign = 0;
  Rational det_raw;
  /// (-1)^i det W_i of the reduced matrix (columns f^*(L_i - L_4)), unnormalised.
  std::array<Rational, 4> cofactors_raw;
};

/// Throws InvalidConfiguration when det W = 0.
WeightMatrix weight_matrix(const SurfaceConfig& cfg);
/// det of the 5x5 extended matrix, i.e. det(W - c 1^T), unnormalised.
Rational det_w_hat_raw(const SurfaceConfig& cfg);

struct YGraph {
  MarkedGraph graph;  // every visible curve on the minimal Y
  std::array<VertexId, 4> survivor_vertex{};
  std::vector<IntRow> weights;  // weight vector of every vertex
  std::size_t blowups = 0;
};

YGraph build_Y_graph(const SurfaceConfig& cfg);

/// Connected components of the contracted curves (Y graph minus survivors).
std::vector<MarkedGraph> singularity_graph(const SurfaceConfig& cfg);

/// det of the contracted configuration from the Y graph. Throws
/// NotPositiveDefinite if some component is not contractible.
Rational delta(const SurfaceConfig& cfg);
/// Same value via the hairy-core closed form and the edge determinant.
Rational delta_fast(const SurfaceConfig& cfg);
/// Same value via the 12-vertex graph; only for four edge survivors.
Rational delta_twelve(const SurfaceConfig& cfg);

enum class AmpleSign { ample, numerically_zero, antiample };
const char* to_string(AmpleSign s);

enum class Context { general, S0, S1 };
const char* to_string(Context c);
Context parse_context(const std::string& text);

struct Diagnostic {
  std::string code;
  std::string message;
};

struct SingularityComponent {
  std::vector<std::string> labels;
  std::vector<Rational> marks;
  Rational det;
  bool positive_definite = false;
};

struct InvariantReport {
  IntMatrix4 matrix{};
  std::array<Rational, 4> coefficients;
  std::optional<Rational> det_w;
  std::optional<std::array<Rational, 4>> cofactors;
  std::optional<Rational> det_w_hat;
  std::optional<Rational> delta;
  std::vector<SingularityComponent> delta_components;
  std::optional<Rational> volume;
  std::optional<AmpleSign> ample_sign;
  std::optional<LcClass> lc_class;
  std::vector<std::pair<std::string, Rational>> codiscrepancies;
  std::optional<std::array<Rational, 4>> survivor_degrees;
  std::optional<Rational> h_square;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

/// Computes everything that is computable and records problems as
/// diagnostics instead of throwing.
InvariantReport evaluate(const SurfaceConfig& cfg, Context ctx = Context::general);
/// Strict version: throws InvalidConfiguration or NotPositiveDefinite.
InvariantReport invariants(const SurfaceConfig& cfg);

std::vector<Diagnostic> validate(const SurfaceConfig& cfg, Context ctx);

struct OracleResult {
  Rational volume;                     // D^2 for D = g^*(K_X + B)
  std::array<Rational, 4> degrees;     // D . (strict transform of each survivor)
};

/// Intersection theory on Y: D = K_Y + sum b_i E_i + sum beta_s F_s with beta
/// from the codiscrepancy solve. Throws NotPositiveDefinite.
OracleResult volume_oracle(const SurfaceConfig& cfg);
/// (g_* f^* L_line)^2 computed on Y by projecting f^*L away from the
/// contracted curves.
Rational pullback_square_oracle(const SurfaceConfig& cfg, int line);

}  // namespace fourlines
