#pragma once

// Independent oracles, generators and property suites shared by the unit
// tests and the acceptance binary. Nothing here calls the library routine it
// is checking.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fourlines/errors.hpp"
#include "fourlines/farey.hpp"
#include "fourlines/hjchains.hpp"
#include "fourlines/markedgraph.hpp"
#include "fourlines/surface.hpp"

namespace fourlines::testing {

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first_failure = what();
  }
  void merge(const Tally& o) {
    if (failures == 0 && o.failures) first_failure = o.first_failure;
    checked += o.checked;
    failures += o.failures;
  }
  bool ok() const { return failures == 0 && checked > 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checked << " checks, " << failures << " failures";
    if (failures) os << " (first: " << first_failure << ")";
    return os.str();
  }
};

// Dense determinant by fraction-free elimination over integers after
// clearing the denominators of each row.
inline Rational oracle_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rational(1);
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (const auto& x : a[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    scale *= l;
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a[r][c].numerator() * (l / a[r][c].denominator());
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  return Rational(mpz_class(sign * m[n - 1][n - 1]), scale);
}

inline std::vector<std::vector<Rational>> dense(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline Rational oracle_graph_det(const MarkedGraph& g) { return oracle_det(dense(g.form())); }

inline std::vector<std::vector<Rational>> chain_matrix(const Chain& c, bool cyclic) {
  const std::size_t n = c.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = c[i];
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = Rational(-1);
  }
  if (cyclic && n >= 3) m[0][n - 1] = m[n - 1][0] = Rational(-1);
  return m;
}

// Every leading minor positive, by the oracle determinant.
inline bool oracle_positive_definite(const MarkedGraph& g) {
  const auto full = dense(g.form());
  for (std::size_t k = 1; k <= full.size(); ++k) {
    std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub[r][c] = full[r][c];
    if (oracle_det(sub).sign() <= 0) return false;
  }
  return true;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  WeightPair coprime_pair(std::int64_t cap) {
    for (;;) {
      const auto a = uniform(1, cap), b = uniform(1, cap);
      if (std::gcd(a, b) == 1) return {a, b};
    }
  }
  Rational positive_fraction(std::int64_t cap) {
    const auto p = coprime_pair(cap);
    return Rational(p.wi, p.wj);
  }
  template <typename T>
  void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), gen_); }

 private:
  std::mt19937_64 gen_;
};

inline Survivor random_survivor(Rng& rng, std::int64_t cap, int corner_weight) {
  if (rng.uniform(0, 9) < corner_weight) return Survivor::corner(static_cast<int>(rng.uniform(0, 3)));
  int i = static_cast<int>(rng.uniform(0, 3)), j = i;
  while (j == i) j = static_cast<int>(rng.uniform(0, 3));
  return Survivor::on_edge(i, j, rng.coprime_pair(cap));
}

// A random configuration with distinct survivors and b drawn from `bs`;
// contractibility is not checked.
inline SurfaceConfig random_config(Rng& rng, std::int64_t cap, const std::vector<Rational>& bs,
                                   int corner_weight = 2) {
  for (;;) {
    std::array<Survivor, 4> s;
    std::array<Rational, 4> b;
    for (int k = 0; k < 4; ++k) {
      s[k] = random_survivor(rng, cap, corner_weight);
      b[k] = bs[rng.uniform(0, static_cast<std::int64_t>(bs.size()) - 1)];
    }
    try {
      return SurfaceConfig::make(s, b);
    } catch (const std::invalid_argument&) {
    }
  }
}

inline std::string show(const SurfaceConfig& cfg) {
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (k) out += " ";
    out += cfg.survivors[k].str() + "@" + cfg.coefficients[k].str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Determinant calculus

inline Tally chain_suite(std::uint64_t seed) {
  Tally t;
  Rng rng(seed);
  // Expansion round trip on every reduced fraction with small terms.
  for (std::int64_t p = 1; p <= 60; ++p) {
    for (std::int64_t q = 1; q <= 60; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Rational x(p, q);
      const Chain c = fraction_to_chain(x);
      t.check(chain_to_fraction(c) == x && chain_det(c) == Rational(p),
              [&] { return "round trip " + x.str(); });
    }
  }
  // Rational chains against the dense form, in both directions.
  for (int iter = 0; iter < 400; ++iter) {
    Chain c;
    const auto n = rng.uniform(1, 12);
    for (int k = 0; k < n; ++k) c.push_back(Rational(rng.uniform(-3, 6), rng.uniform(1, 4)));
    Chain rev(c.rbegin(), c.rend());
    const Rational d = chain_det(c);
    t.check(d == chain_det(rev) && d == oracle_det(chain_matrix(c, false)),
            [&] { return "chain det of length " + std::to_string(n); });
  }
  // Splitting at every interior index, exhaustively on marks 1..4, length <= 6.
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> digits(n, 1);
    for (;;) {
      Chain c;
      for (int d : digits) c.push_back(Rational(d));
      auto det = [&](int from, int to) {  // [from, to)
        if (from >= to) return Rational(1);
        return chain_det(std::span<const Rational>(c).subspan(from, to - from));
      };
      for (int i = 1; i < n; ++i) {
        const Rational lhs = det(0, n);
        const Rational rhs = det(0, i) * det(i, n) - det(0, i - 1) * det(i + 1, n);
        t.check(lhs == rhs, [&] { return "split identity at " + std::to_string(i); });
      }
      int k = 0;
      while (k < n && digits[k] == 4) digits[k++] = 1;
      if (k == n) break;
      ++digits[k];
    }
  }
  // Cycles against the dense cyclic form and against the graph.
  for (int iter = 0; iter < 300; ++iter) {
    Chain c;
    const auto n = rng.uniform(3, 10);
    for (int k = 0; k < n; ++k) c.push_back(Rational(rng.uniform(-2, 7)));
    const Rational d = cycle_det(c);
    t.check(d == oracle_det(chain_matrix(c, true)) && d == graph_det(cycle_graph(c)),
            [&] { return "cycle det of length " + std::to_string(n); });
  }
  return t;
}

inline MarkedGraph random_graph(Rng& rng, int n, int edges) {
  MarkedGraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(Rational(rng.uniform(-1, 5)));
  for (int e = 0; e < edges && n > 1; ++e) {
    const auto u = rng.uniform(0, n - 1);
    auto v = rng.uniform(0, n - 1);
    if (u == v) continue;
    g.add_edge(u, v);
  }
  return g;
}

inline MarkedGraph random_tree(Rng& rng, int n) {
  MarkedGraph g;
  for (int v = 0; v < n; ++v) {
    g.add_vertex(Rational(rng.uniform(1, 5)));
    if (v) g.add_edge(static_cast<VertexId>(rng.uniform(0, v - 1)), v);
  }
  return g;
}

inline Tally graph_suite(std::uint64_t seed) {
  Tally t;
  Rng rng(seed);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = static_cast<int>(rng.uniform(1, 12));
    const MarkedGraph g = random_graph(rng, n, static_cast<int>(rng.uniform(0, n + 2)));
    const Rational d = graph_det(g);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    Rational product(1);
    for (const auto& comp : g.components()) product *= graph_det(g.induced(comp));
    t.check(d == oracle_graph_det(g) && d == graph_det(g.induced(perm)) && d == product,
            [&] { return "graph det on\n" + g.dump(); });
    t.check(is_positive_definite(g) == oracle_positive_definite(g), [&] { return "definiteness on\n" + g.dump(); });
  }
  // Split expansion on trees cut into two arbitrary vertex sets.
  for (int iter = 0; iter < 200; ++iter) {
    const int n = static_cast<int>(rng.uniform(2, 10));
    const MarkedGraph g = random_tree(rng, n);
    std::vector<VertexId> a, b;
    for (int v = 0; v < n; ++v) (rng.coin() ? a : b).push_back(v);
    t.check(split_det(g, a, b) == graph_det(g), [&] { return "split det on\n" + g.dump(); });
  }
  return t;
}

inline Tally hairy_suite(std::uint64_t seed, int instances) {
  Tally t;
  Rng rng(seed);
  for (int iter = 0; iter < instances; ++iter) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    MarkedGraph core = random_graph(rng, n, static_cast<int>(rng.uniform(0, 5)));
    std::vector<Hair> hairs;
    for (int v = 0; v < n; ++v) {
      const auto count = rng.uniform(0, 3);
      for (int h = 0; h < count; ++h) hairs.push_back({static_cast<VertexId>(v), rng.positive_fraction(30)});
    }
    const Rational direct = oracle_graph_det(graft(core, hairs));
    const Rational a = hairy_det_core(core, hairs);
    const Rational b = hairy_det_tilde(core, hairs);
    t.check(a == direct && b == direct, [&] {
      return "hairy det " + a.str() + " / " + b.str() + " vs " + direct.str();
    });
  }
  return t;
}

// ---------------------------------------------------------------------------
// Farey encoding

inline std::vector<Rational> chain_marks(const EdgeChain& e, std::size_t from, std::size_t to) {
  std::vector<Rational> out;
  for (std::size_t k = from; k < to; ++k) out.push_back(e.chain.mark(e.order[k]));
  return out;
}

inline Tally farey_suite(std::uint64_t seed, int instances) {
  Tally t;
  Rng rng(seed);
  for (int len = 0; len <= 12; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string w;
      for (int k = 0; k < len; ++k) w += (bits >> k & 1) ? 'R' : 'L';
      t.check(weight_to_lr(lr_to_weight(w)) == w, [&] { return "word " + w; });
    }
  }
  for (std::int64_t a = 1; a <= 50; ++a) {
    for (std::int64_t b = 1; b <= 50; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const WeightPair p{a, b};
      t.check(lr_to_weight(weight_to_lr(p)) == p, [&] { return "pair " + p.str(); });
    }
  }
  for (int iter = 0; iter < instances; ++iter) {
    const WeightPair p = rng.coprime_pair(40);
    const EdgeChain e = build_edge_chain({p}, Rational(0), Rational(0));
    const auto it = std::find(e.order.begin(), e.order.end(), e.survivors.at(0));
    const std::size_t s = static_cast<std::size_t>(it - e.order.begin());
    const std::size_t n = e.order.size();
    const Rational left = chain_det(chain_marks(e, 0, s));
    const Rational left_inner = chain_det(chain_marks(e, 1, s));
    const Rational right = chain_det(chain_marks(e, s + 1, n));
    const Rational right_inner = chain_det(chain_marks(e, s + 1, n - 1));
    t.check(left == Rational(p.wi) && left_inner == Rational(p.wj) && right == Rational(p.wj) &&
                right_inner == Rational(p.wi) && e.chain.mark(e.order[s]) == Rational(1),
            [&] { return "side chains of " + p.str(); });
  }
  for (int iter = 0; iter < instances; ++iter) {
    WeightPair p = rng.coprime_pair(40), q = rng.coprime_pair(40);
    if (p == q) continue;
    if (fraction_less(q, p)) std::swap(p, q);
    const EdgeChain e = build_edge_chain({p, q}, Rational(0), Rational(0));
    const auto a = std::find(e.order.begin(), e.order.end(), e.survivors[0]) - e.order.begin();
    const auto b = std::find(e.order.begin(), e.order.end(), e.survivors[1]) - e.order.begin();
    const Rational between = oracle_det(chain_matrix(chain_marks(e, a + 1, b), false));
    t.check(edge_pair_det(p, q) == between, [&] { return "between " + p.str() + " and " + q.str(); });
  }
  // With the Stern-Brocot leaves as survivors nothing contracted is a (-1)-curve.
  for (int iter = 0; iter < instances; ++iter) {
    std::vector<WeightPair> picks;
    for (int k = rng.uniform(1, 3); k > 0; --k) picks.push_back(rng.coprime_pair(30));
    std::vector<WeightPair> nodes;
    for (const auto& p : picks)
      for (const auto& x : sb_path_nodes(p)) nodes.push_back(x);
    std::vector<WeightPair> leaves;
    for (const auto& p : picks) {
      bool ancestor = false;
      for (const auto& q : picks) {
        if (q == p) continue;
        const auto path = sb_path_nodes(q);
        ancestor = ancestor || std::find(path.begin(), path.end(), p) != path.end();
      }
      if (!ancestor && std::find(leaves.begin(), leaves.end(), p) == leaves.end()) leaves.push_back(p);
    }
    const EdgeChain e = build_edge_chain(leaves, Rational(0), Rational(0));
    bool ok = true;
    for (std::size_t k = 1; k + 1 < e.order.size(); ++k) {
      const VertexId v = e.order[k];
      const bool survivor = std::find(e.survivors.begin(), e.survivors.end(), v) != e.survivors.end();
      ok = ok && (survivor ? e.chain.mark(v) == Rational(1) : e.chain.mark(v) >= Rational(2));
    }
    t.check(ok, [&] { return "minimal chain for " + std::to_string(leaves.size()) + " leaves"; });
  }
  return t;
}

// ---------------------------------------------------------------------------
// Whole surfaces

// Random configurations with weights <= 9 and b in {0, 1/2, 1} that admit the
// contraction; compares the closed forms with the intersection-theory oracle.
inline Tally oracle_suite(std::uint64_t seed, int wanted) {
  Tally t;
  Rng rng(seed);
  const std::vector<Rational> bs{Rational(0), Rational(1, 2), Rational(1)};
  int valid = 0;
  while (valid < wanted) {
    const SurfaceConfig cfg = random_config(rng, 9, bs);
    const InvariantReport r = evaluate(cfg);
    if (!r.volume) continue;
    ++valid;
    const OracleResult o = volume_oracle(cfg);
    t.check(o.volume == *r.volume, [&] { return "volume of " + show(cfg); });
    t.check(delta(cfg) == delta_fast(cfg), [&] { return "delta of " + show(cfg); });
    // Every survivor degree has the sign of det W^.
    const int s = r.det_w_hat->sign();
    bool coherent = true;
    for (const auto& d : o.degrees) coherent = coherent && d.sign() == s;
    t.check(coherent, [&] { return "survivor degrees of " + show(cfg); });
    for (int line = 0; line < 4; ++line) {
      t.check(pullback_square_oracle(cfg, line) == *r.det_w * *r.det_w / *r.delta,
              [&] { return "pullback square of " + show(cfg); });
    }
    bool sign_diag = false;
    for (const auto& d : r.diagnostics) sign_diag = sign_diag || d.code == "cofactor-sign";
    t.check(!sign_diag, [&] { return "cofactor signs of " + show(cfg); });
  }
  return t;
}

// Adds a letter to the LR word of one survivor of a random lc and ample S0
// configuration; when the result is still lc and ample the volume must grow.
inline Tally monotonicity_suite(std::uint64_t seed, int wanted) {
  Tally t;
  Rng rng(seed);
  const std::vector<Rational> zero{Rational(0)};
  int done = 0, attempts = 0;
  while (done < wanted && attempts < 2000000) {
    ++attempts;
    const SurfaceConfig cfg = random_config(rng, 7, zero, 0);
    const InvariantReport r = evaluate(cfg, Context::S0);
    if (!r.ok() || !r.volume || *r.ample_sign != AmpleSign::ample || *r.lc_class == LcClass::not_lc) continue;
    const int k = static_cast<int>(rng.uniform(0, 3));
    std::array<Survivor, 4> s = cfg.survivors;
    const std::string word = weight_to_lr(s[k].w) + (rng.coin() ? "L" : "R");
    s[k].w = lr_to_weight(word);
    SurfaceConfig next;
    try {
      next = SurfaceConfig::make(s, cfg.coefficients);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const InvariantReport q = evaluate(next);
    if (!q.volume || *q.ample_sign != AmpleSign::ample || *q.lc_class == LcClass::not_lc) continue;
    ++done;
    t.check(*q.volume > *r.volume, [&] { return "volume drops from " + show(cfg) + " to " + show(next); });
  }
  if (done < wanted) t.check(false, [&] { return "only " + std::to_string(done) + " prolongations found"; });
  return t;
}

}  // namespace fourlines::testing
