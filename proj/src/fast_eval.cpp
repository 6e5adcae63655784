#include "fourlines/fast_eval.hpp"

#include <stdexcept>
#include <utility>

namespace fourlines::fast {

namespace {

using Mat = std::array<std::array<i128, 4>, 4>;

i128 det3(i128 a, i128 b, i128 c, i128 d, i128 e, i128 f, i128 g, i128 h, i128 i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

i128 det4(const Mat& m) {
  i128 out = 0;
  for (int k = 0; k < 4; ++k) {
    int c[3], n = 0;
    for (int x = 0; x < 4; ++x)
      if (x != k) c[n++] = x;
    const i128 minor = det3(m[1][c[0]], m[1][c[1]], m[1][c[2]], m[2][c[0]], m[2][c[1]], m[2][c[2]],
                            m[3][c[0]], m[3][c[1]], m[3][c[2]]);
    out += (k % 2 == 0 ? m[0][k] : -m[0][k]) * minor;
  }
  return out;
}

// Fraction-free elimination with row pivoting on the leading n x n block.
i128 det_n(Mat m, int n) {
  if (n == 0) return 1;
  int sign = 1;
  i128 prev = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Same elimination without pivoting: the k-th pivot is the k-th leading
// principal minor. Returns false as soon as one is not positive.
bool leading_minors_positive(Mat m, int n, i128& det) {
  i128 prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  det = prev;
  return true;
}

struct Core {
  int n = 0;
  Mat s{};                       // scaled core matrix
  std::array<i128, 4> rhs{};     // scaled right-hand side of the lc system
  i128 edge_factor = 1;
};

bool less_fraction(const WeightPair& a, const WeightPair& b) {
  return static_cast<i128>(a.wj) * b.wi < static_cast<i128>(b.wj) * a.wi;
}

Core build_core(const Candidate& cand) {
  Core core;
  std::array<int, 4> at{-1, -1, -1, -1};
  std::array<bool, 4> corner{};
  std::array<i128, 4> corner_c{};
  for (int k = 0; k < 4; ++k) {
    if (cand.s[k].is_corner()) {
      corner[cand.s[k].i] = true;
      corner_c[cand.s[k].i] = cand.c[k];
    }
  }
  for (int v = 0; v < 4; ++v)
    if (!corner[v]) at[v] = core.n++;

  std::array<i128, 4> mu{}, den{}, rho{}, corner_sum{};
  for (int v = 0; v < core.n; ++v) {
    mu[v] = -1;
    den[v] = 1;
    rho[v] = -1;
  }
  bool adj[4][4] = {};
  auto add_hair = [&](int v, i128 p, i128 q, i128 c) {
    mu[v] = mu[v] * q + p * den[v];
    rho[v] = rho[v] * q + c * den[v];
    den[v] *= q;
  };

  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      int idx[4], m = 0;
      for (int k = 0; k < 4; ++k) {
        const auto& s = cand.s[k];
        if (!s.is_corner() && s.i == i && s.j == j) {
          int pos = m++;
          while (pos > 0 && less_fraction(s.w, cand.s[idx[pos - 1]].w)) {
            idx[pos] = idx[pos - 1];
            --pos;
          }
          idx[pos] = k;
        }
      }
      if (m == 0) {
        if (at[i] >= 0 && at[j] >= 0) {
          adj[at[i]][at[j]] = adj[at[j]][at[i]] = true;
        } else if (at[i] >= 0) {
          corner_sum[at[i]] += corner_c[j];
        } else if (at[j] >= 0) {
          corner_sum[at[j]] += corner_c[i];
        }
        continue;
      }
      const auto& first = cand.s[idx[0]];
      const auto& last = cand.s[idx[m - 1]];
      if (at[i] >= 0) add_hair(at[i], first.w.wi, first.w.wj, cand.c[idx[0]]);
      else core.edge_factor *= first.w.wj;
      if (at[j] >= 0) add_hair(at[j], last.w.wj, last.w.wi, cand.c[idx[m - 1]]);
      else core.edge_factor *= last.w.wi;
      for (int t = 1; t < m; ++t) {
        const auto& a = cand.s[idx[t - 1]].w;
        const auto& b = cand.s[idx[t]].w;
        core.edge_factor *= static_cast<i128>(a.wi) * b.wj - static_cast<i128>(a.wj) * b.wi;
      }
    }
  }
  for (int v = 0; v < core.n; ++v) {
    for (int u = 0; u < core.n; ++u) core.s[v][u] = (u == v) ? mu[v] : (adj[v][u] ? -den[v] : 0);
    core.rhs[v] = rho[v] + corner_sum[v] * den[v];
  }
  return core;
}

bool cofactors_coherent(const Candidate& c, int sign) {
  std::array<std::array<i128, 3>, 4> bar;
  for (int r = 0; r < 4; ++r) {
    const auto w = c.s[r].weight_vector();
    for (int k = 0; k < 3; ++k) bar[r][k] = w[k] - w[3];
  }
  for (int drop = 0; drop < 4; ++drop) {
    int rows[3], n = 0;
    for (int r = 0; r < 4; ++r)
      if (r != drop) rows[n++] = r;
    const auto& a = bar[rows[0]];
    const auto& b = bar[rows[1]];
    const auto& d = bar[rows[2]];
    i128 minor = det3(a[0], a[1], a[2], b[0], b[1], b[2], d[0], d[1], d[2]);
    if (drop % 2 == 0) minor = -minor;
    if (minor * sign <= 0) return false;
  }
  return true;
}

bool core_lc(const Core& core) {
  for (int v = 0; v < core.n; ++v) {
    Mat m = core.s;
    for (int r = 0; r < core.n; ++r) m[r][v] = core.rhs[r];
    if (det_n(m, core.n) < 0) return false;
  }
  return true;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::det_w_zero: return "det-w-zero";
    case Status::not_ample: return "not-ample";
    case Status::not_definite: return "not-definite";
    case Status::pruned: return "pruned";
    case Status::incoherent: return "incoherent";
    case Status::not_lc: return "not-lc";
    case Status::accepted: return "accepted";
  }
  return "?";
}

Candidate from_config(const SurfaceConfig& cfg) {
  Candidate c;
  c.s = cfg.survivors;
  const auto ld = cfg.log_discrepancies();
  for (int k = 0; k < 4; ++k) {
    if (!ld[k].is_integer()) throw std::invalid_argument("fast path needs integer log discrepancies");
    c.c[k] = ld[k].numerator().get_si();
  }
  return c;
}

i128 det_w(const Candidate& c) {
  Mat m{};
  for (int r = 0; r < 4; ++r) {
    const auto w = c.s[r].weight_vector();
    for (int k = 0; k < 4; ++k) m[r][k] = w[k];
  }
  return det4(m);
}

i128 det_w_hat(const Candidate& c) {
  Mat m{};
  for (int r = 0; r < 4; ++r) {
    const auto w = c.s[r].weight_vector();
    for (int k = 0; k < 4; ++k) m[r][k] = w[k] - c.c[r];
  }
  return det4(m);
}

Status evaluate(const Candidate& c, i128 dw, i128 dwh, const Bound& bound, Volume& out) {
  if (dw == 0) return Status::det_w_zero;
  const int sign = dw > 0 ? 1 : -1;
  if (dwh * sign <= 0) return Status::not_ample;
  const Core core = build_core(c);
  i128 det = 1;
  if (!leading_minors_positive(core.s, core.n, det)) return Status::not_definite;
  out.num = dwh * dwh;
  out.den = det * core.edge_factor;
  if (!bound.admits(out)) return Status::pruned;
  if (!cofactors_coherent(c, sign)) return Status::incoherent;
  if (!core_lc(core)) return Status::not_lc;
  return Status::accepted;
}

Status evaluate(const Candidate& c, const Bound& bound, Volume& out) {
  return evaluate(c, det_w(c), det_w_hat(c), bound, out);
}

std::optional<i128> delta(const Candidate& c) {
  const Core core = build_core(c);
  i128 det = 1;
  if (!leading_minors_positive(core.s, core.n, det)) return std::nullopt;
  return det * core.edge_factor;
}

std::optional<Volume> signed_volume(const Candidate& c) {
  const i128 dw = det_w(c);
  if (dw == 0) return std::nullopt;
  const auto d = delta(c);
  if (!d) return std::nullopt;
  const i128 dwh = det_w_hat(c);
  Volume v{dwh * dwh, *d};
  if (dwh * (dw > 0 ? 1 : -1) < 0) v.num = -v.num;
  return v;
}

std::optional<bool> is_lc(const Candidate& c) {
  const Core core = build_core(c);
  i128 det = 1;
  if (!leading_minors_positive(core.s, core.n, det)) return std::nullopt;
  return core_lc(core);
}

Rational to_rational(const Volume& v) {
  auto big = [](i128 x) {
    const bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    Integer out(0);
    Integer base(1);
    while (u) {
      out += base * Integer(static_cast<unsigned long>(u % 1000000000u));
      base *= 1000000000u;
      u /= 1000000000u;
    }
    return neg ? Integer(-out) : out;
  };
  return Rational(big(v.num), big(v.den));
}

}  // namespace fourlines::fast
