#include "fourlines/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "fourlines/errors.hpp"

namespace fourlines {

using fast::Bound;
using fast::Candidate;
using fast::i128;
using fast::Status;
using fast::Volume;

// ----------------------------------------------------------------- patterns

namespace {

bool slot_less(const Slot& a, const Slot& b) {
  if (a.is_corner() != b.is_corner()) return a.is_corner();
  return std::pair(a.i, a.j) < std::pair(b.i, b.j);
}

Slot edge(int i, int j) { return Slot{i - 1, j - 1}; }
Slot corner(int i) { return Slot{i - 1, -1}; }

CasePattern make_pattern(Context set, int index, std::array<Slot, 4> slots) {
  std::sort(slots.begin(), slots.end(), slot_less);
  return CasePattern{index, set, slots};
}

}  // namespace

std::array<Rational, 4> CasePattern::coefficients() const {
  std::array<Rational, 4> b;
  for (std::size_t k = 0; k < 4; ++k) b[k] = (set == Context::S1 && slots[k].is_corner()) ? 1 : 0;
  return b;
}

std::string CasePattern::describe() const {
  std::string corners, edges;
  for (const auto& s : slots) {
    if (s.is_corner()) {
      corners += (corners.empty() ? "L" : ",L") + std::to_string(s.i + 1);
    } else {
      edges += (edges.empty() ? "" : ",") + std::to_string(s.i + 1) + std::to_string(s.j + 1);
    }
  }
  if (corners.empty()) return edges;
  if (edges.empty()) return corners;
  return corners + " + " + edges;
}

std::vector<CasePattern> patterns_S0() {
  const auto S = Context::S0;
  return {
      make_pattern(S, 1, {edge(1, 2), edge(1, 2), edge(3, 4), edge(3, 4)}),
      make_pattern(S, 2, {edge(1, 2), edge(1, 2), edge(1, 3), edge(1, 4)}),
      make_pattern(S, 3, {edge(1, 2), edge(1, 2), edge(1, 4), edge(2, 3)}),
      make_pattern(S, 4, {edge(1, 2), edge(1, 4), edge(2, 3), edge(2, 3)}),
      make_pattern(S, 5, {edge(1, 2), edge(1, 3), edge(1, 4), edge(2, 3)}),
      make_pattern(S, 6, {edge(1, 2), edge(2, 3), edge(3, 4), edge(1, 4)}),
  };
}

std::vector<CasePattern> patterns_S1() {
  const auto S = Context::S1;
  return {
      make_pattern(S, 1, {corner(1), edge(1, 2), edge(1, 3), edge(1, 4)}),
      make_pattern(S, 2, {corner(1), edge(1, 2), edge(1, 4), edge(2, 3)}),
      make_pattern(S, 3, {corner(1), edge(1, 4), edge(2, 3), edge(2, 3)}),
      make_pattern(S, 4, {corner(1), edge(1, 2), edge(2, 3), edge(3, 4)}),
      make_pattern(S, 5, {corner(1), edge(1, 3), edge(2, 3), edge(3, 4)}),
      make_pattern(S, 6, {corner(1), edge(2, 3), edge(2, 3), edge(3, 4)}),
      make_pattern(S, 7, {corner(1), edge(2, 3), edge(2, 4), edge(3, 4)}),
      make_pattern(S, 8, {corner(1), corner(2), edge(1, 4), edge(2, 3)}),
      make_pattern(S, 9, {corner(1), corner(2), edge(1, 3), edge(1, 4)}),
      make_pattern(S, 10, {corner(1), corner(2), edge(3, 4), edge(3, 4)}),
      make_pattern(S, 11, {corner(1), corner(2), edge(1, 4), edge(3, 4)}),
      make_pattern(S, 12, {corner(1), corner(2), corner(3), edge(1, 4)}),
      make_pattern(S, 13, {corner(1), corner(2), corner(3), corner(4)}),
  };
}

CasePattern pattern(Context set, int index) {
  const auto all = set == Context::S1 ? patterns_S1() : patterns_S0();
  if (index < 1 || index > static_cast<int>(all.size())) {
    throw std::out_of_range("no case " + std::to_string(index) + " in " + to_string(set));
  }
  return all[index - 1];
}

// ------------------------------------------------------------ canonical form

Argmin canonical_form(const IntMatrix4& m, const std::array<Rational, 4>& b) {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::optional<Argmin> best;
  do {
    std::array<std::pair<IntRow, Rational>, 4> rows;
    for (std::size_t r = 0; r < 4; ++r) {
      IntRow row{};
      for (int k = 0; k < 4; ++k) row[perm[k]] = m[r][k];
      rows[r] = {row, b[r]};
    }
    std::sort(rows.begin(), rows.end());
    Argmin a;
    for (std::size_t r = 0; r < 4; ++r) {
      a.matrix[r] = rows[r].first;
      a.b[r] = rows[r].second;
    }
    if (!best || a < *best) best = a;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

std::vector<WeightPair> coprime_pairs(int cap) {
  std::vector<WeightPair> out;
  for (int a = 1; a <= cap; ++a)
    for (int b = 1; b <= cap; ++b)
      if (std::gcd(a, b) == 1) out.push_back({a, b});
  std::sort(out.begin(), out.end(), fraction_less);
  return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

struct SlotLists {
  std::array<std::vector<Survivor>, 4> lists;
  std::array<bool, 4> follows{};  // same edge as the previous slot
  std::array<std::int64_t, 4> c{};
};

SlotLists slot_lists(const CasePattern& p, const std::vector<WeightPair>& pairs) {
  SlotLists s;
  const auto b = p.coefficients();
  for (std::size_t k = 0; k < 4; ++k) {
    const Slot& slot = p.slots[k];
    if (slot.is_corner()) {
      s.lists[k].push_back(Survivor::corner(slot.i));
    } else {
      for (const auto& w : pairs) s.lists[k].push_back(Survivor{slot.i, slot.j, w});
    }
    s.follows[k] = k > 0 && !slot.is_corner() && p.slots[k - 1] == slot;
    s.c[k] = b[k] == Rational(1) ? 0 : 1;
  }
  return s;
}

using Perm = std::array<int, 4>;

// Relabelings of the lines that map the slot multiset to itself.
std::vector<Perm> stabilizer(const CasePattern& p) {
  std::vector<Perm> out;
  Perm perm{0, 1, 2, 3};
  auto sorted = p.slots;
  do {
    std::array<Slot, 4> img;
    for (std::size_t k = 0; k < 4; ++k) {
      const Slot& s = p.slots[k];
      if (s.is_corner()) {
        img[k] = Slot{perm[s.i], -1};
      } else {
        img[k] = Slot{std::min(perm[s.i], perm[s.j]), std::max(perm[s.i], perm[s.j])};
      }
    }
    std::sort(img.begin(), img.end(), slot_less);
    if (img == sorted) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Index vector of the image of a candidate under a relabeling, in slot order.
// `index` maps (wi, wj) to the position in the fraction-sorted pair list.
std::array<int, 4> image_key(const CasePattern& p, const Candidate& c, const Perm& perm,
                             const std::vector<std::vector<int>>& index) {
  std::array<std::pair<Slot, WeightPair>, 4> img;
  for (std::size_t k = 0; k < 4; ++k) {
    const Survivor& s = c.s[k];
    if (s.is_corner()) {
      img[k] = {Slot{perm[s.i], -1}, {1, 1}};
    } else {
      int a = perm[s.i], b = perm[s.j];
      WeightPair w = s.w;
      if (a > b) {
        std::swap(a, b);
        w = w.swapped();
      }
      img[k] = {Slot{a, b}, w};
    }
  }
  std::sort(img.begin(), img.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return slot_less(x.first, y.first);
    return fraction_less(x.second, y.second);
  });
  std::array<int, 4> key{};
  for (std::size_t k = 0; k < 4; ++k) {
    key[k] = p.slots[k].is_corner() ? 0 : index[img[k].second.wi][img[k].second.wj];
  }
  return key;
}

struct Local {
  Bound bound;
  std::vector<Candidate> ties;
  std::uint64_t examined = 0;
};

i128 det3(i128 a, i128 b, i128 c, i128 d, i128 e, i128 f, i128 g, i128 h, i128 i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Cofactors of the last row of a 4x4 matrix given its first three rows.
std::array<i128, 4> last_row_cofactors(const std::array<std::array<i128, 4>, 3>& r) {
  std::array<i128, 4> out{};
  for (int k = 0; k < 4; ++k) {
    int c[3], n = 0;
    for (int x = 0; x < 4; ++x)
      if (x != k) c[n++] = x;
    const i128 minor = det3(r[0][c[0]], r[0][c[1]], r[0][c[2]], r[1][c[0]], r[1][c[1]], r[1][c[2]],
                            r[2][c[0]], r[2][c[1]], r[2][c[2]]);
    out[k] = ((3 + k) % 2 == 0) ? minor : -minor;
  }
  return out;
}

void sweep(const CasePattern& p, const SlotLists& sl, const SearchOptions& opt, unsigned part,
           unsigned parts, Local& out) {
  std::vector<Perm> group;
  std::vector<std::vector<int>> index;
  if (opt.symmetry_reduce) {
    group = stabilizer(p);
    index.assign(opt.cap + 1, std::vector<int>(opt.cap + 1, -1));
    const auto& l = sl.lists;
    for (const auto& list : l) {
      for (std::size_t t = 0; t < list.size(); ++t) {
        if (!list[t].is_corner()) index[list[t].w.wi][list[t].w.wj] = static_cast<int>(t);
      }
    }
  }
  const auto& L = sl.lists;
  Candidate cand;
  cand.c = sl.c;
  std::array<std::size_t, 4> at{};
  for (at[0] = part; at[0] < L[0].size(); at[0] += parts) {
    cand.s[0] = L[0][at[0]];
    for (at[1] = sl.follows[1] ? at[0] + 1 : 0; at[1] < L[1].size(); ++at[1]) {
      cand.s[1] = L[1][at[1]];
      for (at[2] = sl.follows[2] ? at[1] + 1 : 0; at[2] < L[2].size(); ++at[2]) {
        cand.s[2] = L[2][at[2]];
        std::array<std::array<i128, 4>, 3> rw{}, rh{};
        for (int r = 0; r < 3; ++r) {
          const auto w = cand.s[r].weight_vector();
          for (int k = 0; k < 4; ++k) {
            rw[r][k] = w[k];
            rh[r][k] = w[k] - cand.c[r];
          }
        }
        const auto cw = last_row_cofactors(rw);
        const auto ch = last_row_cofactors(rh);
        for (at[3] = sl.follows[3] ? at[2] + 1 : 0; at[3] < L[3].size(); ++at[3]) {
          cand.s[3] = L[3][at[3]];
          ++out.examined;
          const auto w = cand.s[3].weight_vector();
          i128 dw = 0, dwh = 0;
          for (int k = 0; k < 4; ++k) {
            dw += w[k] * cw[k];
            dwh += (w[k] - cand.c[3]) * ch[k];
          }
          if (dw == 0 || (dw > 0 ? dwh <= 0 : dwh >= 0)) continue;
          if (opt.symmetry_reduce) {
            std::array<int, 4> key{};
            for (int k = 0; k < 4; ++k) key[k] = p.slots[k].is_corner() ? 0 : static_cast<int>(at[k]);
            bool smaller = false;
            for (const auto& g : group) {
              if (image_key(p, cand, g, index) < key) {
                smaller = true;
                break;
              }
            }
            if (smaller) continue;
          }
          Volume v;
          if (fast::evaluate(cand, dw, dwh, out.bound, v) != Status::accepted) continue;
          if (out.bound.less(v)) {
            out.bound.tighten(v);
            out.ties.clear();
          }
          out.ties.push_back(cand);
        }
      }
    }
  }
}

}  // namespace

SearchResult enumerate_min(const CasePattern& p, const SearchOptions& opt) {
  if (opt.cap < 1) throw std::invalid_argument("cap must be at least 1");
  const SlotLists sl = slot_lists(p, coprime_pairs(opt.cap));
  unsigned jobs = opt.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.jobs;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(sl.lists[0].size())));

  std::vector<Local> locals(jobs);
  if (jobs == 1) {
    sweep(p, sl, opt, 0, 1, locals[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) {
      threads.emplace_back([&, t] { sweep(p, sl, opt, t, jobs, locals[t]); });
    }
    for (auto& th : threads) th.join();
  }

  SearchResult res;
  res.pattern = p;
  res.cap = opt.cap;
  Bound best;
  for (const auto& l : locals) {
    res.examined += l.examined;
    if (l.bound.set && best.less(Volume{l.bound.num, l.bound.den})) best = l.bound;
  }
  if (!best.set) return res;
  res.minimum = fast::to_rational(Volume{best.num, best.den});
  const auto b = p.coefficients();
  std::set<Argmin> seen;
  for (const auto& l : locals) {
    if (!l.bound.set || l.bound.num * best.den != best.num * l.bound.den) continue;
    for (const auto& c : l.ties) {
      IntMatrix4 m{};
      for (int r = 0; r < 4; ++r) m[r] = c.s[r].weight_vector();
      seen.insert(canonical_form(m, b));
    }
  }
  res.argmins.assign(seen.begin(), seen.end());
  return res;
}

// ---------------------------------------------------------------- placements

std::vector<Placement> derive_placements(int cap) {
  std::vector<Slot> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) edges.push_back(Slot{i, j});

  auto canon = [](std::array<Slot, 4> s) {
    std::optional<std::array<Slot, 4>> best;
    Perm perm{0, 1, 2, 3};
    do {
      std::array<Slot, 4> img;
      for (std::size_t k = 0; k < 4; ++k) {
        img[k] = Slot{std::min(perm[s[k].i], perm[s[k].j]), std::max(perm[s[k].i], perm[s[k].j])};
      }
      std::sort(img.begin(), img.end(), slot_less);
      if (!best || img < *best) best = img;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
  };

  std::set<std::array<Slot, 4>> classes;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a; b < 6; ++b)
      for (std::size_t c = b; c < 6; ++c)
        for (std::size_t d = c; d < 6; ++d) {
          const std::array<std::size_t, 4> pick{a, b, c, d};
          bool ok = true;
          for (std::size_t e = 0; e < 6; ++e) ok = ok && std::count(pick.begin(), pick.end(), e) <= 2;
          if (ok) classes.insert(canon({edges[a], edges[b], edges[c], edges[d]}));
        }

  std::map<std::array<Slot, 4>, int> s0;
  for (const auto& p : patterns_S0()) s0[canon(p.slots)] = p.index;

  const auto pairs = coprime_pairs(cap);
  std::vector<Placement> out;
  for (const auto& slots : classes) {
    Placement pl;
    pl.slots = slots;
    if (auto it = s0.find(slots); it != s0.end()) pl.s0_case = it->second;
    std::array<bool, 4> covered{};
    for (const auto& s : slots) covered[s.i] = covered[s.j] = true;
    pl.covers_all_lines = std::all_of(covered.begin(), covered.end(), [](bool x) { return x; });

    const CasePattern p{0, Context::S0, slots};
    const SlotLists sl = slot_lists(p, pairs);
    bool any_lc = false, any_nonzero = false;
    Candidate cand;
    cand.c = sl.c;
    const auto& L = sl.lists;
    std::array<std::size_t, 4> at{};
    for (at[0] = 0; at[0] < L[0].size(); ++at[0])
      for (at[1] = sl.follows[1] ? at[0] + 1 : 0; at[1] < L[1].size(); ++at[1])
        for (at[2] = sl.follows[2] ? at[1] + 1 : 0; at[2] < L[2].size(); ++at[2])
          for (at[3] = sl.follows[3] ? at[2] + 1 : 0; at[3] < L[3].size(); ++at[3]) {
            for (int k = 0; k < 4; ++k) cand.s[k] = L[k][at[k]];
            if (fast::det_w(cand) == 0) continue;
            const auto lc = fast::is_lc(cand);
            if (!lc || !*lc) continue;
            any_lc = true;
            Volume v;
            if (fast::evaluate(cand, Bound{}, v) == Status::accepted) pl.admits_lc_ample = true;
            if (fast::det_w_hat(cand) != 0) any_nonzero = true;
          }
    pl.only_zero = any_lc && !any_nonzero;
    out.push_back(pl);
  }
  return out;
}

// ------------------------------------------------------------------- limits

SurfaceConfig limit_config(const SurfaceConfig& cfg, std::size_t row, std::optional<int> line) {
  if (row >= 4) throw std::invalid_argument("row out of range");
  const Survivor& s = cfg.survivors[row];
  if (s.is_corner()) throw std::invalid_argument("row " + std::to_string(row + 1) + " is a line, not an edge curve");
  int grow;
  if (line) {
    if (*line != s.i && *line != s.j) {
      throw std::invalid_argument("line " + std::to_string(*line + 1) + " does not carry row " +
                                  std::to_string(row + 1));
    }
    grow = *line;
  } else {
    if (s.w.wi == s.w.wj) throw std::invalid_argument("both weights are equal; name the growing line");
    grow = s.w.wi > s.w.wj ? s.i : s.j;
  }
  auto survivors = cfg.survivors;
  auto b = cfg.coefficients;
  survivors[row] = Survivor::corner(grow);
  b[row] = Rational(1);
  return SurfaceConfig::make(survivors, b);
}

Rational limit_volume(const SurfaceConfig& cfg, std::size_t row, std::optional<int> line) {
  const InvariantReport r = evaluate(limit_config(cfg, row, line));
  if (!r.det_w) throw InvalidConfiguration("limit configuration has det W = 0");
  if (!r.volume) throw NotPositiveDefinite("limit configuration is not contractible");
  return *r.volume;
}

LimitPoint min_limit_point(int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  const auto pairs = coprime_pairs(cap);
  constexpr std::int64_t probes[] = {101, 103};
  std::optional<LimitPoint> best;
  Bound bound;

  for (const auto& p : patterns_S0()) {
    const SlotLists sl = slot_lists(p, pairs);
    for (std::size_t g = 0; g < 4; ++g) {
      const Slot gs = p.slots[g];
      for (int line : {gs.i, gs.j}) {
        // the other three slots keep their own ordering constraints
        std::array<std::size_t, 3> others{};
        for (std::size_t k = 0, n = 0; k < 4; ++k)
          if (k != g) others[n++] = k;
        Candidate lim;
        lim.c = sl.c;
        lim.s[g] = Survivor::corner(line);
        lim.c[g] = 0;
        std::array<std::size_t, 4> at{};
        auto start = [&](std::size_t n) -> std::size_t {
          if (n == 0) return 0;
          const std::size_t k = others[n], prev = others[n - 1];
          return p.slots[k] == p.slots[prev] && !p.slots[k].is_corner() ? at[prev] + 1 : 0;
        };
        auto& A = at;
        for (A[others[0]] = 0; A[others[0]] < sl.lists[others[0]].size(); ++A[others[0]])
          for (A[others[1]] = start(1); A[others[1]] < sl.lists[others[1]].size(); ++A[others[1]])
            for (A[others[2]] = start(2); A[others[2]] < sl.lists[others[2]].size(); ++A[others[2]]) {
              for (auto k : others) lim.s[k] = sl.lists[k][at[k]];
              const auto v = fast::signed_volume(lim);
              if (!v || v->num <= 0) continue;
              if (!bound.less(*v)) continue;
              // is there a family (n, k) with lc and ample members for large n?
              bool family = false;
              for (std::int64_t k = 1; k <= cap && !family; ++k) {
                bool all = true;
                for (std::int64_t n : probes) {
                  Candidate c = lim;
                  c.c[g] = sl.c[g];
                  const WeightPair w = line == gs.i ? WeightPair{n, k} : WeightPair{k, n};
                  c.s[g] = Survivor{gs.i, gs.j, w};
                  Volume tmp;
                  if (fast::evaluate(c, Bound{}, tmp) != Status::accepted) {
                    all = false;
                    break;
                  }
                }
                family = all;
              }
              if (!family) continue;
              bound.tighten(*v);
              LimitPoint lp;
              lp.value = fast::to_rational(*v);
              lp.pattern = p;
              for (std::size_t r = 0; r < 4; ++r) lp.family[r] = lim.s[r].weight_vector();
              lp.family[g] = Survivor{gs.i, gs.j, {1, 1}}.weight_vector();
              lp.family[g][line] = 0;
              lp.row = g;
              lp.line = line;
              best = lp;
            }
      }
    }
  }
  if (!best) throw std::runtime_error("no limit point found");
  return *best;
}

// ------------------------------------------------------------------- series

namespace {

// (row, column) of x1..x4 in the four-parameter series; the remaining
// nonzero entries are 1.
constexpr std::array<std::array<std::pair<int, int>, 4>, 6> kSeries{{
    {{{0, 0}, {1, 1}, {2, 2}, {3, 3}}},
    {{{0, 0}, {1, 1}, {2, 2}, {3, 3}}},
    {{{0, 0}, {1, 1}, {2, 3}, {3, 2}}},
    {{{0, 0}, {1, 3}, {2, 1}, {3, 2}}},
    {{{0, 1}, {1, 0}, {2, 3}, {3, 2}}},
    {{{0, 1}, {1, 2}, {2, 3}, {3, 0}}},
}};
// the column of the 1 in each row
constexpr std::array<std::array<int, 4>, 6> kOnes{{
    {1, 0, 3, 2},
    {1, 0, 0, 0},
    {1, 0, 0, 1},
    {1, 0, 2, 1},
    {0, 2, 0, 1},
    {0, 1, 2, 3},
}};

void check_series(int series) {
  if (series < 1 || series > 6) throw std::out_of_range("series must be 1..6");
}

}  // namespace

IntMatrix4 series_matrix(int series, const std::array<std::int64_t, 4>& x) {
  check_series(series);
  IntMatrix4 m{};
  for (int r = 0; r < 4; ++r) m[r][kOnes[series - 1][r]] = 1;
  for (int k = 0; k < 4; ++k) {
    const auto [r, c] = kSeries[series - 1][k];
    m[r][c] = x[k];
  }
  return m;
}

std::pair<std::size_t, int> series_parameter(int series, int k) {
  check_series(series);
  if (k < 1 || k > 4) throw std::out_of_range("parameter must be 1..4");
  const auto [r, c] = kSeries[series - 1][k - 1];
  return {static_cast<std::size_t>(r), c};
}

Rational acc_demo(int series, const std::vector<int>& order, const std::array<std::int64_t, 4>& x) {
  check_series(series);
  if (order.empty()) throw std::invalid_argument("order must name at least one parameter");
  std::array<std::int64_t, 4> vals = x;
  std::set<int> sent;
  for (int k : order) {
    if (k < 1 || k > 4 || !sent.insert(k).second) throw std::invalid_argument("bad parameter order");
    vals[k - 1] = 2;  // placeholder; the row is replaced below
  }
  SurfaceConfig cfg;
  std::array<Survivor, 4> s;
  std::array<Rational, 4> b{0, 0, 0, 0};
  const IntMatrix4 m = series_matrix(series, vals);
  for (std::size_t r = 0; r < 4; ++r) s[r] = Survivor::from_row(m[r]);
  cfg = SurfaceConfig::make(s, b);
  for (int k : order) {
    const auto [row, col] = series_parameter(series, k);
    cfg = limit_config(cfg, row, col);
  }
  const InvariantReport r = evaluate(cfg);
  if (!r.volume) throw InvalidConfiguration("iterated limit is not a valid configuration");
  return *r.volume;
}

std::vector<SeriesCount> series_scan() {
  constexpr int top = 7;
  constexpr std::int64_t unbounded = 1000;
  const std::array<std::size_t, 6> expected{1, 1, 2, 3, 60, 18};
  const auto pairs = coprime_pairs(top);
  std::vector<SeriesCount> out;

  for (const auto& p : patterns_S0()) {
    const SlotLists sl = slot_lists(p, pairs);
    std::set<Argmin> found;
    Candidate cand;
    cand.c = sl.c;
    const auto& L = sl.lists;
    std::array<std::size_t, 4> at{};
    auto lc = [](const Candidate& c) {
      if (fast::det_w(c) == 0) return false;
      const auto r = fast::is_lc(c);
      return r && *r;
    };
    for (at[0] = 0; at[0] < L[0].size(); ++at[0])
      for (at[1] = sl.follows[1] ? at[0] + 1 : 0; at[1] < L[1].size(); ++at[1])
        for (at[2] = sl.follows[2] ? at[1] + 1 : 0; at[2] < L[2].size(); ++at[2])
          for (at[3] = sl.follows[3] ? at[2] + 1 : 0; at[3] < L[3].size(); ++at[3]) {
            for (int k = 0; k < 4; ++k) cand.s[k] = L[k][at[k]];
            // a series is recorded from its lc and ample members
            Volume v;
            if (fast::evaluate(cand, Bound{}, v) != Status::accepted) continue;
            IntMatrix4 desc{};
            for (int k = 0; k < 4; ++k) {
              const Survivor& s = cand.s[k];
              desc[k] = s.weight_vector();
              if (s.w.wi == s.w.wj) continue;
              const bool grow_i = s.w.wi > s.w.wj;
              const std::int64_t n = std::max(s.w.wi, s.w.wj), small = std::min(s.w.wi, s.w.wj);
              bool parameter = true;
              for (std::int64_t m = n + 1; m <= top && parameter; ++m) {
                if (std::gcd(m, small) != 1) continue;
                Candidate c = cand;
                c.s[k].w = grow_i ? WeightPair{m, small} : WeightPair{small, m};
                // keep the order of survivors on a shared edge
                for (int o = 0; o < 4 && parameter; ++o) {
                  if (o == k || c.s[o].is_corner() || c.s[o].i != s.i || c.s[o].j != s.j) continue;
                  if (fraction_less(s.w, c.s[o].w) != fraction_less(c.s[k].w, c.s[o].w) ||
                      c.s[o].w == c.s[k].w) {
                    parameter = false;
                  }
                }
                parameter = parameter && lc(c);
              }
              if (parameter) desc[k][grow_i ? s.i : s.j] = unbounded;
            }
            found.insert(canonical_form(desc, {0, 0, 0, 0}));
          }
    SeriesCount sc;
    sc.case_index = p.index;
    sc.found = found.size();
    sc.expected = expected[p.index - 1];
    for (const auto& a : found) {
      int params = 0;
      for (const auto& row : a.matrix)
        for (auto x : row) params += x == unbounded;
      ++sc.by_parameters[params];
    }
    out.push_back(sc);
  }
  return out;
}

}  // namespace fourlines
