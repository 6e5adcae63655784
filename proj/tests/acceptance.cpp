// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "fourlines/fast_eval.hpp"
#include "fourlines/report.hpp"
#include "fourlines/search.hpp"
#include "support.hpp"

using namespace fourlines;
namespace ft = fourlines::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failed = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  failed += !o.pass;
  std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << title << ": " << o.detail << " [" << std::fixed;
  std::cout.precision(1);
  std::cout << seconds_since(t0) << " s]" << std::endl;
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::array<Rational, 4> corner_ones(const IntMatrix4& m) {
  std::array<Rational, 4> b{0, 0, 0, 0};
  for (int r = 0; r < 4; ++r) {
    int nonzero = 0;
    for (auto x : m[r]) nonzero += x != 0;
    if (nonzero == 1) b[r] = Rational(1);
  }
  return b;
}

struct Expected {
  const char* minimum;
  const char* matrix;
};

// Compares one set of patterns against the expected rows at `cap`, then
// checks that every cap in `stable` gives the same minima and argmins.
Outcome reproduce(Context set, const std::vector<Expected>& rows, int cap, const std::vector<int>& stable) {
  const auto pats = set == Context::S1 ? patterns_S1() : patterns_S0();
  std::ostringstream os;
  bool ok = pats.size() == rows.size();
  std::vector<SearchResult> main;
  for (std::size_t k = 0; k < pats.size() && ok; ++k) {
    main.push_back(enumerate_min(pats[k], {cap, jobs(), false}));
    const SearchResult& r = main.back();
    const IntMatrix4 m = parse_matrix(rows[k].matrix);
    const Argmin want = canonical_form(m, set == Context::S1 ? corner_ones(m) : std::array<Rational, 4>{0, 0, 0, 0});
    const bool min_ok = r.minimum && *r.minimum == Rational::parse(rows[k].minimum);
    const bool arg_ok = std::find(r.argmins.begin(), r.argmins.end(), want) != r.argmins.end();
    bool checked = true;
    for (const auto& a : r.argmins) {
      const SurfaceConfig cfg = SurfaceConfig::from_matrix(a.matrix, a.b);
      const InvariantReport rep = evaluate(cfg, set);
      checked = checked && rep.ok() && *rep.ample_sign == AmpleSign::ample && *rep.lc_class != LcClass::not_lc &&
                volume_oracle(cfg).volume == *r.minimum;
    }
    os << (k ? " " : "") << (r.minimum ? r.minimum->str() : "none");
    if (!min_ok) os << "(want " << rows[k].minimum << ")";
    if (!arg_ok) os << "(argmin differs)";
    if (!checked) os << "(argmin fails a check)";
    ok = ok && min_ok && arg_ok && checked;
  }
  for (int other : stable) {
    bool same = true;
    for (std::size_t k = 0; k < pats.size(); ++k) {
      const SearchResult r = enumerate_min(pats[k], {other, jobs(), false});
      same = same && r.minimum == main[k].minimum && r.argmins == main[k].argmins;
    }
    os << "; cap " << other << (same ? " same" : " differs");
    ok = ok && same;
  }
  return {ok, os.str()};
}

// Every choice of four distinct survivors with weights <= cap and b = 0.
Outcome structural_sweep(int cap) {
  std::vector<Survivor> all;
  for (int i = 0; i < 4; ++i) all.push_back(Survivor::corner(i));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (const auto& p : coprime_pairs(cap)) all.push_back(Survivor::on_edge(i, j, p));
  const std::size_t n = all.size();
  std::size_t examined = 0, accepted = 0, bad_shape = 0, raised = 0, raised_lc = 0;
  std::string first;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          ++examined;
          fast::Candidate cand;
          cand.s = {all[a], all[b], all[c], all[d]};
          fast::Volume v;
          if (fast::evaluate(cand, fast::Bound{}, v) != fast::Status::accepted) continue;
          ++accepted;
          int per_edge[4][4] = {};
          bool shape_ok = true;
          for (const auto& s : cand.s) {
            if (s.is_corner()) shape_ok = false;
            else if (++per_edge[s.i][s.j] > 2) shape_ok = false;
          }
          if (!shape_ok) {
            if (bad_shape++ == 0) first = ft::show(SurfaceConfig::make(cand.s, {0, 0, 0, 0}));
            continue;
          }
          for (int k = 0; k < 4; ++k) {
            fast::Candidate up = cand;
            up.c[k] = 0;
            ++raised;
            if (fast::is_lc(up).value_or(true)) {
              if (raised_lc++ == 0 && first.empty()) first = ft::show(SurfaceConfig::make(cand.s, {0, 0, 0, 0}));
            }
          }
        }
  std::ostringstream os;
  os << examined << " configurations, " << accepted << " lc and ample; " << bad_shape
     << " with a corner or three on an edge; " << raised_lc << " of " << raised << " still lc with b = 1";
  if (!first.empty()) os << " (first: " << first << ")";
  return {bad_shape == 0 && raised_lc == 0 && accepted > 0, os.str()};
}

}  // namespace

int main() {
  report(1, "worked example", [] {
    const auto t0 = Clock::now();
    const InvariantReport r = invariants(parse_config("1,3,0,0;0,0,1,0;5,0,0,2;1,0,0,3", "0,0,0,0"));
    const double t = seconds_since(t0);
    std::vector<Rational> comps;
    for (const auto& c : r.delta_components) comps.push_back(c.det);
    std::sort(comps.begin(), comps.end());
    const bool ok = *r.det_w == Rational(39) && *r.cofactors == std::array<Rational, 4>{13, 39, 3, 11} &&
                    *r.det_w_hat == Rational(-27) && comps == std::vector<Rational>{3, 11, 13} &&
                    *r.volume == Rational(243, 143) && *r.ample_sign == AmpleSign::antiample && t < 1.0;
    std::ostringstream os;
    os << "det_w " << *r.det_w << ", det_w_hat " << *r.det_w_hat << ", delta " << *r.delta << ", volume "
       << *r.volume << ", " << to_string(*r.ample_sign);
    return Outcome{ok, os.str()};
  });

  report(2, "minima without boundary, cap 12", [] {
    return reproduce(Context::S0,
                     {{"1/143", "2,1,0,0;1,7,0,0;0,0,3,1;0,0,1,4"},
                      {"1/143", "2,1,0,0;1,7,0,0;1,0,2,0;1,0,0,3"},
                      {"1/5537", "5,1,0,0;1,10,0,0;1,0,0,3;0,1,2,0"},
                      {"1/5537", "2,1,0,0;1,0,0,2;0,10,1,0;0,1,5,0"},
                      {"1/6351", "1,2,0,0;9,0,1,0;1,0,0,5;0,1,2,0"},
                      {"1/6351", "1,2,0,0;0,1,2,0;0,0,1,4;10,0,0,1"}},
                     12, {10, 11});
  });

  report(3, "minima with the boundary lines, cap 8", [] {
    return reproduce(Context::S1,
                     {{"1/42", "1,0,0,0;1,2,0,0;1,0,3,0;1,0,0,7"},
                      {"1/78", "1,0,0,0;1,2,0,0;1,0,0,3;0,1,4,0"},
                      {"1/22", "1,0,0,0;1,0,0,2;0,3,1,0;0,1,4,0"},
                      {"1/70", "1,0,0,0;1,2,0,0;0,1,2,0;0,0,1,4"},
                      {"1/22", "1,0,0,0;1,0,2,0;0,2,1,0;0,0,1,3"},
                      {"1/15", "1,0,0,0;0,3,1,0;0,1,2,0;0,0,1,2"},
                      {"1/60", "1,0,0,0;0,1,2,0;0,2,0,1;0,0,1,3"},
                      {"1/6", "1,0,0,0;0,1,0,0;1,0,0,2;0,1,3,0"},
                      {"1/6", "1,0,0,0;0,1,0,0;1,0,2,0;1,0,0,3"},
                      {"1/3", "1,0,0,0;0,1,0,0;0,0,2,1;0,0,1,2"},
                      {"1/6", "1,0,0,0;0,1,0,0;1,0,0,2;0,0,2,1"},
                      {"1/2", "1,0,0,0;0,1,0,0;0,0,1,0;1,0,0,2"},
                      {"1", "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1"}},
                     8, {7});
  });

  report(4, "smallest limit point", [] {
    const SurfaceConfig cfg = SurfaceConfig::from_matrix(series_matrix(5, {2, 5, 3, 4}));
    const auto [row, col] = series_parameter(5, 2);
    const Rational lim = limit_volume(cfg, row, col);
    const Rational case2 = *invariants(parse_config("1,0,0,0;1,2,0,0;1,0,0,3;0,1,4,0", "1,0,0,0")).volume;
    const LimitPoint lp = min_limit_point(8);
    std::ostringstream os;
    os << "series limit " << lim << ", boundary case 2 " << case2 << ", smallest at cap 8 " << lp.value;
    return Outcome{lim == Rational(1, 78) && case2 == lim && lp.value == Rational(1, 78), os.str()};
  });

  report(5, "oracle equivalence on 1000 random configurations", [] {
    const auto t = ft::oracle_suite(5, 1000);
    return Outcome{t.ok(), t.summary()};
  });

  report(6, "determinant calculus", [] {
    ft::Tally t = ft::chain_suite(6);
    t.merge(ft::graph_suite(6));
    t.merge(ft::hairy_suite(6, 500));
    return Outcome{t.ok(), t.summary()};
  });

  report(7, "Farey encoding", [] {
    ft::Tally t = ft::farey_suite(7, 300);
    const EdgeChain e = build_edge_chain({{7, 5}, {14, 11}}, Rational(0), Rational(0));
    const auto marks = ft::chain_marks(e, 0, e.order.size());
    const std::vector<Rational> want{2, 2, 3, 1, 4, 2, 1, 3, 5, 1};
    t.check(marks == want, [] { return std::string("two-survivor chain"); });
    t.check(edge_pair_det({7, 5}, {14, 11}) == Rational(7), [] { return std::string("between determinant"); });
    return Outcome{t.ok(), t.summary()};
  });

  report(8, "structural rules", [] {
    Outcome sweep = structural_sweep(5);
    const auto mono = ft::monotonicity_suite(8, 100);
    sweep.detail += "; prolongation: " + mono.summary();
    sweep.pass = sweep.pass && mono.ok();
    return sweep;
  });

  report(9, "series counts (soft)", [] {
    std::ostringstream found, expected, mismatch;
    for (const auto& c : series_scan()) {
      found << (c.case_index > 1 ? "," : "") << c.found;
      expected << (c.case_index > 1 ? "," : "") << c.expected;
      if (c.found != c.expected) mismatch << " " << c.case_index;
    }
    std::string detail = "found (" + found.str() + ") vs (" + expected.str() + ")";
    detail += mismatch.str().empty() ? ", all match" : ", reported mismatch in cases" + mismatch.str();
    return Outcome{true, detail};
  });

  return failed;
}
