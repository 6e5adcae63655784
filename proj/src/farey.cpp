#include "fourlines/farey.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fourlines {

WeightPair WeightPair::make(std::int64_t wi, std::int64_t wj) {
  if (wi <= 0 || wj <= 0) {
    throw std::invalid_argument("weight pair (" + std::to_string(wi) + "," + std::to_string(wj) +
                                ") must be positive");
  }
  if (std::gcd(wi, wj) != 1) {
    throw std::invalid_argument("weight pair (" + std::to_string(wi) + "," + std::to_string(wj) +
                                ") is not coprime");
  }
  return {wi, wj};
}

WeightPair WeightPair::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("expected 'a,b', got '" + std::string(text) + "'");
  const Rational a = Rational::parse(text.substr(0, comma));
  const Rational b = Rational::parse(text.substr(comma + 1));
  if (!a.is_integer() || !b.is_integer() || !a.numerator().fits_slong_p() ||
      !b.numerator().fits_slong_p()) {
    throw std::invalid_argument("expected integers in '" + std::string(text) + "'");
  }
  return make(a.numerator().get_si(), b.numerator().get_si());
}

bool fraction_less(const WeightPair& a, const WeightPair& b) {
  // a.wj / a.wi < b.wj / b.wi
  return static_cast<__int128>(a.wj) * b.wi < static_cast<__int128>(b.wj) * a.wi;
}

WeightPair lr_to_weight(std::string_view word) {
  std::int64_t li = 1, lj = 0;  // left bracket, v_i
  std::int64_t ri = 0, rj = 1;  // right bracket, v_j
  std::int64_t ci = 1, cj = 1;
  for (char ch : word) {
    if (ch == 'L') {
      ri = ci, rj = cj;
      ci += li, cj += lj;
    } else if (ch == 'R') {
      li = ci, lj = cj;
      ci += ri, cj += rj;
    } else {
      throw std::invalid_argument(std::string("LR word has a letter other than L/R: '") + ch + "'");
    }
  }
  return {ci, cj};
}

namespace {

template <typename Visit>
void descend(const WeightPair& target, Visit&& visit) {
  if (target.wi <= 0 || target.wj <= 0 || std::gcd(target.wi, target.wj) != 1) {
    throw std::invalid_argument("weight pair " + target.str() + " is not a coprime positive pair");
  }
  std::int64_t li = 1, lj = 0, ri = 0, rj = 1;
  WeightPair cur{1, 1};
  visit(cur, '\0');
  while (cur != target) {
    if (fraction_less(target, cur)) {
      ri = cur.wi, rj = cur.wj;
      cur = {cur.wi + li, cur.wj + lj};
      visit(cur, 'L');
    } else {
      li = cur.wi, lj = cur.wj;
      cur = {cur.wi + ri, cur.wj + rj};
      visit(cur, 'R');
    }
  }
}

}  // namespace

std::string weight_to_lr(const WeightPair& p) {
  std::string out;
  descend(p, [&](const WeightPair&, char step) {
    if (step != '\0') out.push_back(step);
  });
  return out;
}

std::vector<WeightPair> sb_path_nodes(const WeightPair& p) {
  std::vector<WeightPair> out;
  descend(p, [&](const WeightPair& node, char) { out.push_back(node); });
  return out;
}

EdgeChain build_edge_chain(std::vector<WeightPair> survivors, const Rational& base_i,
                           const Rational& base_j) {
  std::sort(survivors.begin(), survivors.end(), fraction_less);
  for (std::size_t k = 1; k < survivors.size(); ++k) {
    if (!fraction_less(survivors[k - 1], survivors[k])) {
      throw std::invalid_argument("build_edge_chain: duplicate survivor " + survivors[k].str());
    }
  }
  // nodes to create, ordered by depth so that each node's two parents are
  // adjacent when it is born
  std::map<std::size_t, std::set<WeightPair>> by_depth;
  for (const auto& s : survivors) {
    const auto path = sb_path_nodes(s);
    for (std::size_t d = 0; d < path.size(); ++d) by_depth[d].insert(path[d]);
  }

  struct Node {
    std::int64_t wi, wj;
    Rational mark;
  };
  std::list<Node> line{{1, 0, base_i}, {0, 1, base_j}};
  for (const auto& [depth, nodes] : by_depth) {
    for (const auto& n : nodes) {
      // find the adjacent pair whose mediant is n
      auto it = line.begin();
      for (;;) {
        auto next = std::next(it);
        if (next == line.end()) throw std::logic_error("build_edge_chain: parent pair not adjacent");
        if (it->wi + next->wi == n.wi && it->wj + next->wj == n.wj) {
          it->mark += Rational(1);
          next->mark += Rational(1);
          line.insert(next, Node{n.wi, n.wj, Rational(1)});
          break;
        }
        it = next;
      }
    }
  }

  EdgeChain out;
  for (const auto& node : line) {
    const VertexId v = out.chain.add_vertex(node.mark);
    if (v > 0) out.chain.add_edge(v - 1, v);
    out.weights.emplace_back(node.wi, node.wj);
    out.order.push_back(v);
  }
  out.end_i = 0;
  out.end_j = out.chain.size() - 1;
  for (const auto& s : survivors) {
    for (VertexId v = 0; v < out.weights.size(); ++v) {
      if (out.weights[v] == std::pair<std::int64_t, std::int64_t>{s.wi, s.wj}) out.survivors.push_back(v);
    }
  }
  return out;
}

Rational edge_pair_det(const WeightPair& p, const WeightPair& q) {
  if (!fraction_less(p, q)) {
    throw std::invalid_argument("edge_pair_det: expected fraction(" + p.str() + ") < fraction(" + q.str() + ")");
  }
  return Rational(p.wi) * Rational(q.wj) - Rational(p.wj) * Rational(q.wi);
}

}  // namespace fourlines
