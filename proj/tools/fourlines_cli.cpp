// fourlines: invariants, searches and limits for surfaces from four lines.
//
// Exit codes: 0 success, 1 usage or parse error, 2 domain error or a report
// with diagnostics.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fourlines/errors.hpp"
#include "fourlines/farey.hpp"
#include "fourlines/hjchains.hpp"
#include "fourlines/report.hpp"
#include "fourlines/search.hpp"

using namespace fourlines;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs an input parser, turning its complaints into usage errors.
template <class F>
auto parsing(F f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::vector<Rational> parse_marks(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw std::invalid_argument("empty mark list");
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

Json search_json(const SearchResult& r) {
  Json argmins = Json::array();
  for (const auto& a : r.argmins) {
    Json b = Json::array();
    for (const auto& x : a.b) b.push_back(x.str());
    argmins.push_back({{"matrix", format_matrix(a.matrix)}, {"b", b}});
  }
  Json j;
  j["pattern"] = {{"set", to_string(r.pattern.set)}, {"case", r.pattern.index}, {"slots", r.pattern.describe()}};
  j["cap"] = r.cap;
  j["minimum"] = r.minimum ? Json(r.minimum->str()) : Json(nullptr);
  j["argmins"] = argmins;
  j["examined"] = r.examined;
  return j;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of surfaces built from four lines in the plane"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // invariants
  auto* inv = app.add_subcommand("invariants", "Invariants of one configuration");
  std::string matrix, b = "0,0,0,0", context = "general";
  inv->add_option("--matrix", matrix, "Weight matrix, rows ';', entries ','")->required();
  inv->add_option("--b", b, "Coefficients b1,b2,b3,b4")->capture_default_str();
  inv->add_option("--context", context, "Validation context")
      ->check(CLI::IsMember({"general", "S0", "S1"}))
      ->capture_default_str();

  // search
  auto* search = app.add_subcommand("search", "Minimal volumes by bounded enumeration");
  std::string set = "S0";
  int case_id = 0, cap = 0;
  unsigned jobs = 1;
  bool reduce = false;
  search->add_option("--set", set, "Coefficient set")->check(CLI::IsMember({"S0", "S1"}))->capture_default_str();
  search->add_option("--case", case_id, "Single case (1-based)");
  search->add_option("--cap", cap, "Largest weight entry (default 12 for S0, 8 for S1)");
  search->add_option("--jobs", jobs, "Worker threads (0: all cores)")->capture_default_str();
  search->add_flag("--symmetry", reduce, "Evaluate one configuration per symmetry orbit");

  // limit
  auto* limit = app.add_subcommand("limit", "Limit of volumes as one weight grows");
  std::string lmatrix, lb = "0,0,0,0";
  int row = 0, line = 0, lcap = 8;
  bool smallest = false;
  limit->add_option("--matrix", lmatrix, "Weight matrix");
  limit->add_option("--b", lb, "Coefficients")->capture_default_str();
  limit->add_option("--row", row, "Row of the growing survivor (1-based)");
  limit->add_option("--line", line, "Line whose weight grows (default: larger entry)");
  limit->add_flag("--smallest", smallest, "Search for the smallest limit point");
  limit->add_option("--cap", lcap, "Cap for --smallest")->capture_default_str();

  // encode / decode
  auto* encode = app.add_subcommand("encode", "LR word to weight pair");
  std::string word;
  encode->add_option("--lr", word, "Word over {L,R}")->required();
  auto* decode = app.add_subcommand("decode", "Weight pair to LR word");
  std::string pair_text;
  decode->add_option("--pair", pair_text, "Pair a,b")->required();

  // graph-det
  auto* gdet = app.add_subcommand("graph-det", "Determinant of a chain or cycle");
  std::string chain, cycle;
  auto* chain_opt = gdet->add_option("--chain", chain, "Marks n1,n2,...");
  auto* cycle_opt = gdet->add_option("--cycle", cycle, "Marks n1,n2,... of a cycle");
  chain_opt->excludes(cycle_opt);
  gdet->require_option(1);

  // series
  auto* series = app.add_subcommand("series", "Count the series in the six cases");

  // acc
  auto* acc = app.add_subcommand("acc", "Iterated limits along a four-parameter series");
  int series_id = 1;
  std::string order_text, x_text = "1,1,1,1";
  acc->add_option("--series", series_id, "Series 1..6")->required();
  acc->add_option("--order", order_text, "Parameters sent to infinity, in order, e.g. 1,2")->required();
  acc->add_option("--x", x_text, "Values of x1..x4 for the fixed parameters")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  const bool json = format == "json";

  try {
    if (*inv) {
      const SurfaceConfig cfg = parsing([&] { return parse_config(matrix, b); });
      const InvariantReport r = evaluate(cfg, parse_context(context));
      std::cout << (json ? to_json(r).dump(2) + "\n" : to_text(r));
      return r.ok() ? 0 : 2;
    }

    if (*search) {
      const Context ctx = set == "S1" ? Context::S1 : Context::S0;
      if (cap == 0) cap = ctx == Context::S1 ? 8 : 12;
      if (cap < 1) throw UsageError("--cap must be positive");
      std::vector<CasePattern> pats;
      if (case_id != 0) {
        try {
          pats.push_back(pattern(ctx, case_id));
        } catch (const std::out_of_range& e) {
          throw UsageError(e.what());
        }
      } else {
        pats = ctx == Context::S1 ? patterns_S1() : patterns_S0();
      }
      Json all = Json::array();
      if (!json) std::cout << pad("case", 6) << pad("pattern", 18) << pad("minimum", 10) << "argmin\n";
      for (const auto& p : pats) {
        const SearchResult r = enumerate_min(p, SearchOptions{cap, jobs, reduce});
        if (json) {
          all.push_back(search_json(r));
          continue;
        }
        std::cout << pad(std::to_string(p.index), 6) << pad(p.describe(), 18);
        if (!r.minimum) {
          std::cout << "no qualifying configuration";
        } else {
          std::cout << pad(r.minimum->str(), 10);
          for (std::size_t k = 0; k < r.argmins.size(); ++k) {
            std::cout << (k ? " | " : "") << format_matrix(r.argmins[k].matrix);
          }
        }
        std::cout << "  (cap " << r.cap << ", examined " << r.examined << ")\n";
      }
      if (json) std::cout << all.dump(2) << "\n";
      return 0;
    }

    if (*limit) {
      if (smallest) {
        const LimitPoint lp = min_limit_point(lcap);
        if (json) {
          std::cout << Json{{"value", lp.value.str()},
                            {"case", lp.pattern.index},
                            {"family", format_matrix(lp.family)},
                            {"row", lp.row + 1},
                            {"line", lp.line + 1}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << lp.value << "  (case " << lp.pattern.index << ", family " << format_matrix(lp.family)
                    << ", row " << lp.row + 1 << " grows on line " << lp.line + 1 << ")\n";
        }
        return 0;
      }
      if (lmatrix.empty() || row == 0) throw UsageError("limit needs --matrix and --row, or --smallest");
      if (row < 1 || row > 4) throw UsageError("--row must be 1..4");
      const SurfaceConfig cfg = parsing([&] { return parse_config(lmatrix, lb); });
      std::optional<int> grow;
      if (line != 0) {
        if (line < 1 || line > 4) throw UsageError("--line must be 1..4");
        grow = line - 1;
      }
      const SurfaceConfig lim = limit_config(cfg, static_cast<std::size_t>(row - 1), grow);
      const Rational v = limit_volume(cfg, static_cast<std::size_t>(row - 1), grow);
      if (json) {
        Json bj = Json::array();
        for (const auto& x : lim.coefficients) bj.push_back(x.str());
        std::cout << Json{{"limit", v.str()}, {"matrix", format_matrix(lim.matrix())}, {"b", bj}}.dump(2) << "\n";
      } else {
        std::cout << v << "\n";
      }
      return 0;
    }

    if (*encode) {
      for (char c : word)
        if (c != 'L' && c != 'R') throw UsageError("LR words use only the letters L and R");
      const WeightPair p = lr_to_weight(word);
      std::cout << (json ? Json{{"lr", word}, {"pair", p.str()}}.dump() : p.str()) << "\n";
      return 0;
    }

    if (*decode) {
      const WeightPair p = parsing([&] { return WeightPair::parse(pair_text); });
      const std::string w = weight_to_lr(p);
      std::cout << (json ? Json{{"pair", p.str()}, {"lr", w}}.dump() : w) << "\n";
      return 0;
    }

    if (*gdet) {
      const bool is_cycle = !cycle.empty();
      const auto marks = parsing([&] { return parse_marks(is_cycle ? cycle : chain); });
      const Rational d = is_cycle ? cycle_det(marks) : chain_det(marks);
      std::cout << (json ? Json{{"det", d.str()}}.dump() : d.str()) << "\n";
      return 0;
    }

    if (*series) {
      const auto counts = series_scan();
      std::size_t total = 0, expected = 0;
      Json all = Json::array();
      if (!json) std::cout << pad("case", 6) << pad("found", 8) << pad("expected", 10) << "by parameters p=0..4\n";
      for (const auto& c : counts) {
        total += c.found;
        expected += c.expected;
        if (json) {
          all.push_back({{"case", c.case_index},
                         {"found", c.found},
                         {"expected", c.expected},
                         {"by_parameters", c.by_parameters},
                         {"match", c.found == c.expected}});
          continue;
        }
        std::cout << pad(std::to_string(c.case_index), 6) << pad(std::to_string(c.found), 8)
                  << pad(std::to_string(c.expected), 10);
        for (auto n : c.by_parameters) std::cout << n << ' ';
        std::cout << (c.found == c.expected ? "" : " mismatch") << "\n";
      }
      if (json) {
        std::cout << Json{{"cases", all}, {"total", total}, {"expected_total", expected}}.dump(2) << "\n";
      } else {
        std::cout << "total " << total << " (expected " << expected << ")\n";
      }
      return 0;
    }

    if (*acc) {
      const auto order_raw = parsing([&] { return parse_ints(order_text); });
      const auto xs = parsing([&] { return parse_ints(x_text); });
      if (xs.size() != 4) throw UsageError("--x needs four values");
      std::vector<int> order(order_raw.begin(), order_raw.end());
      const Rational v = acc_demo(series_id, order, {xs[0], xs[1], xs[2], xs[3]});
      std::cout << (json ? Json{{"series", series_id}, {"value", v.str()}}.dump() : v.str()) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
