#include "fourlines/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fourlines {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <class T>
std::string join(const T& items, const char* sep) {
  std::string out;
  for (const auto& x : items) {
    if (!out.empty()) out += sep;
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
      out += x.str();
    } else {
      out += std::to_string(x);
    }
  }
  return out;
}

Json opt(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }

Json rationals(const std::array<Rational, 4>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

}  // namespace

IntMatrix4 parse_matrix(std::string_view text) {
  const auto rows = split(trim(text), ';');
  if (rows.size() != 4) {
    throw std::invalid_argument("expected 4 rows separated by ';', got " + std::to_string(rows.size()));
  }
  IntMatrix4 m{};
  for (std::size_t r = 0; r < 4; ++r) {
    const auto entries = split(rows[r], ',');
    const std::string name = "row " + std::to_string(r + 1);
    if (entries.size() != 4) throw std::invalid_argument(name + " needs 4 entries");
    for (std::size_t c = 0; c < 4; ++c) {
      const auto e = trim(entries[c]);
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), v);
      if (ec != std::errc() || ptr != e.data() + e.size() || e.empty()) {
        throw std::invalid_argument(name + " has a bad entry '" + std::string(e) + "'");
      }
      m[r][c] = v;
    }
  }
  return m;
}

std::string format_matrix(const IntMatrix4& m) {
  std::string out;
  for (std::size_t r = 0; r < 4; ++r) {
    if (r) out += ';';
    out += join(m[r], ",");
  }
  return out;
}

std::array<Rational, 4> parse_coefficients(std::string_view text) {
  const auto parts = split(trim(text), ',');
  if (parts.size() != 4) throw std::invalid_argument("expected 4 coefficients b1,b2,b3,b4");
  std::array<Rational, 4> b;
  for (std::size_t k = 0; k < 4; ++k) b[k] = Rational::parse(trim(parts[k]));
  return b;
}

SurfaceConfig parse_config(std::string_view matrix, std::string_view b) {
  return SurfaceConfig::from_matrix(parse_matrix(matrix), parse_coefficients(b));
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["matrix"] = format_matrix(r.matrix);
  j["b"] = rationals(r.coefficients);
  j["det_w"] = opt(r.det_w);
  j["cofactors"] = r.cofactors ? rationals(*r.cofactors) : Json(nullptr);
  j["det_w_hat"] = opt(r.det_w_hat);
  j["delta"] = opt(r.delta);
  Json comps = Json::array();
  for (const auto& c : r.delta_components) {
    Json marks = Json::array();
    for (const auto& m : c.marks) marks.push_back(m.str());
    comps.push_back({{"marks", marks},
                     {"curves", c.labels},
                     {"det", c.det.str()},
                     {"positive_definite", c.positive_definite}});
  }
  j["delta_components"] = comps;
  j["volume"] = opt(r.volume);
  j["ample_sign"] = r.ample_sign ? Json(to_string(*r.ample_sign)) : Json(nullptr);
  j["lc_class"] = r.lc_class ? Json(to_string(*r.lc_class)) : Json(nullptr);
  Json cod = Json::object();
  for (const auto& [label, beta] : r.codiscrepancies) cod[label] = beta.str();
  j["codiscrepancies"] = cod;
  j["survivor_degrees"] = r.survivor_degrees ? rationals(*r.survivor_degrees) : Json(nullptr);
  j["h_square"] = opt(r.h_square);
  Json diags = Json::array();
  for (const auto& d : r.diagnostics) diags.push_back({{"code", d.code}, {"message", d.message}});
  j["diagnostics"] = diags;
  return j;
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  auto line = [&](const char* key, const std::string& value) {
    os << key << std::string(18 - std::string(key).size(), ' ') << value << '\n';
  };
  auto show = [](const std::optional<Rational>& x) { return x ? x->str() : std::string("-"); };
  line("matrix", format_matrix(r.matrix));
  line("b", join(r.coefficients, ","));
  line("det_w", show(r.det_w));
  line("cofactors", r.cofactors ? join(*r.cofactors, ",") : "-");
  line("det_w_hat", show(r.det_w_hat));
  std::string comps;
  for (const auto& c : r.delta_components) {
    if (!comps.empty()) comps += " * ";
    comps += c.det.str();
  }
  line("delta", show(r.delta) + (r.delta_components.empty() ? "" : "  (" + comps + ")"));
  line("volume", show(r.volume));
  line("ample_sign", r.ample_sign ? to_string(*r.ample_sign) : "-");
  line("lc_class", r.lc_class ? to_string(*r.lc_class) : "-");
  line("survivor_degrees", r.survivor_degrees ? join(*r.survivor_degrees, ",") : "-");
  line("h_square", show(r.h_square));
  for (const auto& c : r.delta_components) {
    os << "component det " << c.det.str() << (c.positive_definite ? "" : " (not definite)") << ":";
    for (std::size_t k = 0; k < c.marks.size(); ++k) os << ' ' << c.labels[k] << '[' << c.marks[k].str() << ']';
    os << '\n';
  }
  for (const auto& [label, beta] : r.codiscrepancies) os << "beta " << label << " = " << beta.str() << '\n';
  for (const auto& d : r.diagnostics) os << "diagnostic " << d.code << ": " << d.message << '\n';
  return os.str();
}

}  // namespace fourlines
