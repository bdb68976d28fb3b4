#include "yamabe/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "yamabe/errors.hpp"

namespace yamabe {

namespace pt = boost::property_tree;

namespace {

constexpr const char* kRunSection = "run";
constexpr const char* kAllCatalog = "all-catalog";

const std::set<std::string> kRunKeys = {"grid",   "random", "seed",   "checks",
                                        "tol_exact", "tol_fd", "output", "surfaces"};
const std::set<std::string> kSurfaceKeys = {"kind", "n",      "r",       "center",
                                            "offset", "slope", "profile", "c",
                                            "theta0", "amplitude", "frequency"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Line numbers of sections and keys, for diagnostics on values that parse as
// INI but fail validation.
class LineIndex {
 public:
  explicit LineIndex(const std::string& text) {
    std::istringstream in(text);
    std::string line, section;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      const std::string t = trim(line);
      if (t.empty() || t[0] == ';' || t[0] == '#') continue;
      if (t.front() == '[' && t.back() == ']') {
        section = trim(t.substr(1, t.size() - 2));
        lines_.emplace(section, number);
        continue;
      }
      const auto eq = t.find('=');
      if (eq != std::string::npos) lines_.emplace(section + "." + trim(t.substr(0, eq)), number);
    }
  }
  int section(const std::string& s) const { return find(s); }
  int key(const std::string& s, const std::string& k) const { return find(s + "." + k); }

 private:
  int find(const std::string& k) const {
    const auto it = lines_.find(k);
    return it == lines_.end() ? 0 : it->second;
  }
  std::map<std::string, int> lines_;
};

class Parser {
 public:
  Parser(const std::string& text, std::string source) : index_(text), source_(std::move(source)) {}

  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw ConfigError(source_, line, msg);
  }
  [[noreturn]] void fail_key(const std::string& sec, const std::string& key,
                             const std::string& msg) const {
    fail(index_.key(sec, key), "[" + sec + "] " + key + ": " + msg);
  }

  template <typename T>
  T integer(const std::string& sec, const std::string& key, const std::string& v) const {
    T out{};
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) {
      fail_key(sec, key, "expected an integer, got '" + v + "'");
    }
    return out;
  }

  double real(const std::string& sec, const std::string& key, const std::string& v) const {
    double out = 0.0;
    const char* b = v.data();
    if (!v.empty() && v[0] == '+') ++b;
    const auto [p, ec] = std::from_chars(b, v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out)) {
      fail_key(sec, key, "expected a finite real, got '" + v + "'");
    }
    return out;
  }

  void check_keys(const std::string& sec, const pt::ptree& tree,
                  const std::set<std::string>& allowed) const {
    for (const auto& [key, value] : tree) {
      if (!value.empty()) fail_key(sec, key, "nested keys are not supported");
      if (!allowed.count(key)) fail_key(sec, key, "unknown key");
    }
  }

  void apply_run(const pt::ptree& run, RunConfig& cfg) const {
    const std::string sec = kRunSection;
    check_keys(sec, run, kRunKeys);
    for (const auto& [key, node] : run) {
      const std::string v = node.data();
      if (key == "grid") {
        cfg.grid_resolution = integer<int>(sec, key, v);
        if (cfg.grid_resolution < 2) fail_key(sec, key, "grid resolution must be >= 2");
      } else if (key == "random") {
        cfg.random_count = integer<int>(sec, key, v);
        if (cfg.random_count < 0) fail_key(sec, key, "random count must be >= 0");
      } else if (key == "seed") {
        cfg.seed = integer<std::uint64_t>(sec, key, v);
      } else if (key == "checks") {
        try {
          cfg.checks = parse_check_list(v);
        } catch (const std::invalid_argument& e) {
          fail_key(sec, key, e.what());
        }
      } else if (key == "tol_exact" || key == "tol_fd") {
        const double t = real(sec, key, v);
        if (!(t > 0.0)) fail_key(sec, key, "tolerance must be > 0");
        (key == "tol_exact" ? cfg.tol.exact : cfg.tol.fd) = t;
      } else if (key == "output") {
        cfg.output = v;
      }
    }
  }

  SurfaceSpec surface(const std::string& sec, const pt::ptree& tree) const {
    check_keys(sec, tree, kSurfaceKeys);
    SurfaceSpec spec;
    if (const auto kind = tree.get_optional<std::string>("kind")) {
      const auto k = parse_surface_kind(*kind);
      if (!k) fail_key(sec, "kind", "unknown surface kind '" + *kind + "'");
      spec.kind = *k;
    } else if (const auto base = find_catalog_entry(sec)) {
      spec = *base;
    } else {
      fail(index_.section(sec), "[" + sec + "] missing 'kind'");
    }
    spec.name = sec;
    for (const auto& [key, node] : tree) {
      const std::string v = node.data();
      if (key == "n") spec.n = integer<int>(sec, key, v);
      else if (key == "r") spec.r = real(sec, key, v);
      else if (key == "offset") spec.offset = real(sec, key, v);
      else if (key == "slope") spec.slope = real(sec, key, v);
      else if (key == "c") spec.c = real(sec, key, v);
      else if (key == "theta0") spec.theta0 = real(sec, key, v);
      else if (key == "amplitude") spec.amplitude = real(sec, key, v);
      else if (key == "frequency") spec.frequency = integer<int>(sec, key, v);
      else if (key == "profile") {
        const auto p = parse_profile(v);
        if (!p) fail_key(sec, key, "unknown profile '" + v + "'");
        spec.profile = *p;
      } else if (key == "center") {
        const std::vector<std::string> parts = split_list(v);
        spec.center.resize(static_cast<Eigen::Index>(parts.size()));
        for (std::size_t i = 0; i < parts.size(); ++i) spec.center[i] = real(sec, key, parts[i]);
      }
    }
    try {
      validate(spec);
    } catch (const GeometryError& e) {
      fail(index_.section(sec), e.what());
    }
    return spec;
  }

  RunConfig parse(const std::string& text) const {
    pt::ptree root;
    std::istringstream in(text);
    try {
      pt::read_ini(in, root);
    } catch (const pt::ini_parser_error& e) {
      fail(static_cast<int>(e.line()), e.message());
    }

    RunConfig cfg;
    std::vector<std::string> sections;
    for (const auto& [name, node] : root) {
      if (node.empty() && !node.data().empty()) {
        fail(index_.key("", name), "key '" + name + "' outside a section");
      }
      if (name == kRunSection) {
        apply_run(node, cfg);
      } else {
        sections.push_back(name);
      }
    }

    std::vector<std::string> selection;
    if (const auto list = root.get_child_optional(std::string(kRunSection) + ".surfaces")) {
      selection = split_list(list->data());
      if (selection.empty()) fail_key(kRunSection, "surfaces", "empty surface list");
    } else {
      selection = sections;
    }
    if (selection.empty()) fail(0, "no surfaces selected");

    std::set<std::string> used;
    auto add = [&](const SurfaceSpec& s) {
      if (!used.insert(s.name).second) {
        fail_key(kRunSection, "surfaces", "surface '" + s.name + "' selected twice");
      }
      cfg.surfaces.push_back(s);
    };
    for (const std::string& token : selection) {
      if (token == kAllCatalog) {
        for (const SurfaceSpec& s : catalog()) add(s);
      } else if (std::find(sections.begin(), sections.end(), token) != sections.end()) {
        add(surface(token, root.get_child(token)));
      } else if (const auto entry = find_catalog_entry(token)) {
        add(*entry);
      } else {
        fail_key(kRunSection, "surfaces",
                 "unknown surface '" + token + "' (neither a section nor a catalog entry)");
      }
    }
    // Sections not selected are still validated so typos do not go unnoticed.
    for (const std::string& sec : sections)
      if (!used.count(sec)) surface(sec, root.get_child(sec));
    return cfg;
  }

 private:
  LineIndex index_;
  std::string source_;
};

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) +
                         ": " + message),
      line_(line) {}

const char* to_string(Check c) {
  switch (c) {
    case Check::kIdentities: return "identities";
    case Check::kYamabe: return "yamabe";
    case Check::kQuasiYamabe: return "quasi_yamabe";
    case Check::kClassify: return "classify";
    case Check::kTorse: return "torse";
    case Check::kWeyl: return "weyl";
  }
  return "?";
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> v = {Check::kIdentities, Check::kYamabe, Check::kQuasiYamabe,
                                       Check::kClassify,   Check::kTorse,  Check::kWeyl};
  return v;
}

std::vector<Check> parse_check_list(const std::string& text) {
  std::set<Check> chosen;
  for (const std::string& token : split_list(text)) {
    if (token == "none") continue;
    if (token == "all") {
      chosen.insert(all_checks().begin(), all_checks().end());
      continue;
    }
    const auto it = std::find_if(all_checks().begin(), all_checks().end(),
                                 [&](Check c) { return token == to_string(c); });
    if (it == all_checks().end()) throw std::invalid_argument("unknown check '" + token + "'");
    chosen.insert(*it);
  }
  std::vector<Check> out;
  for (Check c : all_checks())
    if (chosen.count(c)) out.push_back(c);
  return out;
}

RunConfig parse_config(const std::string& text, const std::string& source) {
  return Parser(text, source).parse(text);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

}  // namespace yamabe
