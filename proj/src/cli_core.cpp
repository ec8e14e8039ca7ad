#include "largeset/cli_core.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "largeset/examples_analysis.hpp"
#include "largeset/verify.hpp"

namespace largeset {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int64_t to_i64(const std::string& v, const std::string& key) {
  try {
    size_t pos = 0;
    int64_t x = std::stoll(v, &pos);
    if (pos != v.size()) throw config_error("");
    return x;
  } catch (...) {
    throw config_error("value for '" + key + "' is not an integer: '" + v + "'");
  }
}

void apply_key(ExperimentConfig& c, const std::string& key, const std::string& value,
               int line) {
  auto where = [&](const std::string& msg) {
    return config_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg);
  };
  if (key == "construction") {
    c.construction = value;
  } else if (key.rfind("param.", 0) == 0) {
    c.construction_params[key.substr(6)] = value;
  } else if (key == "window") {
    c.window = Window::parse(value);
  } else if (key == "ops") {
    c.ops.clear();
    for (const std::string& op : split(value, ','))
      if (!trim(op).empty()) c.ops.push_back(trim(op));
  } else if (key == "k") {
    c.k = static_cast<int>(to_i64(value, key));
  } else if (key == "n") {
    c.n = static_cast<int>(to_i64(value, key));
  } else if (key == "kmax") {
    c.kmax = static_cast<int>(to_i64(value, key));
  } else if (key == "pad") {
    c.pad = static_cast<int>(to_i64(value, key));
  } else if (key == "side") {
    if (value == "left")
      c.side = Side::left;
    else if (value == "right")
      c.side = Side::right;
    else
      throw where("side must be left or right");
  } else if (key == "dlist") {
    c.dlist.clear();
    for (const std::string& d : split(value, ',')) c.dlist.push_back(to_i64(trim(d), key));
  } else if (key == "probe_max") {
    c.probe_max = static_cast<int>(to_i64(value, key));
  } else if (key == "threshold") {
    c.threshold = std::stod(value);
  } else if (key == "length") {
    c.length = static_cast<int>(to_i64(value, key));
  } else if (key == "seed") {
    c.seed = static_cast<uint64_t>(to_i64(value, key));
  } else if (key == "budget") {
    c.budget = static_cast<uint64_t>(to_i64(value, key));
  } else if (key == "format") {
    if (value != "json" && value != "csv") throw where("format must be json or csv");
    c.format = value;
  } else if (key == "out") {
    c.out_dir = value;
  } else {
    throw where("unknown key '" + key + "'");
  }
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_text(const std::string& text) {
  ExperimentConfig c;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw config_error("line " + std::to_string(lineno) + ": expected key = value");
    apply_key(c, trim(t.substr(0, eq)), trim(t.substr(eq + 1)), lineno);
  }
  if (c.construction.empty())
    throw config_error("config is missing the 'construction' key");
  return c;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "param") {
      for (auto pit = it->begin(); pit != it->end(); ++pit)
        c.construction_params[pit.key()] = pit->is_string()
                                               ? pit->get<std::string>()
                                               : pit->dump();
      continue;
    }
    if (key == "ops" && it->is_array()) {
      c.ops.clear();
      for (const auto& op : *it) c.ops.push_back(op.get<std::string>());
      continue;
    }
    if (key == "dlist" && it->is_array()) {
      c.dlist.clear();
      for (const auto& d : *it) c.dlist.push_back(d.get<int64_t>());
      continue;
    }
    std::string value = it->is_string() ? it->get<std::string>() : it->dump();
    apply_key(c, key, value, -1);
  }
  if (c.construction.empty())
    throw config_error("config is missing the 'construction' key");
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in.good()) throw config_error("cannot read config file " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return from_json(nlohmann::json::parse(text));
  return parse_text(text);
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["construction"] = construction;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k2, v] : construction_params) params[k2] = v;
  j["param"] = params;
  if (window) j["window"] = window->str();
  j["ops"] = ops;
  j["k"] = k;
  j["n"] = n;
  j["kmax"] = kmax;
  j["pad"] = pad;
  j["side"] = side == Side::left ? "left" : "right";
  j["dlist"] = dlist;
  j["probe_max"] = probe_max;
  j["threshold"] = threshold;
  j["length"] = length;
  j["seed"] = seed;
  j["budget"] = budget;
  // format and out_dir are delivery knobs, not experiment content; the
  // echoed config stays identical across output locations
  return j;
}

namespace {

LargenessReport density_as_report(const DensityReport& d, const Window& w) {
  LargenessReport r;
  r.predicate = "banach_density";
  r.set_name = d.set_name;
  r.window = w;
  r.value = d.hits;
  r.holds = d.hits > 0;
  r.witness = FiniteSet::of({Element::integer(d.best_start)});
  r.exactness = Exactness::exact_on_window;
  r.notes.push_back("best interval density " + std::to_string(d.density) + " at length " +
                    std::to_string(d.window_len));
  r.extra = d.to_json();
  return r;
}

}  // namespace

EvalResult run_eval(const ExperimentConfig& config, bool with_timestamp) {
  if (config.ops.empty()) throw config_error("config is missing the 'ops' key");
  EvalResult out;
  SetSpec A = build_catalog_set(config.construction, config.construction_params);
  Window w = config.window.value_or(A.window);
  SolveOptions opt;
  opt.node_budget = config.budget;
  ProbeFamily probes = default_probe_family(A.ctx, w, config.probe_max);
  for (const std::string& op_name : config.ops) {
    if (op_name == "fatness") {
      out.reports.push_back(fatness(A, w, opt));
    } else if (op_name == "kappa_fat") {
      out.reports.push_back(kappa_fat_check(A, w, config.k, opt));
    } else if (op_name == "fat_ramsey") {
      out.reports.push_back(fat_ramsey_m(A, w, config.n, opt));
    } else if (op_name == "syndeticity_index") {
      out.reports.push_back(syndeticity_index(A, w, config.pad, config.kmax, opt));
    } else if (op_name == "thickness_index") {
      out.reports.push_back(thickness_index(A, w, config.kmax, probes, opt));
    } else if (op_name == "piecewise_syndetic") {
      out.reports.push_back(is_piecewise_syndetic(A, w, config.kmax, probes, opt));
    } else if (op_name == "delta_star") {
      out.reports.push_back(is_delta_star_k(A, w, config.k, config.side, opt));
    } else if (op_name == "ip_star") {
      out.reports.push_back(is_ip_star(A, w, config.n, opt));
    } else if (op_name == "three_fat_cover") {
      out.reports.push_back(check_3fat_cover(A, w, opt));
    } else if (op_name == "duality") {
      out.reports.push_back(duality_check(A, w, config.pad, config.kmax, probes, opt));
    } else if (op_name == "thick_on_window") {
      out.reports.push_back(thick_on_window(A, w, probes, opt));
    } else if (op_name == "banach_density") {
      out.reports.push_back(density_as_report(banach_density_estimate(A, w, config.dlist), w));
    } else if (op_name == "delta_representation") {
      DeltaRepresentation d =
          thick_delta_representation(A, w, config.length, probes, opt);
      LargenessReport r;
      r.predicate = "delta_representation";
      r.set_name = A.name;
      r.window = w;
      r.value = static_cast<int64_t>(d.sequence.size());
      r.holds = d.coverage >= config.threshold;
      r.witness = FiniteSet::of(d.sequence);
      r.notes.push_back("coverage " + std::to_string(d.coverage) + " against threshold " +
                        std::to_string(config.threshold));
      r.extra = d.to_json();
      out.reports.push_back(std::move(r));
    } else if (op_name == "subgroup_search") {
      auto h = subgroup_in_thick(A, w, static_cast<size_t>(config.length), opt);
      LargenessReport r;
      r.predicate = "subgroup_search";
      r.set_name = A.name;
      r.window = w;
      r.holds = h.has_value();
      if (h) {
        r.value = static_cast<int64_t>(h->size());
        r.witness = *h;
      } else {
        r.counterexample = FiniteSet();
        r.notes.push_back("no subgroup of the requested size found by greedy extension");
      }
      out.reports.push_back(std::move(r));
    } else if (op_name == "cube_search") {
      CubeSearchReport c = cube_noncontainment_search({A}, w, config.pad, config.kmax, opt);
      LargenessReport r;
      r.predicate = "cube_search";
      r.set_name = A.name;
      r.window = w;
      const CubeCandidateReport& cand = c.candidates.at(0);
      r.holds = cand.violation.has_value();
      if (cand.violation)
        r.witness = FiniteSet::of({cand.violation->first, cand.violation->second});
      else
        r.counterexample = FiniteSet();
      r.notes.push_back(cand.violation
                            ? "pair with a cube-difference sum found"
                            : "no violation found on window (evidence, not proof)");
      r.extra = c.to_json();
      out.reports.push_back(std::move(r));
    } else if (op_name == "sarkozy") {
      FiniteSet sample = enumerate_set(A, w, opt.cap());
      auto wit = sarkozy_witness(sample);
      LargenessReport r;
      r.predicate = "sarkozy";
      r.set_name = A.name;
      r.window = w;
      r.holds = wit.has_value();
      if (wit) {
        r.witness = FiniteSet::of({Element::integer(wit->x), Element::integer(wit->y)});
        r.value = wit->z;
        r.notes.push_back(std::to_string(wit->x) + " - " + std::to_string(wit->y) + " = " +
                          std::to_string(wit->z) + "^3");
      } else {
        r.counterexample = FiniteSet();
      }
      out.reports.push_back(std::move(r));
    } else {
      throw config_error("unknown op '" + op_name + "'");
    }
  }
  nlohmann::json doc;
  doc["config"] = config.to_json();
  doc["seed"] = config.seed;
  if (with_timestamp) {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    doc["timestamp"] = buf;
  }
  nlohmann::json reports = nlohmann::json::array();
  for (const LargenessReport& r : out.reports) reports.push_back(report_to_json(r));
  doc["reports"] = reports;
  out.report = doc;
  for (const LargenessReport& r : out.reports)
    if (!r.decided) out.exit_code = 2;
  return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out.good()) throw error("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

EvalResult cmd_eval(const ExperimentConfig& config) {
  EvalResult res = run_eval(config);
  std::filesystem::path dir(config.out_dir);
  atomic_write(dir / "report.json", res.report.dump(2) + "\n");
  std::ostringstream csv;
  csv << report_csv_header() << '\n';
  for (const LargenessReport& r : res.reports) csv << report_to_csv_row(r) << '\n';
  atomic_write(dir / "report.csv", csv.str());
  return res;
}

std::string cmd_catalog(const std::string& family_filter, const std::string& format) {
  std::vector<CatalogEntry> entries;
  for (const CatalogEntry& e : catalog_entries()) {
    if (!family_filter.empty() && e.family != family_filter && e.family != "any") continue;
    entries.push_back(e);
  }
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const CatalogEntry& e : entries)
      arr.push_back({{"name", e.name},
                     {"family", e.family},
                     {"params", e.params},
                     {"description", e.description}});
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const CatalogEntry& e : entries) {
    os << e.name << "  [" << e.family << "]\n";
    os << "  params: " << e.params << '\n';
    os << "  " << e.description << '\n';
  }
  return os.str();
}

int cmd_verify(const std::string& suite, uint64_t seed, std::ostream& out) {
  SuiteResult res = run_suite(suite, seed);
  for (const CheckResult& c : res.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << res.suite << ": " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  out << (res.all_pass() ? "OK" : "FAILED") << ": suite " << res.suite << ", "
      << res.checks.size() << " checks\n";
  return res.all_pass() ? 0 : 1;
}

std::filesystem::path cmd_export_graph(const ExperimentConfig& config) {
  SetSpec A = build_catalog_set(config.construction, config.construction_params);
  Window w = config.window.value_or(A.window);
  QuotientGraph qg = QuotientGraph::build(A, w);
  std::vector<std::string> comments;
  comments.push_back("construction: " + A.provenance);
  comments.push_back("window: " + w.str());
  comments.push_back("edge {x,y} iff x^-1 y and y^-1 x lie in the set");
  if (!A.membership(Element::identity(A.ctx)))
    comments.push_back("warning: identity not in set; the set is not fat");
  for (size_t i = 0; i < qg.vertices.size(); ++i)
    comments.push_back("vertex " + std::to_string(i + 1) + " = " + qg.vertices[i].str());
  std::filesystem::path path = std::filesystem::path(config.out_dir) / "graph.dimacs";
  atomic_write(path, qg.to_dimacs(comments));
  return path;
}

}  // namespace largeset
