// polyproj command-line front end. Talks to the shared library exclusively
// through the C interface in polyproj.h.

#include <polyproj.h>

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_vector(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt17(v[i]);
  }
  return s + "]";
}

void check(pp_status status, const std::string& context) {
  if (status != PP_OK) {
    throw UsageError(context + ": " + pp_status_name(status) + " (" +
                     pp_last_error() + ")");
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POLYPROJ_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    throw UsageError("POLYPROJ_SEED is not a valid integer");
  }
  return 0;
}

std::vector<double> read_numbers_line(const std::string& text) {
  std::vector<double> out;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    std::stringstream ts(token);
    double v;
    while (ts >> v) out.push_back(v);
  }
  return out;
}

// Direction grammar: e<k>, "random", inline comma list, @file (whitespace or
// comma separated coordinates).
std::vector<double> parse_direction(const std::string& spec, int m,
                                    bool zero_sum, std::uint64_t seed) {
  std::vector<double> x;
  if (spec == "random") {
    x.resize(m);
    check(pp_sample_direction(m, zero_sum ? 1 : 0, seed, x.data()),
          "sampling direction");
    return x;
  }
  if (spec.size() >= 2 && spec[0] == 'e' &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int k = std::atoi(spec.c_str() + 1);
    if (k < 1 || k > m) throw UsageError("basis index out of range: " + spec);
    x.assign(m, 0.0);
    x[k - 1] = 1.0;
    return x;
  }
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw UsageError("cannot open file: " + spec.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    x = read_numbers_line(buf.str());
  } else {
    x = read_numbers_line(spec);
  }
  if (static_cast<int>(x.size()) != m) {
    throw UsageError("expected " + std::to_string(m) + " coordinates, got " +
                     std::to_string(x.size()));
  }
  return x;
}

struct ParsedPair {
  std::vector<double> u, v;
};

// Pair grammar: "trig", "random", "e<i>,e<j>", "u1,..,un;v1,..,vn", @file
// with two lines.
ParsedPair parse_pair(const std::string& spec, int n, std::uint64_t seed) {
  ParsedPair p;
  p.u.resize(n);
  p.v.resize(n);
  if (spec == "trig") {
    check(pp_trig_pair(n, p.u.data(), p.v.data()), "trig pair");
    return p;
  }
  if (spec == "random") {
    check(pp_sample_orthopair(n, seed, p.u.data(), p.v.data()), "sampling pair");
    return p;
  }
  std::string first = spec, second;
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw UsageError("cannot open file: " + spec.substr(1));
    if (!std::getline(in, first) || !std::getline(in, second))
      throw UsageError("pair file needs two lines");
  } else if (const auto semi = spec.find(';'); semi != std::string::npos) {
    first = spec.substr(0, semi);
    second = spec.substr(semi + 1);
  } else {
    // two e<k> literals
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
      throw UsageError("pair needs two vectors: " + spec);
    const std::string a = spec.substr(0, comma), b = spec.substr(comma + 1);
    if (a.size() < 2 || a[0] != 'e' || b.size() < 2 || b[0] != 'e')
      throw UsageError("inline numeric pairs use ';' between the vectors");
    const int i = std::atoi(a.c_str() + 1), j = std::atoi(b.c_str() + 1);
    if (i < 1 || i > n || j < 1 || j > n || i == j)
      throw UsageError("bad basis pair: " + spec);
    p.u.assign(n, 0.0);
    p.v.assign(n, 0.0);
    p.u[i - 1] = 1.0;
    p.v[j - 1] = 1.0;
    return p;
  }
  const std::vector<double> x = read_numbers_line(first);
  const std::vector<double> y = read_numbers_line(second);
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw UsageError("pair vectors must have length " + std::to_string(n));
  check(pp_orthonormal_pair(x.data(), y.data(), n, p.u.data(), p.v.data()),
        "orthonormalizing pair");
  return p;
}

struct Output {
  std::string format = "table";  // table | json | csv
  std::string out_path;
  std::uint64_t seed = 0;

  void emit(const json& machine, const std::string& table) const {
    std::string text;
    if (format == "json") {
      text = machine.dump(2) + "\n";
    } else if (format == "csv") {
      text = to_csv(machine);
    } else {
      text = table;
    }
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw UsageError("cannot write " + out_path);
      f << (format == "table" ? machine.dump(2) + "\n" : text);
    }
  }

  static std::string to_csv(const json& machine) {
    std::string text = "key,value\n";
    for (const auto& [key, value] : machine.items()) {
      if (value.is_number_float())
        text += key + "," + fmt17(value.get<double>()) + "\n";
      else
        text += key + "," + value.dump() + "\n";
    }
    return text;
  }
};

double normalized_notice(std::vector<double>& x) {
  double nn = 0.0;
  for (double c : x) nn += c * c;
  const double norm = std::sqrt(nn);
  if (std::abs(norm - 1.0) > 1e-12)
    std::cerr << "note: input direction normalized (|x| = " << fmt17(norm)
              << ")\n";
  return norm;
}

// ---- volume ---------------------------------------------------------------

struct VolumeArgs {
  std::string body;
  int n = 3;
  std::string direction, pair;
  bool planar = false;
  bool zero_sum = false;
  bool oracle = false;
  long long samples = 200000;
};

int cmd_volume(const VolumeArgs& a, const Output& out) {
  const bool simplex = a.body == "simplex";
  const int len = simplex ? a.n + 1 : a.n;
  json machine{{"command", "volume"}, {"body", a.body}, {"n", a.n},
               {"seed", out.seed}};
  std::ostringstream table;
  table << "seed: " << out.seed << "\n";

  if (a.planar) {
    if (a.pair.empty()) throw UsageError("--planar needs --pair");
    const ParsedPair pair = parse_pair(a.pair, len, out.seed);
    double value = 0.0;
    if (a.body == "cube") {
      check(pp_cube_planar_shadow(pair.u.data(), pair.v.data(), len, &value),
            "planar shadow");
    } else {
      // no closed form in this library; the exact hull oracle is the value
      check(pp_oracle_planar_shadow(a.body.c_str(), pair.u.data(), pair.v.data(),
                                    len, &value),
            "planar shadow oracle");
      table << "note: " << a.body << " planar shadow computed by hull oracle\n";
    }
    machine["kind"] = "planar";
    machine["u"] = pair.u;
    machine["v"] = pair.v;
    machine["value"] = value;
    table << "planar shadow of " << a.body << " (n = " << a.n
          << "): " << fmt17(value) << "\n";
    if (a.oracle && a.body == "cube") {
      double oracle = 0.0;
      check(pp_oracle_planar_shadow("cube", pair.u.data(), pair.v.data(), len,
                                    &oracle),
            "planar oracle");
      machine["oracle_value"] = oracle;
      machine["difference"] = value - oracle;
      table << "hull oracle: " << fmt17(oracle)
            << "  (difference " << fmt17(value - oracle) << ")\n";
    }
    out.emit(machine, table.str());
    return 0;
  }

  if (a.direction.empty()) throw UsageError("hyperplane shadow needs --direction");
  std::vector<double> x =
      parse_direction(a.direction, len, simplex || a.zero_sum, out.seed);
  normalized_notice(x);
  std::vector<double> dir(len);
  if (a.zero_sum) {
    check(pp_project_zero_sum(x.data(), len, dir.data()), "zero-sum projection");
    std::cerr << "note: direction projected onto the zero-sum sphere\n";
  } else {
    check(pp_normalize(x.data(), len, dir.data(), nullptr), "normalizing");
  }

  double value = 0.0;
  if (a.body == "simplex") {
    check(pp_simplex_hyperplane_shadow(dir.data(), len, 0, &value),
          "simplex shadow (use --zero-sum to project the direction)");
  } else if (a.body == "cube") {
    check(pp_cube_hyperplane_shadow(dir.data(), len, &value), "cube shadow");
  } else if (a.body == "cross") {
    check(pp_cross_hyperplane_shadow(dir.data(), len, &value), "cross shadow");
  } else {
    throw UsageError("unknown body: " + a.body);
  }
  machine["kind"] = "hyperplane";
  machine["direction"] = dir;
  machine["value"] = value;
  table << "direction: " << fmt_vector(dir) << "\n";
  table << "hyperplane shadow of " << a.body << " (n = " << a.n
        << "): " << fmt17(value) << "\n";

  if (a.oracle) {
    double oracle = 0.0, stderr_v = 0.0;
    check(pp_oracle_hyperplane_shadow(a.body.c_str(), dir.data(), len, a.samples,
                                      out.seed, &oracle, &stderr_v),
          "shadow oracle");
    machine["oracle_value"] = oracle;
    machine["oracle_stderr"] = stderr_v;
    machine["difference"] = value - oracle;
    table << "oracle: " << fmt17(oracle);
    if (stderr_v > 0.0) table << "  (stderr " << fmt17(stderr_v) << ")";
    table << "  difference " << fmt17(value - oracle) << "\n";
  }
  out.emit(machine, table.str());
  return 0;
}

// ---- extremal -------------------------------------------------------------

struct ExtremalArgs {
  std::string problem;
  int n = 3;
  int m = 0;
  double p = 3.0;
  bool numeric = false;
  int restarts = 200;
};

int cmd_extremal(const ExtremalArgs& a, const Output& out) {
  json machine{{"command", "extremal"}, {"problem", a.problem}, {"seed", out.seed}};
  std::ostringstream table;
  table << "seed: " << out.seed << "\n";

  auto emit_pairline = [&](const char* kind, double value,
                           const std::vector<double>& arg) {
    table << kind << ": " << fmt17(value);
    if (!arg.empty()) table << "  at " << fmt_vector(arg);
    table << "\n";
  };

  if (a.problem == "simplex-proj" || a.problem == "simplex-width") {
    const int len = a.n + 1;
    std::vector<double> argmin(len), argmax(len);
    double lo = 0.0, hi = 0.0;
    if (a.problem == "simplex-proj") {
      check(pp_simplex_extremal_volumes(a.n, &lo, &hi, argmin.data(), argmax.data()),
            "extremal volumes");
    } else {
      check(pp_simplex_extremal_widths(a.n, &lo, &hi, argmin.data(), argmax.data()),
            "extremal widths");
    }
    machine["n"] = a.n;
    machine["min"] = {{"value", lo}, {"argument", argmin}};
    machine["max"] = {{"value", hi}, {"argument", argmax}};
    emit_pairline("min", lo, argmin);
    emit_pairline("max", hi, argmax);
    if (a.numeric && a.problem == "simplex-proj") {
      // search the l1 objective on the zero-sum sphere, then push the
      // argmin/argmax through the shadow formula
      for (const bool maximize : {false, true}) {
        double l1 = 0.0;
        std::vector<double> arg(len);
        check(pp_numeric_search("l1", 0.0, len, "zero-sum", maximize ? 1 : 0,
                                a.restarts, out.seed, &l1, arg.data()),
              "numeric search");
        double shadow = 0.0;
        check(pp_simplex_hyperplane_shadow(arg.data(), len, 1, &shadow),
              "shadow at numeric argument");
        const double target = maximize ? hi : lo;
        const char* key = maximize ? "numeric_max" : "numeric_min";
        machine[key] = {{"value", shadow}, {"gap", shadow - target}};
        table << key << ": " << fmt17(shadow) << "  gap "
              << fmt17(shadow - target) << "\n";
      }
    }
  } else if (a.problem == "cube-planar") {
    std::vector<double> u(a.n), v(a.n);
    double lo = 0.0, hi = 0.0;
    check(pp_planar_cube_bounds(a.n, &lo, &hi, u.data(), v.data()),
          "planar bounds");
    machine["n"] = a.n;
    machine["min"] = {{"value", lo}};
    machine["max"] = {{"value", hi}, {"u", u}, {"v", v}};
    emit_pairline("min", lo, {});
    emit_pairline("max", hi, {});
    table << "max attained at the trig pair (u, v above in JSON output)\n";
    if (a.numeric) {
      for (const bool maximize : {false, true}) {
        double value = 0.0;
        check(pp_numeric_search("minor-sum", 0.0, a.n, "pair", maximize ? 1 : 0,
                                a.restarts, out.seed, &value, nullptr),
              "numeric search");
        const double target = maximize ? hi : lo;
        const char* key = maximize ? "numeric_max" : "numeric_min";
        machine[key] = {{"value", value}, {"gap", value - target}};
        table << key << ": " << fmt17(value) << "  gap "
              << fmt17(value - target) << "\n";
      }
    }
  } else if (a.problem == "fp") {
    const int m = a.m > 0 ? a.m : a.n;
    double lo = 0.0, hi = 0.0;
    check(pp_fp_extrema(m, a.p, &lo, &hi), "fp extrema");
    machine["m"] = m;
    machine["p"] = a.p;
    machine["min"] = {{"value", lo}};
    machine["max"] = {{"value", hi}};
    emit_pairline("min", lo, {});
    emit_pairline("max", hi, {});
    if (a.numeric) {
      for (const bool maximize : {false, true}) {
        double value = 0.0;
        check(pp_numeric_search("fp", a.p, m, "sphere", maximize ? 1 : 0,
                                a.restarts, out.seed, &value, nullptr),
              "numeric search");
        const double target = maximize ? hi : lo;
        const char* key = maximize ? "numeric_max" : "numeric_min";
        machine[key] = {{"value", value}, {"gap", value - target}};
        table << key << ": " << fmt17(value) << "  gap "
              << fmt17(value - target) << "\n";
      }
    }
  } else {
    throw UsageError("unknown problem: " + a.problem);
  }
  out.emit(machine, table.str());
  return 0;
}

// ---- lp -------------------------------------------------------------------

struct LpArgs {
  std::string body;
  int n = 3;
  double p = 1.0;
  std::string direction;
  std::string mode = "exact";
  long long samples = 100000;
};

int cmd_lp(const LpArgs& a, const Output& out) {
  const bool simplex = a.body == "simplex";
  const int len = simplex ? a.n + 1 : a.n;
  std::vector<double> x = parse_direction(a.direction, len, simplex, out.seed);
  normalized_notice(x);
  std::vector<double> dir(len);
  check(pp_normalize(x.data(), len, dir.data(), nullptr), "normalizing");

  double value = 0.0, stderr_v = 0.0;
  if (a.body == "cube") {
    check(pp_lp_cube_support(dir.data(), len, a.p, &value), "lp cube support");
  } else if (a.body == "simplex") {
    check(pp_lp_simplex_support(dir.data(), len, a.p, &value),
          "lp simplex support (direction must be zero-sum)");
  } else if (a.body == "cross") {
    if (a.mode == "exact") {
      check(pp_lp_cross_support_exact(dir.data(), len, a.p, &value),
            "lp cross support");
    } else if (a.mode == "mc") {
      check(pp_lp_cross_support_mc(dir.data(), len, a.p, a.samples, out.seed,
                                   &value, &stderr_v),
            "lp cross support (mc)");
    } else {
      throw UsageError("--mode must be exact or mc");
    }
  } else {
    throw UsageError("unknown body: " + a.body);
  }

  json machine{{"command", "lp"},     {"body", a.body}, {"n", a.n},
               {"p", a.p},            {"seed", out.seed}, {"direction", dir},
               {"support_power", value}};
  std::ostringstream table;
  table << "seed: " << out.seed << "\n";
  table << "direction: " << fmt_vector(dir) << "\n";
  table << "h^p of the L_p projection body (" << a.body << ", p = " << a.p
        << "): " << fmt17(value) << "\n";
  if (a.body == "cross" && a.mode == "mc") {
    machine["stderr"] = stderr_v;
    machine["samples"] = a.samples;
    table << "mc stderr: " << fmt17(stderr_v) << "  (samples " << a.samples
          << ")\n";
  }
  const double h = std::pow(value, 1.0 / a.p);
  machine["support"] = h;
  table << "h = (h^p)^{1/p}: " << fmt17(h) << "\n";
  out.emit(machine, table.str());
  return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string n_range;
  int trials = 0;
  long long samples = 0;
};

int cmd_verify(const VerifyArgs& a, const Output& out) {
  int n_lo = 0, n_hi = 0;
  if (!a.n_range.empty()) {
    const auto dots = a.n_range.find("..");
    if (dots == std::string::npos) {
      n_lo = n_hi = std::atoi(a.n_range.c_str());
    } else {
      n_lo = std::atoi(a.n_range.substr(0, dots).c_str());
      n_hi = std::atoi(a.n_range.substr(dots + 2).c_str());
    }
    if (n_lo < 2 || n_hi < n_lo) throw UsageError("bad --n range: " + a.n_range);
  }

  const auto t0 = std::chrono::steady_clock::now();
  pp_report* report = nullptr;
  check(pp_verify(a.suite.c_str(), n_lo, n_hi, a.trials, a.samples, out.seed,
                  &report),
        "verify");
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "elapsed_s: " << elapsed << "\n";

  char* json_text = nullptr;
  check(pp_report_to_json(report, &json_text), "serializing report");
  const json machine = json::parse(json_text);
  pp_string_free(json_text);
  const bool passed = pp_report_passed(report) != 0;
  const int total = pp_report_case_count(report);
  const int pass_count = pp_report_pass_count(report);
  pp_report_free(report);

  std::ostringstream table;
  table << "suite: " << a.suite << "\n";
  table << "seed: " << out.seed << "\n";
  // per-suite pass counts
  std::vector<std::pair<std::string, std::pair<int, int>>> groups;
  for (const auto& c : machine.at("cases")) {
    const std::string s = c.at("inputs").contains("suite")
                              ? c.at("inputs").at("suite").get<std::string>()
                              : a.suite;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == s; });
    if (it == groups.end()) it = groups.insert(groups.end(), {s, {0, 0}});
    it->second.second += 1;
    if (c.at("pass").get<bool>()) it->second.first += 1;
  }
  for (const auto& [name, counts] : groups)
    table << "  " << name << ": " << counts.first << "/" << counts.second
          << " passed\n";
  int shown = 0;
  for (const auto& c : machine.at("cases")) {
    if (c.at("pass").get<bool>()) continue;
    if (++shown > 20) {
      table << "  ... more failures omitted\n";
      break;
    }
    table << "  FAIL " << c.at("inputs").dump()
          << " formula=" << fmt17(c.at("formula_value").get<double>())
          << " oracle=" << fmt17(c.at("oracle_value").get<double>())
          << " tol=" << fmt17(c.at("tolerance").get<double>()) << "\n";
  }
  table << (passed ? "PASS" : "FAIL") << " (" << pass_count << "/" << total
        << " cases)\n";

  // the report file is always the JSON schema, independent of --format
  if (!out.out_path.empty()) {
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out.out_path);
    f << machine.dump(2) << "\n";
  }
  if (out.format == "json") {
    std::cout << machine.dump(2) << "\n";
  } else if (out.format == "csv") {
    std::string text = "suite,inputs,formula_value,oracle_value,tolerance,pass\n";
    for (const auto& c : machine.at("cases")) {
      const std::string s = c.at("inputs").contains("suite")
                                ? c.at("inputs").at("suite").get<std::string>()
                                : a.suite;
      std::string inputs = c.at("inputs").dump();
      std::string quoted = "\"";
      for (char ch : inputs) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      quoted += "\"";
      text += s + "," + quoted + "," + fmt17(c.at("formula_value").get<double>()) +
              "," + fmt17(c.at("oracle_value").get<double>()) + "," +
              fmt17(c.at("tolerance").get<double>()) + "," +
              (c.at("pass").get<bool>() ? "true" : "false") + "\n";
    }
    std::cout << text;
  } else {
    std::cout << table.str();
  }
  return passed ? 0 : kExitVerifyFailure;
}

// ---- section ----------------------------------------------------------------

struct SectionArgs {
  int n = 3;
  std::string pair = "random";
  std::string emit_path;
};

int cmd_section(const SectionArgs& a, const Output& out) {
  const ParsedPair pair = parse_pair(a.pair, a.n, out.seed);
  pp_polygon* poly = nullptr;
  check(pp_cross_section(pair.u.data(), pair.v.data(), a.n, &poly), "section");
  double area = 0.0, mahler = 0.0;
  check(pp_polygon_area(poly, &area), "section area");
  check(pp_polygon_mahler(poly, &mahler), "mahler product");
  const int count = pp_polygon_vertex_count(poly);
  std::vector<double> st(2 * count);
  check(pp_polygon_vertices(poly, st.data()), "section vertices");
  pp_polygon_free(poly);

  json machine{{"command", "section"}, {"n", a.n}, {"seed", out.seed},
               {"u", pair.u},          {"v", pair.v}};
  machine["area"] = area;
  machine["vertex_count"] = count;
  machine["mahler_product"] = mahler;
  std::ostringstream table;
  table << "seed: " << out.seed << "\n";
  table << "section area: " << fmt17(area) << "\n";
  table << "vertices: " << count << "\n";
  table << "mahler product: " << fmt17(mahler) << "\n";
  if (a.n >= 3) {
    double bound = 0.0;
    check(pp_nazarov_bound(a.n, &bound), "section area bound");
    machine["area_lower_bound"] = bound;
    machine["margin"] = area - bound;
    table << "lower bound: " << fmt17(bound) << "  margin "
          << fmt17(area - bound) << "\n";
  }

  if (!a.emit_path.empty()) {
    std::ofstream f(a.emit_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + a.emit_path);
    f << "s,t\n";
    for (int i = 0; i < count; ++i)
      f << fmt17(st[2 * i]) << "," << fmt17(st[2 * i + 1]) << "\n";
    table << "polygon written to " << a.emit_path << "\n";
  }
  out.emit(machine, table.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form volumes of simplex/cube/cross-polytope projections "
               "and sections, with brute-force verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  Output out;
  std::optional<std::uint64_t> seed_opt;
  app.add_option("--seed", seed_opt, "RNG seed (default 0; env POLYPROJ_SEED)")
      ->expected(1);
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", out.out_path, "write machine-readable output to PATH");

  VolumeArgs vol;
  CLI::App* volume = app.add_subcommand("volume", "shadow volumes");
  volume->add_option("body", vol.body, "simplex | cube | cross")->required();
  volume->add_option("--n", vol.n, "dimension")->required();
  volume->add_option("--direction", vol.direction,
                     "e<k> | random | x1,x2,... | @file");
  volume->add_option("--pair", vol.pair, "trig | random | e<i>,e<j> | u;v | @file");
  volume->add_flag("--planar", vol.planar, "planar shadow on span{u,v}");
  volume->add_flag("--zero-sum", vol.zero_sum,
                   "project the direction onto the zero-sum sphere");
  volume->add_flag("--oracle", vol.oracle, "also print the brute-force value");
  volume->add_option("--samples", vol.samples, "MC samples for the oracle");

  ExtremalArgs ext;
  CLI::App* extremal = app.add_subcommand("extremal", "extremal values");
  extremal->add_option("problem", ext.problem,
                       "simplex-proj | simplex-width | cube-planar | fp")
      ->required();
  extremal->add_option("--n", ext.n, "dimension");
  extremal->add_option("--m", ext.m, "coordinate count (fp)");
  extremal->add_option("--p", ext.p, "exponent (fp)");
  extremal->add_flag("--numeric", ext.numeric, "run the numeric search too");
  extremal->add_option("--restarts", ext.restarts, "numeric search restarts");

  LpArgs lp;
  CLI::App* lpcmd = app.add_subcommand("lp", "L_p projection body support");
  lpcmd->add_option("body", lp.body, "simplex | cube | cross")->required();
  lpcmd->add_option("--n", lp.n, "dimension")->required();
  lpcmd->add_option("--p", lp.p, "order, p >= 1")->required();
  lpcmd->add_option("--direction", lp.direction, "direction literal")->required();
  lpcmd->add_option("--mode", lp.mode, "exact | mc (cross only)");
  lpcmd->add_option("--samples", lp.samples, "MC samples");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "formula-vs-oracle suites");
  verify->add_option("suite", ver.suite,
                     "simplex-hyperplane | cube-planar | duality | mahler | "
                     "nazarov | lp-reduction | width | all")
      ->required();
  verify->add_option("--n", ver.n_range, "dimension range LO..HI");
  verify->add_option("--trials", ver.trials, "random trials per dimension");
  verify->add_option("--samples", ver.samples, "MC samples per estimate");

  SectionArgs sec;
  CLI::App* section = app.add_subcommand("section", "planar cross-polytope sections");
  section->add_option("--n", sec.n, "ambient dimension")->required();
  section->add_option("--pair", sec.pair, "plane spec (trig | random | ...)");
  section->add_option("--emit", sec.emit_path, "write the polygon as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    out.seed = seed_opt ? *seed_opt : default_seed();
    if (volume->parsed()) return cmd_volume(vol, out);
    if (extremal->parsed()) return cmd_extremal(ext, out);
    if (lpcmd->parsed()) return cmd_lp(lp, out);
    if (verify->parsed()) return cmd_verify(ver, out);
    if (section->parsed()) return cmd_section(sec, out);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
