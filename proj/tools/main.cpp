// paritycf: command-line front end over the C interface.
//
// stdout carries data, stderr diagnostics. Exit codes: 0 ok, 2 parse or
// usage error, 3 precision exhausted, 4 route mismatch or failed check,
// 5 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
#include "paritycf/paritycf.h"
#include "svg.hpp"

namespace {

using cli::Json;

constexpr int kExitOk = 0, kExitParse = 2, kExitPrecision = 3, kExitMismatch = 4, kExitIo = 5, kExitInternal = 1;

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using InputPtr = std::unique_ptr<pcf_input, Deleter<pcf_input, pcf_input_free>>;
using TablePtr = std::unique_ptr<pcf_table, Deleter<pcf_table, pcf_table_free>>;
using DeltaPtr = std::unique_ptr<pcf_delta, Deleter<pcf_delta, pcf_delta_free>>;
using OrbitPtr = std::unique_ptr<pcf_orbit, Deleter<pcf_orbit, pcf_orbit_free>>;
using ReportPtr = std::unique_ptr<pcf_report, Deleter<pcf_report, pcf_report_free>>;

struct Failure {
  int code;
};

int exit_code(pcf_status s) {
  switch (s) {
    case PCF_OK: return kExitOk;
    case PCF_ERR_PARSE:
    case PCF_ERR_RATIONAL:
    case PCF_ERR_ARGUMENT: return kExitParse;
    case PCF_ERR_PRECISION: return kExitPrecision;
    case PCF_ERR_MISMATCH: return kExitMismatch;
    case PCF_ERR_IO: return kExitIo;
    default: return kExitInternal;
  }
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  throw Failure{kExitParse};
}

// Reports a failed library call (with a caret under parse errors) and aborts
// the command.
void check(pcf_status s, const std::string& text = "") {
  if (s == PCF_OK) return;
  std::cerr << "error (" << pcf_status_name(s) << "): " << pcf_last_error() << "\n";
  const long pos = pcf_last_error_position();
  if (s == PCF_ERR_PARSE && pos >= 0 && !text.empty()) {
    std::cerr << "  " << text << "\n  " << std::string(static_cast<size_t>(pos), ' ') << "^\n";
  }
  throw Failure{exit_code(s)};
}

InputPtr parse(const std::string& text) {
  pcf_input* x = nullptr;
  check(pcf_input_parse(text.c_str(), &x), text);
  return InputPtr(x);
}

struct LimitSpec {
  pcf_limit_mode mode = PCF_LIMIT_DENOMINATOR;
  std::string value = "100";
  std::string text() const { return (mode == PCF_LIMIT_COUNT ? "n:" : "q:") + value; }
};

// "q:50" (denominators up to 50), "n:3" (first three members); an empty
// string is the empty limit.
LimitSpec parse_limit(const std::string& s) {
  LimitSpec l;
  if (s.empty()) {
    l.value = "0";
    return l;
  }
  if (s.size() < 3 || s[1] != ':' || (s[0] != 'q' && s[0] != 'n')) usage_error("--limit expects q:<int> or n:<int>");
  l.mode = s[0] == 'n' ? PCF_LIMIT_COUNT : PCF_LIMIT_DENOMINATOR;
  l.value = s.substr(2);
  if (l.value.find_first_not_of("0123456789") != std::string::npos) usage_error("--limit value must be a non-negative integer");
  return l;
}

// "0,1" -> {0, 1} in the order 0 < 1 < inf, duplicates removed.
std::vector<int> parse_classes(const std::string& s) {
  std::vector<bool> seen(3, false);
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "0") seen[0] = true;
    else if (tok == "1") seen[1] = true;
    else if (tok == "inf") seen[2] = true;
    else usage_error("--class expects a comma-separated list of 0, 1, inf");
  }
  std::vector<int> out;
  for (int i = 0; i < 3; ++i) {
    if (seen[i]) out.push_back(i);
  }
  if (out.empty()) usage_error("--class is empty");
  return out;
}

std::string best_set_name(const std::optional<std::string>& cls) {
  if (!cls) return "B";
  const std::vector<int> c = parse_classes(*cls);
  if (c.size() == 3) return "B";
  std::string name = "B";
  for (int s : c) name += pcf_symbol_name(s);
  return name;
}

std::string signed_set_name(const std::optional<std::string>& cls) {
  if (!cls) return "S";
  const std::vector<int> c = parse_classes(*cls);
  if (c.size() != 1) usage_error("signed --class takes a single class (S_alpha)");
  return std::string("S") + pcf_symbol_name(c[0]);
}

pcf_route parse_route(const std::string& r) {
  if (r == "rcf") return PCF_ROUTE_RCF;
  if (r == "delta") return PCF_ROUTE_DELTA;
  if (r == "oracle") return PCF_ROUTE_ORACLE;
  if (r == "all") return PCF_ROUTE_ALL;
  usage_error("--route expects rcf, delta, oracle or all");
}

void emit_rows(const std::string& format, Json doc, const std::vector<std::string>& columns) {
  if (format == "csv") {
    cli::write_csv(std::cout, columns, doc["rows"]);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

Json header(const std::string& command, const pcf_input* x, const std::string& expression) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  doc["expression"] = expression;
  doc["input"] = pcf_input_text(x);
  return doc;
}

// ---- subcommands -----------------------------------------------------------

struct TableOptions {
  std::string input;
  std::optional<std::string> cls;
  std::string route = "rcf";
  std::string limit = "q:100";
  std::string format = "json";
};

void run_table(const std::string& command, const TableOptions& o) {
  const std::string set = command == "best" ? best_set_name(o.cls) : signed_set_name(o.cls);
  const pcf_route route = parse_route(o.route);
  const LimitSpec limit = parse_limit(o.limit);
  InputPtr x = parse(o.input);
  pcf_table* t = nullptr;
  check(pcf_approximations(x.get(), set.c_str(), route, limit.mode, limit.value.c_str(), &t));
  TablePtr table(t);

  Json doc = header(command, x.get(), o.input);
  doc["set"] = set;
  doc["route"] = o.route;
  doc["limit"] = {{"mode", limit.mode == PCF_LIMIT_COUNT ? "n" : "q"}, {"value", limit.value}};
  doc["rows"] = cli::table_rows(table.get());
  emit_rows(o.format, std::move(doc), cli::row_columns());
}

struct DeltaOptions {
  std::string input;
  size_t terms = 10;
  bool cylinders = false;
  bool geometric = false;
  std::string format = "text";
};

void run_delta(const DeltaOptions& o) {
  InputPtr x = parse(o.input);
  pcf_delta* d = nullptr;
  unsigned flags = (o.geometric ? PCF_DELTA_GEOMETRIC : 0u) | (o.cylinders ? PCF_DELTA_CYLINDERS : 0u);
  check(pcf_delta_expand(x.get(), o.terms, flags, &d));
  DeltaPtr delta(d);

  if (o.format == "text") {
    if (o.terms == 0) return;
    std::cout << pcf_delta_text(d) << "\n";
    if (o.cylinders) {
      for (size_t i = 0; i < pcf_delta_size(d); ++i) {
        pcf_cylinder c;
        check(pcf_delta_cylinder(d, i, &c));
        std::cout << i + 1 << " [" << c.word << "] " << c.end_beta << " (" << pcf_symbol_name(c.beta) << ") "
                  << c.end_gamma << " (" << pcf_symbol_name(c.gamma) << ")\n";
      }
    }
    return;
  }

  Json doc = header("delta", x.get(), o.input);
  doc["route"] = o.geometric ? "geometric" : "cutting";
  doc["terms"] = o.terms;
  doc["word"] = pcf_delta_text(d);
  Json syms = Json::array();
  for (size_t i = 0; i < pcf_delta_size(d); ++i) syms.push_back(pcf_symbol_name(pcf_delta_symbol(d, i)));
  doc["symbols"] = syms;
  Json rows = Json::array();
  if (o.cylinders) {
    for (size_t i = 0; i < pcf_delta_size(d); ++i) {
      pcf_cylinder c;
      check(pcf_delta_cylinder(d, i, &c));
      Json r;
      r["m"] = i + 1;
      r["word"] = c.word;
      r["beta"] = pcf_symbol_name(c.beta);
      r["beta_end"] = c.end_beta;
      r["gamma"] = pcf_symbol_name(c.gamma);
      r["gamma_end"] = c.end_gamma;
      rows.push_back(r);
    }
  }
  doc["cylinders"] = rows;
  if (o.format == "csv") {
    cli::write_csv(std::cout, {"m", "word", "beta", "beta_end", "gamma", "gamma_end"}, rows);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

struct MapsOptions {
  std::string input;
  std::optional<std::string> map;
  size_t steps = 10;
  bool orbit = false;
  std::optional<std::string> recover;
  std::string format = "json";
};

void run_maps(const MapsOptions& o) {
  if (!o.map && !o.recover) usage_error("maps needs --map or --recover");
  InputPtr x = parse(o.input);
  Json doc = header("maps", x.get(), o.input);

  if (o.recover) {
    pcf_table* t = nullptr;
    check(pcf_map_recover(x.get(), o.recover->c_str(), o.steps, &t));
    TablePtr table(t);
    if (o.map) doc["map"] = *o.map;
    doc["recover"] = *o.recover;
    doc["set"] = *o.recover == "even" ? "B0inf" : "B1";
    Json rows = cli::table_rows(table.get());
    for (size_t i = 0; i < rows.size(); ++i) {
      Json r;
      r["i"] = i;
      for (auto& [k, v] : rows[i].items()) r[k] = v;
      rows[i] = r;
    }
    doc["rows"] = rows;
    std::vector<std::string> cols{"i"};
    for (const auto& c : cli::row_columns()) cols.push_back(c);
    emit_rows(o.format, std::move(doc), cols);
    return;
  }

  pcf_orbit* raw = nullptr;
  check(pcf_map_orbit(x.get(), o.map->c_str(), o.steps, &raw));
  OrbitPtr orbit(raw);
  doc["map"] = *o.map;
  Json rows = Json::array();
  std::vector<std::string> cols;
  if (o.orbit) {
    cols = {"i", "point"};
    rows.push_back({{"i", 0}, {"point", pcf_input_text(x.get())}});
    for (size_t i = 0; i < pcf_orbit_size(raw); ++i) {
      pcf_map_step s;
      check(pcf_orbit_step(raw, i, &s));
      rows.push_back({{"i", i + 1}, {"point", s.output}});
    }
  } else {
    cols = {"step", "input", "output", "branch", "consumed", "relabel", "m"};
    for (size_t i = 0; i < pcf_orbit_size(raw); ++i) {
      pcf_map_step s;
      check(pcf_orbit_step(raw, i, &s));
      Json r;
      r["step"] = i + 1;
      r["input"] = s.input;
      r["output"] = s.output;
      r["branch"] = s.branch;
      r["consumed"] = s.consumed;
      r["relabel"] = s.relabel;
      r["m"] = s.m;
      rows.push_back(r);
    }
  }
  doc["rows"] = rows;
  emit_rows(o.format, std::move(doc), cols);
}

struct CheckOptions {
  std::optional<std::string> input;
  size_t samples = 5;
  std::string limit = "q:200";
  std::string format = "text";
};

uint64_t env_seed() {
  const char* s = std::getenv("PARITY_CF_SEED");
  if (!s || !*s) return 1;
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    usage_error("PARITY_CF_SEED must be an unsigned integer");
  }
}

int run_check(const CheckOptions& o) {
  const LimitSpec limit = parse_limit(o.limit);
  if (limit.mode != PCF_LIMIT_DENOMINATOR) usage_error("oracle-check takes a denominator limit q:<int>");
  const int64_t q = std::stoll(limit.value.empty() ? "0" : limit.value);
  const uint64_t seed = env_seed();
  InputPtr x;
  if (o.input) x = parse(*o.input);
  pcf_report* raw = nullptr;
  check(pcf_oracle_check(x.get(), seed, o.samples, q, &raw));
  ReportPtr report(raw);

  size_t failures = 0;
  Json items = Json::array();
  for (size_t i = 0; i < pcf_report_size(raw); ++i) {
    pcf_check c;
    check(pcf_report_item(raw, i, &c));
    failures += c.ok ? 0 : 1;
    items.push_back({{"name", c.name}, {"ok", c.ok != 0}, {"detail", c.detail}});
    if (o.format == "text") std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
  }
  if (o.format == "json") {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = "oracle-check";
    doc["seed"] = seed;
    doc["q_max"] = q;
    doc["ok"] = failures == 0;
    doc["checks"] = items;
    std::cout << doc.dump(2) << "\n";
  }
  std::cerr << pcf_report_size(raw) << " checks, " << failures << " failed (seed " << seed << ")\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

struct SvgOptions {
  std::string input;
  size_t terms = 8;
  std::string out = "-";
};

int run_svg(const SvgOptions& o) {
  InputPtr x = parse(o.input);
  pcf_delta* d = nullptr;
  check(pcf_delta_expand(x.get(), o.terms, PCF_DELTA_CYLINDERS, &d));
  DeltaPtr delta(d);
  const std::string svg = cli::render_svg(x.get(), d);
  if (o.out == "-") {
    std::cout << svg;
    return kExitOk;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (f) f << svg;
  if (!f) {
    std::cerr << "error (io): cannot write " << o.out << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity-constrained best rational approximations of quadratic irrationals."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pcf_version()));

  const std::vector<std::string> table_formats{"json", "csv"};
  const std::vector<std::string> routes{"rcf", "delta", "oracle", "all"};

  TableOptions best, signd;
  struct TableCommand {
    TableOptions* opts;
    const char* name;
    const char* help;
  };
  for (const TableCommand& c : {TableCommand{&best, "best", "Best approximations B, or B^(a), B^(a,b) with --class."},
                                TableCommand{&signd, "signed", "Signed best approximations S, or S_a with --class."}}) {
    TableOptions* opts = c.opts;
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", opts->input, "Quadratic surd, e.g. \"sqrt(2)-1\", or a decimal ending in \"...\"")->required();
    sub->add_option("--class", opts->cls, "Parity classes, e.g. 0 or 0,1 (0 = even/odd, 1 = odd/odd, inf = odd/even)");
    sub->add_option("--route", opts->route, "rcf | delta | oracle | all (all cross-checks the three)")
        ->check(CLI::IsMember(routes))
        ->capture_default_str();
    sub->add_option("--limit", opts->limit, "q:<max denominator> or n:<count>")->capture_default_str();
    sub->add_option("--format", opts->format, "json | csv")->check(CLI::IsMember(table_formats))->capture_default_str();
  }

  DeltaOptions delta;
  CLI::App* dsub = app.add_subcommand("delta", "Delta-expression a_1..a_m, optionally with cylinder endpoints.");
  dsub->add_option("input", delta.input, "Input number")->required();
  dsub->add_option("--terms", delta.terms, "Number of symbols")->capture_default_str();
  dsub->add_flag("--cylinders", delta.cylinders, "Print the endpoints of each cylinder with their parity classes");
  dsub->add_flag("--geometric", delta.geometric, "Use the geometric route instead of the cutting sequence");
  dsub->add_option("--format", delta.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  MapsOptions maps;
  CLI::App* msub = app.add_subcommand("maps", "Continued fraction maps on (0, 1) as Delta-shifts.");
  msub->add_option("input", maps.input, "Quadratic surd in (0, 1)")->required();
  msub->add_option("--map", maps.map, "farey | gauss | by-excess | even | odd | oddodd")
      ->check(CLI::IsMember({"farey", "gauss", "by-excess", "even", "odd", "oddodd"}));
  msub->add_option("--steps", maps.steps, "Number of steps (or recovered terms)")->capture_default_str();
  msub->add_flag("--orbit", maps.orbit, "Print only the orbit points x_0, x_1, ...");
  msub->add_option("--recover", maps.recover, "even (B^(0,inf)) | oddodd (B^(1)) from inverse branches")
      ->check(CLI::IsMember({"even", "oddodd"}));
  msub->add_option("--format", maps.format, "json | csv")->check(CLI::IsMember(table_formats))->capture_default_str();

  CheckOptions chk;
  CLI::App* csub = app.add_subcommand(
      "oracle-check", "Cross-check all routes and identities on an input, or on seeded samples (PARITY_CF_SEED).");
  csub->add_option("input", chk.input, "Input number (omit to sample)");
  csub->add_option("--samples", chk.samples, "Number of sampled surds when no input is given")->capture_default_str();
  csub->add_option("--limit", chk.limit, "q:<max denominator> for the set comparisons")->capture_default_str();
  csub->add_option("--format", chk.format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  SvgOptions svg;
  CLI::App* ssub = app.add_subcommand("svg", "Schematic SVG of the tessellation edges crossed on the way to x.");
  ssub->add_option("input", svg.input, "Input number")->required();
  ssub->add_option("--terms", svg.terms, "Number of Delta-symbols drawn")->capture_default_str();
  ssub->add_option("--out", svg.out, "Output path, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  if (const char* fault = std::getenv("PARITY_CF_INJECT_FAULT"); fault && *fault) {
    if (pcf_debug_inject_fault(fault) != PCF_OK) {
      std::cerr << "error: " << pcf_last_error() << "\n";
      return kExitParse;
    }
  }

  try {
    if (app.got_subcommand("best")) run_table("best", best);
    else if (app.got_subcommand("signed")) run_table("signed", signd);
    else if (app.got_subcommand("delta")) run_delta(delta);
    else if (app.got_subcommand("maps")) run_maps(maps);
    else if (app.got_subcommand("oracle-check")) return run_check(chk);
    else if (app.got_subcommand("svg")) return run_svg(svg);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  std::cout.flush();
  if (!std::cout) {
    std::cerr << "error (io): cannot write to stdout\n";
    return kExitIo;
  }
  return kExitOk;
}
