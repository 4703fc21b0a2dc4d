// Drives the installed command line through a shell, as a user would.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int status = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the CLI with the given arguments; env is a prefix like "A=1 ".
Result run(const std::vector<std::string>& args, const std::string& env = "") {
  std::string cmd = env + quote(PARITYCF_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json run_json(const std::vector<std::string>& args) {
  const Result r = run(args);
  REQUIRE(r.status == 0);
  return nlohmann::json::parse(r.out);
}

std::vector<std::string> values(const nlohmann::json& doc) {
  std::vector<std::string> v;
  for (const auto& row : doc["rows"]) v.push_back(row["value"].get<std::string>());
  return v;
}

// RFC 4180 reader: quoted fields, doubled quotes, embedded commas and newlines.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = any = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
    } else if (c == '\n') {
      row.push_back(field);
      rows.push_back(row);
      row.clear();
      field.clear();
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (!field.empty() || !row.empty()) {
    row.push_back(field);
    rows.push_back(row);
  }
  (void)any;
  return rows;
}

std::string csv_text(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

TEST_CASE("help and version exit cleanly") {
  CHECK(run({"--help"}).status == 0);
  CHECK(run({"--version"}).status == 0);
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
}

TEST_CASE("worked examples") {
  CHECK(values(run_json({"best", "sqrt(2)-1", "--class", "0,1", "--limit", "q:50", "--route", "all"})) ==
        std::vector<std::string>{"0", "1/3", "2/5", "7/17", "12/29"});
  CHECK(values(run_json({"best", "sqrt(2)-1", "--class", "1", "--limit", "n:3"})) ==
        std::vector<std::string>{"1", "1/3", "3/7"});
  CHECK(values(run_json({"best", "sqrt(2)-1", "--limit", "q:12"})) ==
        std::vector<std::string>{"0", "1/2", "2/5", "5/12"});
  CHECK(values(run_json({"signed", "sqrt(2)-1", "--class", "0", "--limit", "q:41", "--route", "delta"})) ==
        std::vector<std::string>{"1", "3/7", "17/41"});
  CHECK(values(run_json({"signed", "(1+sqrt(5))/2", "--limit", "q:3", "--route", "oracle"})) ==
        std::vector<std::string>{"1", "2", "3/2", "5/3"});
  CHECK(values(run_json({"best", "sqrt(2)-1", "--limit", ""})).empty());

  const Result d = run({"delta", "sqrt(2)-1", "--terms", "8"});
  CHECK(d.status == 0);
  CHECK(d.out == "inf,1,0,1,inf,1,0,1\n");
  CHECK(run({"delta", "sqrt(2)-1", "--terms", "0"}).out.empty());
  CHECK(run({"delta", "(1+sqrt(5))/2", "--terms", "4", "--geometric"}).out ==
        run({"delta", "(1+sqrt(5))/2", "--terms", "4"}).out);

  const auto recover = run_json({"maps", "sqrt(2)-1", "--recover", "even", "--steps", "5"});
  CHECK(values(recover) == std::vector<std::string>{"0", "1/2", "2/5", "5/12", "12/29"});
  CHECK(values(run_json({"maps", "sqrt(2)-1", "--recover", "oddodd", "--steps", "5"})) ==
        std::vector<std::string>{"1", "1/3", "3/7", "7/17", "17/41"});
}

TEST_CASE("JSON documents") {
  const auto doc = run_json({"best", "sqrt(2)-1", "--class", "inf", "--limit", "q:12", "--route", "all"});
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "best");
  CHECK(doc["set"] == "Binf");
  CHECK(doc["route"] == "all");
  CHECK(doc["limit"]["mode"] == "q");
  CHECK(doc["limit"]["value"] == "12");
  REQUIRE(doc["rows"].size() == 2);
  const auto& row = doc["rows"][0];
  CHECK(row["value"] == "1/2");
  CHECK(row["numerator"] == "1");
  CHECK(row["denominator"] == "2");
  CHECK(row["parity"] == "inf");
  CHECK(row["in_B"] == true);
  CHECK(row["Binf"] == true);
  CHECK(row["delta_word"].is_string());
  CHECK(nlohmann::json::parse(doc.dump()) == doc);

  const auto delta = run_json({"delta", "sqrt(2)", "--terms", "3", "--cylinders", "--format", "json"});
  CHECK(delta["schema"] == 1);
  CHECK(delta["cylinders"][0]["gamma_end"] == "inf");
  const auto maps = run_json({"maps", "sqrt(2)-1", "--map", "farey", "--steps", "2"});
  CHECK(maps["schema"] == 1);
  CHECK(maps["rows"][0]["relabel"] == "JKJ");
}

TEST_CASE("CSV carries the same fields as JSON") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"best", "sqrt(7)", "--class", "0,inf", "--limit", "q:2000"},
        std::vector<std::string>{"signed", "(-3+sqrt(13))/2", "--limit", "q:500"},
        std::vector<std::string>{"maps", "sqrt(3)-1", "--map", "oddodd", "--steps", "4"},
        std::vector<std::string>{"delta", "sqrt(2)-1", "--terms", "5", "--cylinders"}}) {
    std::vector<std::string> js = args, cs = args;
    js.insert(js.end(), {"--format", "json"});
    cs.insert(cs.end(), {"--format", "csv"});
    const auto doc = run_json(js);
    const Result csv = run(cs);
    REQUIRE(csv.status == 0);
    const auto table = parse_csv(csv.out);
    const auto& rows = doc.contains("rows") ? doc["rows"] : doc["cylinders"];
    REQUIRE(table.size() == rows.size() + 1);
    const auto& header = table[0];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      REQUIRE(table[i + 1].size() == header.size());
      CHECK(rows[i].size() == header.size());
      for (std::size_t j = 0; j < header.size(); ++j) {
        INFO(header[j]);
        CHECK(table[i + 1][j] == csv_text(rows[i][header[j]]));
      }
    }
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"best", "sqrt(4)"}).status == 2);
  CHECK(run({"best", "sqrt(2)+"}).status == 2);
  CHECK(run({"best", "sqrt(2)", "--limit", "x:3"}).status == 2);
  CHECK(run({"signed", "sqrt(2)", "--class", "1", "--limit", "n:2"}).status == 2);
  CHECK(run({"maps", "sqrt(2)"}).status == 2);
  CHECK(run({"best", "0.41421356...", "--limit", "q:100000"}).status == 3);
  CHECK(run({"best", "0.41421356...", "--limit", "q:100"}).status == 0);
  CHECK(run({"svg", "sqrt(2)", "--out", "/nonexistent/dir/x.svg"}).status == 5);
}

TEST_CASE("route disagreement exits 4 whichever route is wrong") {
  for (const char* route : {"rcf", "delta", "oracle"}) {
    INFO(route);
    const std::string env = std::string("PARITY_CF_INJECT_FAULT=") + route + " ";
    CHECK(run({"best", "sqrt(2)-1", "--route", "all"}, env).status == 4);
    CHECK(run({"signed", "sqrt(3)", "--class", "inf", "--route", "all", "--limit", "q:1000"}, env).status == 4);
    CHECK(run({"best", "sqrt(2)-1", "--route", route}, env).status == 0);
  }
  CHECK(run({"best", "sqrt(2)-1", "--route", "all"}, "PARITY_CF_INJECT_FAULT= ").status == 0);
}

TEST_CASE("SVG output") {
  const Result a = run({"svg", "sqrt(2)-1", "--terms", "6"});
  const Result b = run({"svg", "sqrt(2)-1", "--terms", "6"});
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("<?xml", 0) == 0);
  const std::string legend = "<text id=\"letters\"";
  const auto at = a.out.find(legend);
  REQUIRE(at != std::string::npos);
  const auto open = a.out.find('>', at) + 1;
  CHECK(a.out.substr(open, a.out.find('<', open) - open) == "inf,1,0,1,inf,1");

  const Result one = run({"svg", "sqrt(2)-1", "--terms", "1"});
  const auto edges = one.out.find("<g id=\"delta-edges\">");
  REQUIRE(edges != std::string::npos);
  const std::string group = one.out.substr(edges, one.out.find("</g>", edges) - edges);
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = group.find("<path", pos)) != std::string::npos; ++pos) ++count;
  for (std::size_t pos = 0; (pos = group.find("<line", pos)) != std::string::npos; ++pos) ++count;
  CHECK(count == 1);

  const std::string path = "cli_test_out.svg";
  REQUIRE(run({"svg", "sqrt(2)-1", "--terms", "6", "--out", path}).status == 0);
  std::ifstream f(path);
  const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(written == a.out);
  std::remove(path.c_str());
}

TEST_CASE("oracle-check honours PARITY_CF_SEED") {
  const Result a = run({"oracle-check", "--samples", "1", "--limit", "q:40"}, "PARITY_CF_SEED=5 ");
  const Result b = run({"oracle-check", "--samples", "1", "--limit", "q:40"}, "PARITY_CF_SEED=5 ");
  const Result c = run({"oracle-check", "--samples", "1", "--limit", "q:40"}, "PARITY_CF_SEED=6 ");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(a.out.find("FAIL") == std::string::npos);
  CHECK(run({"oracle-check"}, "PARITY_CF_SEED=abc ").status == 2);
  const auto doc = nlohmann::json::parse(run({"oracle-check", "sqrt(2)", "--limit", "q:30", "--format", "json"}).out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["ok"] == true);
}
