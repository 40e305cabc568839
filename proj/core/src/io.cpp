#include "birack/io.hpp"

#include <fstream>
#include <sstream>

#include "birack/error.hpp"
#include "json.hpp"

namespace birack {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (json::exception const& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

Table table_field(json const& j, char const* key, std::size_t n) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != n) {
    throw Error(ErrorKind::InvalidInput, std::string("field '") + key + "' must be an n x n array");
  }
  Table t;
  for (auto const& row : j[key]) {
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorKind::InvalidInput, std::string("field '") + key + "' must be an n x n array");
    }
    std::vector<point> r;
    for (auto const& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0 ||
          v.get<long long>() >= static_cast<long long>(n)) {
        throw Error(ErrorKind::InvalidInput,
                    std::string("field '") + key + "' must hold integers in 0..n-1");
      }
      r.push_back(v.get<point>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

std::size_t size_field(json const& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
      j["n"].get<long long>() < 1) {
    throw Error(ErrorKind::InvalidInput, "expected an object with a positive integer 'n'");
  }
  return j["n"].get<std::size_t>();
}

json opt(std::optional<std::size_t> v) { return v ? json(*v) : json(nullptr); }
json opt(std::optional<bool> v) { return v ? json(*v) : json(nullptr); }

json group_json(GroupFingerprint const& g) {
  return json{{"order", g.order}, {"class", opt(g.nilpotency_class)}, {"abelian", g.abelian}};
}

json report_json(PropertyReport const& r) {
  return json{{"n", r.size},
              {"involutive", r.involutive},
              {"idempotent", r.idempotent},
              {"square_free", r.square_free},
              {"left_distributive", r.left_distributive},
              {"right_distributive", r.right_distributive},
              {"distributive", r.distributive},
              {"permutational", r.permutational},
              {"projection", r.projection},
              {"left_derived", r.left_derived},
              {"right_derived", r.right_derived},
              {"lmlt", group_json(r.lmlt)},
              {"rmlt", group_json(r.rmlt)},
              {"mlt", group_json(r.mlt)}};
}

json birack_json(Birack const& b) {
  return json{{"n", b.size()}, {"circ", b.circ_table()}, {"bullet", b.bullet_table()}};
}

}  // namespace

Birack parse_birack(std::string_view text) {
  json const j = parse(text);
  std::size_t const n = size_field(j);
  if (j.contains("sigma") || j.contains("tau")) {
    Solution s{n, table_field(j, "sigma", n), table_field(j, "tau", n)};
    return to_birack(s);
  }
  return validate(table_field(j, "circ", n), table_field(j, "bullet", n));
}

Solution parse_solution(std::string_view text) {
  json const j = parse(text);
  std::size_t const n = size_field(j);
  return Solution{n, table_field(j, "sigma", n), table_field(j, "tau", n)};
}

Birack read_birack(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_birack(buffer.str());
}

std::string to_json(Birack const& b) { return birack_json(b).dump(); }

std::string to_json(Solution const& s) {
  return json{{"n", s.n}, {"sigma", s.sigma}, {"tau", s.tau}}.dump();
}

std::string to_json(Partition const& p) { return json(p.blocks()).dump(); }

std::string to_json(PropertyReport const& r) { return report_json(r).dump(); }

std::string to_json(CensusEntry const& e) {
  json j = birack_json(e.birack);
  j["report"] = report_json(e.report);
  j["mpl"] = opt(e.mpl);
  return j.dump();
}

std::string to_json(RetractTower const& t) {
  json stages = json::array();
  for (Birack const& b : t.stages) {
    stages.push_back(birack_json(b));
  }
  char const* kind = t.kind == RetractKind::left    ? "left"
                     : t.kind == RetractKind::right ? "right"
                                                    : "full";
  json sizes = json::array();
  for (Birack const& b : t.stages) {
    sizes.push_back(b.size());
  }
  return json{{"kind", kind},
              {"sizes", sizes},
              {"stabilized", t.stabilized},
              {"level", opt(t.level)},
              {"stages", stages}}
      .dump();
}

std::string to_json(TheoremReport const& r) {
  json rows = json::array();
  for (auto const& row : r.rows) {
    rows.push_back(json{{"k", row.k},
                        {"retract", opt(row.retract_collapses)},
                        {"reductive", opt(row.reductive)},
                        {"permutational", opt(row.permutational)},
                        {"nilpotent", row.nilpotent},
                        {"agree", row.agree}});
  }
  json j{{"theorem", r.theorem},
         {"instance", r.instance},
         {"holds", r.holds},
         {"k1_included", r.k1_included},
         {"tower_sizes", r.tower_sizes},
         {"group_order", r.group_order},
         {"group_class", opt(r.group_class)},
         {"rows", rows},
         {"notes", r.notes}};
  if (r.counterexample_k) {
    j["counterexample"] = json{{"k", *r.counterexample_k},
                               {"n", r.circ.size()},
                               {"circ", r.circ},
                               {"bullet", r.bullet}};
  }
  return j.dump();
}

std::string to_json(SuiteResult const& r) {
  return json{{"suite", to_string(r.suite)},
              {"n_max", r.n_max},
              {"instances", r.instances},
              {"passed", r.passed()},
              {"failures", r.failures},
              {"findings", r.findings}}
      .dump();
}

}  // namespace birack
