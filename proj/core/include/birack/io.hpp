#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "birack/birack.hpp"
#include "birack/census.hpp"
#include "birack/partition.hpp"
#include "birack/retracts.hpp"
#include "birack/solution.hpp"
#include "birack/theorems.hpp"

namespace birack {

// File format: one JSON object, 0-indexed, row-major, integers only.
//   birack:   {"n": 3, "circ": [[...], ...], "bullet": [[...], ...]}
//   solution: {"n": 3, "sigma": [[...], ...], "tau": [[...], ...]}
// Serialization is compact and keeps the key order above.

// Accepts either form; a solution is converted with to_birack. Throws
// InvalidInput on malformed JSON or shape errors.
Birack parse_birack(std::string_view text);
Solution parse_solution(std::string_view text);
Birack read_birack(std::filesystem::path const& path);

std::string to_json(Birack const& b);
std::string to_json(Solution const& s);
std::string to_json(Partition const& p);
std::string to_json(PropertyReport const& r);
std::string to_json(CensusEntry const& e);
std::string to_json(RetractTower const& t);
std::string to_json(TheoremReport const& r);
std::string to_json(SuiteResult const& r);

}  // namespace birack
