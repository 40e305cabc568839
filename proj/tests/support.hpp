#pragma once

#include <birack/birack.hpp>
#include <birack/perm.hpp>
#include <birack/perm_group.hpp>

#include "oracles.hpp"

namespace support {

inline oracle::Tables tables(birack::Birack const& b) {
  oracle::Tables t;
  for (auto const& row : b.circ_table()) {
    t.c.emplace_back(row.begin(), row.end());
  }
  for (auto const& row : b.bullet_table()) {
    t.b.emplace_back(row.begin(), row.end());
  }
  return t;
}

inline oracle::Map map(birack::Perm const& p) {
  return oracle::Map(p.images().begin(), p.images().end());
}

inline oracle::Set elements(birack::PermGroup const& g) {
  oracle::Set s;
  for (auto const& p : g.elements()) {
    s.insert(map(p));
  }
  return s;
}

inline std::vector<oracle::Map> maps(std::vector<birack::Perm> const& ps) {
  std::vector<oracle::Map> out;
  for (auto const& p : ps) {
    out.push_back(map(p));
  }
  return out;
}

}  // namespace support
