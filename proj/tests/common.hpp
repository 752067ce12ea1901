#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "raagtk/raagtk.hpp"
#include "raagtk/selftest/graphs.hpp"
#include "raagtk/selftest/oracles.hpp"

namespace raagtk {

inline void PrintTo(const NormalForm& a, std::ostream* os) {
  *os << '"';
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Letter l = a.letters()[i];
    *os << (i ? " " : "") << l.vertex() << (l.positive() ? "" : "^-1");
  }
  *os << '"';
}

}  // namespace raagtk

namespace raagtk::testing {

using verify::free2;
using verify::free_ac;
using verify::path3;
using verify::square;
using verify::z2;

inline DefGraph edgeless_ab() { return DefGraph::parse("vertices: a b\n"); }

inline NormalForm nf(const DefGraph& g, const std::string& w) { return parse_element(g, w); }

inline std::string str(const DefGraph& g, const NormalForm& a) { return format(g, a); }

inline VertexSet set(const DefGraph& g, const std::string& s) { return g.parse_set(s); }

}  // namespace raagtk::testing
