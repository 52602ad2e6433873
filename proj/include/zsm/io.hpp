#pragma once

#include <iosfwd>
#include <string>

#include "zsm/balance.hpp"
#include "zsm/graph.hpp"
#include "zsm/oracle.hpp"

namespace zsm {

// Instance text format:
//   zsm v1
//   order <4n>
//   colours <C(4n,2) chars from {B,R}>   (row-major pairs (i,j), i<j)
ColouredGraph read_instance(std::istream& in);
void write_instance(std::ostream& out, const ColouredGraph& g);

// k-coloured variant:
//   zsm-k v1
//   order <2kn>
//   k <k>
//   colours <C(2kn,2) digits in 0..k-1>
KColouredGraph read_k_instance(std::istream& in);
void write_k_instance(std::ostream& out, const KColouredGraph& g);

// A matching is one line: `matching <pairs "u-v">`, u<v, sorted by u.
std::string format_matching(const Matching& m);
Matching parse_matching_line(const std::string& line, int order);
Matching read_matching(std::istream& in, int order);

// Trace text format, one line per step:
//   init matching <...>
//   step <i> case <label> flip <0|1> d <before>-><after> swaps (u,v,x,y)[;(u,v,x,y)]
//   final matching <...>
void write_trace(std::ostream& out, const Trace& trace);
Trace read_trace(std::istream& in, int order);

}  // namespace zsm
