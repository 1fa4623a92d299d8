#pragma once

// Text formats: graph6 for unsigned graphs, "sg1" for signed graphs and the
// "n r" weighing-matrix format. Parsers throw ParseError with a kind that
// identifies the failure class.

#include <string>
#include <string_view>
#include <vector>

#include "sr2se/core.hpp"
#include "sr2se/weighing.hpp"

namespace sr2se {

/// One graph6 string. An optional ">>graph6<<" header and one trailing
/// newline are accepted.
UnderlyingGraph parse_graph6(std::string_view text);
std::string write_graph6(const UnderlyingGraph& g);
/// One graph per non-empty line.
std::vector<UnderlyingGraph> parse_graph6_lines(std::string_view text);

/// sg1 format:
///   sg1 <n>
///   <u> <v> <+|->      one line per edge, 0 <= u < v < n
/// Blank lines and lines starting with '#' are ignored.
SignedGraph parse_signed(std::string_view text);
/// Canonical output: edges in row-major order, one per line.
std::string write_signed(const SignedGraph& g);

/// Weighing text:
///   <n> <r>
///   n rows of n symbols from {+, -, 0}, optionally separated by spaces
/// The matrix must satisfy M M^T = rI.
WeighingMatrix parse_weighing(std::string_view text);
/// Several matrices one after another, each with its own header line.
std::vector<WeighingMatrix> parse_weighing_list(std::string_view text);
std::string write_weighing(const WeighingMatrix& w);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace sr2se
