#pragma once

#include <iosfwd>
#include <string>

#include "lcaes/lp/problem.hpp"

namespace lcaes::lp {

// Sparse text dump used for debugging solver issues:
//
//   lcaes-lp 1
//   offset <value>
//   variables <n>
//   <name> <lower> <upper> <cost> <integer 0|1>
//   rows <m>
//   <name> <L|E|G> <rhs> <nnz> <col>:<value> ...
//
// Infinite bounds are written as inf / -inf; all numbers use 17 significant
// digits so load(dump(p)) reproduces p exactly. Names must not contain
// whitespace.
void dump(const Problem& p, std::ostream& out);
Problem load(std::istream& in);

void dump_file(const Problem& p, const std::string& path);
Problem load_file(const std::string& path);

}  // namespace lcaes::lp
