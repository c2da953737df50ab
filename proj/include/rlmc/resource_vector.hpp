#pragma once

#include <string>
#include <vector>

namespace rlmc {

// Integer vector indexed by resource. Index 0 is the diminishing resource:
// every action consumes at least one unit of it and no action produces it.
using ResourceVector = std::vector<int>;

// Pointwise partial order: a <= b iff a_i <= b_i for all i.
bool vec_leq(const ResourceVector& a, const ResourceVector& b);

// Strict variant: a <= b and a != b.
bool vec_lt(const ResourceVector& a, const ResourceVector& b);

ResourceVector vec_add(const ResourceVector& a, const ResourceVector& b);
ResourceVector vec_sub(const ResourceVector& a, const ResourceVector& b);

bool vec_nonneg(const ResourceVector& a);

// "(1,0,3)" — used by printers and diagnostics.
std::string vec_to_string(const ResourceVector& a);

}  // namespace rlmc
