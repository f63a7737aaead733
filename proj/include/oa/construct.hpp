#pragma once

#include <cstdint>
#include <vector>

#include "oa/canon.hpp"
#include "oa/design.hpp"
#include "oa/enumerate.hpp"
#include "oa/jchar.hpp"

namespace oa {

// N_s copies of r_s for s in ascending Yates order.
Design design_from_counts(const NVector& nvec);

// The array whose shortened J-vector is `jstar`: only J_empty = n and the
// m+1 slots are nonzero. Throws InfeasibleJError if some N_s is negative or
// non-integral, ShapeError if jstar has the wrong length for params.
Design build(const JStar& jstar, const ArrayParams& params);

// One array per isomorphism class, in enumeration order. Arrays are built
// in parallel.
std::vector<Design> build_catalog(int d, std::int64_t lambda);

// OA(lambda 2^d, d+1, 2, d) with J_{Z_{d+1}} = 2^d u.
Design build_d_plus_1(int d, std::int64_t lambda, const DPlusOneSolution& solution);

// Direct count: every d-column projection holds each of the 2^d sign
// patterns exactly n / 2^d times. Does not touch J-characteristics.
bool verify_oa(const Design& design, int d);

}  // namespace oa
