#pragma once

#include "hhbv/expr.hpp"
#include "hhbv/kernels.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hhbv {

// Every catalog generator is a cocycle.
SweepResult check_cocycles();
// delta(delta(f)) is a coboundary for every generator and pairwise product of degree >= 2.
SweepResult check_delta_squared(ProductCache& cache);
// [a,b] + delta(ab) + delta(a)b + a delta(b) is a coboundary for every pair of generators.
SweepResult check_bv_identity(ProductCache& cache, DualChoice dual = DualChoice::form_dual);
// ab + ba is a coboundary for every pair of generators.
SweepResult check_graded_commutativity(ProductCache& cache);
// [ab,c] + [a,c]b + a[b,c] on random generator triples with |abc| <= 5.
SweepResult check_poisson(ProductCache& cache, int samples, std::uint64_t seed);
SweepResult check_relations(ProductCache& cache, const std::vector<std::string>& relations);
// B o B = 0 on every basis chain of degree <= maxdeg.
SweepResult check_connes(int maxdeg, Exec exec);

// 1 (x) 1 in degree 3 goes through Phi_3 and back unchanged.
bool psi3_phi3_is_identity(Comparison& cmp);

}  // namespace hhbv
