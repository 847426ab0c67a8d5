// The bar metric on (R/Gamma) x (0, inf], delta-matchings, and the exact
// bottleneck distance between concise barcodes.
#ifndef BARNOV_DISTANCE_HPP
#define BARNOV_DISTANCE_HPP

#include "barnov/barcode.hpp"

namespace barnov {

// d(([a],L), ([a'],L')) = inf over g in Gamma of
//   max(|a + g - a'|, |(a + g + L) - (a' + L')|),
// with infinite bars matching only infinite bars.  For dense Gamma the
// infimum |L - L'|/2 is returned in closed form; for discrete Gamma the
// minimum is attained at one of the two lattice shifts bracketing the real
// minimizer -(a - a' + (L - L')/2).
ExtQuad bar_distance(const ValueGroup& group, const Bar& x, const Bar& y);

struct MatchingResult {
	ExtQuad delta = ExtQuad::pos_inf();
	std::vector<std::pair<int, int>> pairs;  // indices into S and T
	std::vector<int> unmatched_S;
	std::vector<int> unmatched_T;
};

// Exact optimum over the candidate set {bar distances} + {L/2}: binary search
// on the sorted candidates with a perfect-matching decision procedure on the
// doubled bipartite graph (s--t when d <= delta, s--sbar when L_s <= 2 delta,
// tbar--t when L_t <= 2 delta, tbar--sbar always).
MatchingResult bottleneck_degree(const ValueGroup& group, const std::vector<Bar>& S, const std::vector<Bar>& T);

// sup over the union of occupied degrees
ExtQuad bottleneck_all(const ValueGroup& group, const Barcode& S, const Barcode& T);

// exhaustive enumeration of partial matchings; |S| + |T| <= 10 guard
ExtQuad matching_oracle(const ValueGroup& group, const std::vector<Bar>& S, const std::vector<Bar>& T);

// check the returned witness against its own invariants at its delta
bool validate_matching(const ValueGroup& group, const std::vector<Bar>& S, const std::vector<Bar>& T,
                       const MatchingResult& m);

} // namespace barnov

#endif
