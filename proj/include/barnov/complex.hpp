// Floer-type complexes and the constructions built from them: validation,
// elementary complexes, direct sums, duals, coefficient extension,
// splittings, split chain maps, mapping cylinders and cones with their
// filtrations.
#ifndef BARNOV_COMPLEX_HPP
#define BARNOV_COMPLEX_HPP

#include "barnov/svd.hpp"

#include <map>

namespace barnov {

// Degree-sparse over a finite window; degrees outside the window are zero.
struct FloerComplex {
	SetupPtr ctx;
	int k_min = 0;
	std::vector<FilteredSpace> spaces;  // spaces[i] = C_{k_min + i}
	std::vector<LinearMap> bnds;        // bnds[i] : C_{k_min+i+1} -> C_{k_min+i}

	int k_max() const { return k_min + static_cast<int>(spaces.size()) - 1; }
	bool in_window(int k) const { return k >= k_min && k <= k_max(); }
	FilteredSpace space(int k) const;
	LinearMap boundary(int k) const;  // the map C_k -> C_{k-1}
	int total_dim() const;
};

FloerComplex make_complex(SetupPtr ctx, int k_min, std::vector<FilteredSpace> spaces, std::vector<LinearMap> bnds);
bool complexes_equal(const FloerComplex& a, const FloerComplex& b);

struct ValidationReport {
	std::vector<std::string> violations;
	bool ok() const { return violations.empty(); }
	std::string summary() const;
};

// Checks d o d = 0 and l(d v) <= l(v) on every reference generator (which
// suffices for all vectors since the reference basis is orthogonal); the
// strict flag demands l(d v) < l(v).
ValidationReport validate(const FloerComplex& c, bool strict = false);

// E(a, L, k): for L = inf a single degree-k generator at level a; otherwise
// generators x (degree k, level a) and y (degree k+1, level a+L) with dy = x.
FloerComplex elementary(SetupPtr ctx, const QuadReal& a, const ExtQuad& L, int k);

FloerComplex direct_sum(const std::vector<FloerComplex>& summands);

// Degree -k part is the dual space of C_k, boundary the adjoint, levels negated.
FloerComplex dual_complex(const FloerComplex& c);

FloerComplex coefficient_extension(const FloerComplex& c, const ValueGroup& larger);

// Per-degree chain map with a uniform level shift delta.
struct FilteredChainMap {
	FloerComplex source;
	FloerComplex target;
	QuadReal shift;
	std::map<int, LinearMap> maps;  // degree -> map C_k -> D_k; absent degrees are zero

	LinearMap map_at(int k) const;
	FilteredVector apply(int k, const FilteredVector& v) const { return map_at(k).apply(v); }
};

ValidationReport validate_chain_map(const FilteredChainMap& phi);

// Orthogonal complements F_k of ker d_k, read off singular value
// decompositions of the boundary operator, plus the matching kernel bases.
struct Splitting {
	std::map<int, std::vector<FilteredVector>> F;
	std::map<int, std::vector<FilteredVector>> kernel;
};

Splitting splitting(const FloerComplex& c);

// Phi^pi = pi_D Phi pi_C + Phi (I - pi_C): a chain map that is split
// (carries F^C into F^D), agrees with Phi on ker d, and obeys the same shift.
FilteredChainMap split_map(const FilteredChainMap& phi, const Splitting& sc, const Splitting& sd);

enum class CylinderFiltration { plain, shift_target, shift_source };

// Cyl(Phi)_k = C_k + D_k + C_{k-1}, d(c,d,e) = (dc - e, dd + Phi e, -dc e).
// Generator level offsets per variant: plain (0,0,0) with delta = 0 required,
// shift_target aka l0 (delta,0,delta), shift_source aka l1 (0,delta,2delta).
FloerComplex mapping_cylinder(const FilteredChainMap& phi, CylinderFiltration variant, const QuadReal& delta);

// Cone(Phi)_k = D_k + C_{k-1}, d(d,e) = (dd - Phi e, -dc e),
// l(d,e) = max(l_D(d) + delta, l_C(e) + 2 delta).
FloerComplex mapping_cone(const FilteredChainMap& phi, const QuadReal& delta);

} // namespace barnov

#endif
