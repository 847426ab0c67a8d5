// Singular value decompositions of maps between orthogonalizable spaces,
// generalized boundary depths, torsion exponents, and the exhaustive
// robustness oracle used to cross-check them on small prime-field instances.
#ifndef BARNOV_SVD_HPP
#define BARNOV_SVD_HPP

#include "barnov/filtered.hpp"

namespace barnov {

struct LinearMap {
	FilteredSpace domain;
	FilteredSpace codomain;
	std::vector<FilteredVector> cols;  // images of the domain reference basis

	FilteredVector apply(const FilteredVector& v) const { return combine(cols, v.c, codomain); }
	bool is_zero() const;
};

LinearMap zero_map(FilteredSpace domain, FilteredSpace codomain);
LinearMap identity_map(const FilteredSpace& s);
// adjoint: dual(codomain) -> dual(domain), matrix transposed
LinearMap adjoint_map(const LinearMap& A);
LinearMap compose(const LinearMap& A, const LinearMap& B);  // A after B

// Orthogonal ordered bases (y_1..y_n) of the domain and (x_1..x_m) of the
// codomain with A y_i = x_i for i <= r, A y_i = 0 beyond, (y_{r+1}..y_n) an
// orthogonal basis of ker A, (x_1..x_r) one of Im A, and the level gaps
// l(y_i) - l(x_i) nonincreasing.
struct SvdResult {
	std::vector<FilteredVector> y;
	std::vector<FilteredVector> x;
	int rank = 0;
	std::vector<QuadReal> y_levels;  // l(y_i), all i
	std::vector<QuadReal> x_levels;  // l(x_i), all i
	std::vector<QuadReal> diffs;     // l(y_i) - l(x_i) for i < rank

	std::vector<FilteredVector> kernel_basis() const { return {y.begin() + rank, y.end()}; }
};

// The pivot loop with true domain levels, images sorted by level gap
// (stable: ties keep pivot discovery order), kernel vectors in original
// index order, codomain completed by an orthogonal complement of Im A.
SvdResult svd(const LinearMap& A, bool debug_checks = false);

// Re-checks all four SVD conditions; throws std::logic_error on violation.
void check_svd(const LinearMap& A, const SvdResult& r);

// beta_1 >= beta_2 >= ... >= beta_r, padded with zeros up to min_count.
std::vector<QuadReal> boundary_depths(const LinearMap& A, int min_count = 0);
// identical list (torsion exponents coincide with the boundary depths)
std::vector<QuadReal> torsion_exponents(const LinearMap& A, int min_count = 0);

// Exhaustive sup-inf over delta-robust subspaces; requires F_2 coefficients,
// trivial value group, and desk-size dimensions (refuses otherwise).
QuadReal robustness_oracle(const LinearMap& A, int k);

} // namespace barnov

#endif
