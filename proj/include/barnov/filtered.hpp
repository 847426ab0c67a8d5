// Orthogonalizable spaces over the Novikov field and the constructive
// orthogonality toolkit: level function, the pivoting elimination loop,
// best approximation, Gram-Schmidt, orthogonality testing, complements,
// duals, coefficient extension, filtration spectra, exact linear solving.
#ifndef BARNOV_FILTERED_HPP
#define BARNOV_FILTERED_HPP

#include "barnov/novikov.hpp"

#include <optional>

namespace barnov {

// (Lambda^n, -nu_t): the reference basis e_1..e_n is orthogonal by
// construction with levels t_1..t_n.
struct FilteredSpace {
	SetupPtr ctx;
	std::vector<QuadReal> levels;

	int dim() const { return static_cast<int>(levels.size()); }
	const GroundField& field() const { return ctx->field; }
	const ValueGroup& group() const { return ctx->group; }
	std::int64_t disc() const { return ctx->disc(); }
};

FilteredSpace make_space(SetupPtr ctx, std::vector<QuadReal> levels);
FilteredSpace zero_space(SetupPtr ctx);

// coordinates in the reference basis of its space
struct FilteredVector {
	std::vector<NovikovScalar> c;

	bool is_zero() const;
	int dim() const { return static_cast<int>(c.size()); }
	bool operator==(const FilteredVector& o) const;
	bool operator!=(const FilteredVector& o) const { return !(*this == o); }
};

FilteredVector zero_vector(const FilteredSpace& s);
FilteredVector basis_vector(const FilteredSpace& s, int i);
FilteredVector add(const FilteredVector& v, const FilteredVector& w);
FilteredVector sub(const FilteredVector& v, const FilteredVector& w);
FilteredVector scale(const NovikovScalar& lambda, const FilteredVector& v);
// v - lambda * w
FilteredVector subtract_scaled(const FilteredVector& v, const NovikovScalar& lambda, const FilteredVector& w);

// l(v) = max_i (t_i - nu(v_i)); -inf exactly on the zero vector
ExtQuad level(const FilteredSpace& s, const FilteredVector& v);

struct dependent_error : std::runtime_error {
	int index;
	explicit dependent_error(int i)
	    : std::runtime_error("linearly dependent input at index " + std::to_string(i)), index(i) {}
};

struct TriangularizeResult {
	std::vector<FilteredVector> cols;          // evolved columns
	std::vector<std::pair<int, int>> pivots;   // (row, col) pairs in order
	std::vector<char> zeroed;                  // which columns ended zero
	// the evolved domain basis (column j as a combination of the inputs),
	// filled when track_domain is set
	std::vector<FilteredVector> domain_vectors;

	int rank() const { return static_cast<int>(pivots.size()); }
};

// The elimination loop: repeatedly pick the pivot entry maximizing
// l_D(w_i) - nu(A_ij) - l_C(v_j) over unused columns, then clear that row
// from the other unused columns by column operations.  The nonzero final
// columns are orthogonal regardless of the supplied domain levels or of a
// forced choice of pivot-column order: the orthogonality argument uses only
// within-column row optimality and the elimination zero pattern, both of
// which are preserved here.  With forced_prefix = p the first p pivots are
// columns 0..p-1 in order (each must be nonzero at its turn), the row being
// chosen optimally within the column; afterwards pivoting is free.
// domain_levels, when given, feed the -l_C(v_j) term of the pivot rule
// (claim: column levels are invariant during the loop, so these stay valid).
// Ties break toward the smallest row index, then the smallest column index.
//
// Internally the updates run fraction-free (Bareiss): columns are cleared to
// polynomial entries, cross-multiplied updates divide exactly by the
// previous pivot, and the accumulated column scalings are divided back out
// at the end, so the results equal the plain division form exactly while
// polynomial supports stay minor-sized.
TriangularizeResult triangularize(const FilteredSpace& codomain, std::vector<FilteredVector> cols, int forced_prefix,
                                  const std::vector<QuadReal>* domain_levels = nullptr, bool track_domain = false);

struct BestApproximation {
	FilteredVector w0;        // element of span(W) closest to x
	FilteredVector residual;  // x - w0, orthogonal to span(W)
	ExtQuad dist;             // l(x - w0); -inf iff x lies in span(W)
};

// W_basis must be a basis of W; orthogonality of W_basis is the caller's
// contract (detectable violations, i.e. dependence, raise dependent_error).
BestApproximation best_approximation(const FilteredSpace& s, const std::vector<FilteredVector>& W_basis,
                                     const FilteredVector& x);

// Output spans the same subspace; the first prefix entries are passed
// through; entry i has the form v_i - (combination of v_0..v_{i-1}).
std::vector<FilteredVector> gram_schmidt(const FilteredSpace& s, const std::vector<FilteredVector>& vectors,
                                         int prefix = 0);

// True iff the collection is orthogonal: every member's level equals its
// best-approximation distance to the span of the others.  Collections that
// are linearly dependent or contain zero are not orthogonal here.
bool is_orthogonal(const FilteredSpace& s, const std::vector<FilteredVector>& vectors);

// Basis of a V with U + V = whole space, U orthogonal to V (greedy extension
// by reference basis vectors; complements are not unique).
std::vector<FilteredVector> orthogonal_complement(const FilteredSpace& s, const std::vector<FilteredVector>& U_basis);

// Dual reference basis is orthogonal at negated levels.
FilteredSpace dual_space(const FilteredSpace& s);

// Same levels over the larger group; requires Gamma <= Gamma'.
FilteredSpace extend_coefficients_space(const FilteredSpace& s, const ValueGroup& larger);

// Multiset of basis-level cosets, sorted by representative; invariant under
// replacing the reference basis by any orthogonal basis of the same space.
std::vector<ValueGroup::Rep> filtration_spectrum(const FilteredSpace& s);
bool spectra_equal(const ValueGroup& group, const std::vector<ValueGroup::Rep>& a,
                   const std::vector<ValueGroup::Rep>& b);

// Exact solve of sum_j x_j cols[j] = b; nullopt when inconsistent.  With a
// dependent column set, free variables are set to zero.
std::optional<std::vector<NovikovScalar>> solve_linear(const std::vector<FilteredVector>& cols,
                                                       const FilteredVector& b, const FilteredSpace& s);

// same system, many right-hand sides, one elimination
std::vector<std::optional<std::vector<NovikovScalar>>> solve_linear_many(const std::vector<FilteredVector>& cols,
                                                                         const std::vector<FilteredVector>& rhs,
                                                                         const FilteredSpace& s);

std::optional<std::vector<FilteredVector>> invert_matrix(const std::vector<FilteredVector>& cols,
                                                         const FilteredSpace& s);

// sum_j coeffs[j] * cols[j]
FilteredVector combine(const std::vector<FilteredVector>& cols, const std::vector<NovikovScalar>& coeffs,
                       const FilteredSpace& codomain);

int rank_of(const std::vector<FilteredVector>& cols, const FilteredSpace& s);

// v scaled by the product of its distinct entry denominators: a polynomial
// representative of the same line (levels shift by the scalar's valuation)
FilteredVector clear_denominators(const FilteredVector& v);

} // namespace barnov

#endif
