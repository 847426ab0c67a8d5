// Degree-wise verbose and concise barcodes read off singular value
// decompositions, the classical column-reduction oracle for trivial value
// groups, and spectral invariants of homology classes.
#ifndef BARNOV_BARCODE_HPP
#define BARNOV_BARCODE_HPP

#include "barnov/complex.hpp"

namespace barnov {

struct Bar {
	int degree = 0;
	QuadReal a;          // coset representative, canonicalized when possible
	bool a_canonical = true;
	ExtQuad length;      // >= 0; concise barcodes carry only positive lengths

	bool infinite() const { return length.is_pos_inf(); }
};

struct Barcode {
	std::vector<Bar> bars;

	std::vector<Bar> degree_slice(int k) const;
	std::vector<int> occupied_degrees() const;
	std::size_t size() const { return bars.size(); }
};

// deterministic order: (degree, a, length)
void sort_bars(Barcode& bc);

struct BarcodePair {
	Barcode verbose;
	Barcode concise;
};

// Per degree k: an SVD of d_k yields an orthogonal kernel basis defining
// Z_k; the columns of d_{k+1} are re-expressed in Z_k coordinates; an SVD of
// that map gives the finite pairs (l(x_i) mod Gamma, l(y_i) - l(x_i)) and
// one infinite bar per complement vector.  Concise = verbose minus
// zero-length bars.
BarcodePair barcodes(const FloerComplex& c, bool debug_checks = false);

// Classical persistence column reduction over K on the level-ordered
// generator basis; requires a trivial value group.  Output bars match the
// concise barcode under [a, a+L) <-> (a, L).
Barcode classical_oracle(const FloerComplex& c);

// rho = minimal level of a chain representing the class of `cycle`;
// -inf exactly on boundaries.
ExtQuad spectral_invariant(const FloerComplex& c, int k, const FilteredVector& cycle);

// multiset equality with coset-aware first coordinates
bool barcodes_equal(const ValueGroup& group, const Barcode& a, const Barcode& b);
bool bars_equal(const ValueGroup& group, const Bar& x, const Bar& y);

} // namespace barnov

#endif
