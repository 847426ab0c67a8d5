#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barnov/distance.hpp"
#include "barnov/selftest.hpp"

using namespace barnov;

namespace {

const std::int64_t D = 2;
QuadReal q(long n, long den = 1) { return QuadReal(BigRat(n, den), BigRat(0), D); }

Bar bar(const QuadReal& a, const ExtQuad& L, int degree = 0) { return Bar{degree, a, true, L}; }
Bar fbar(long an, long ad, long ln, long ld = 1) { return bar(q(an, ad), ExtQuad(q(ln, ld))); }
Bar ibar(long an, long ad = 1) { return bar(q(an, ad), ExtQuad::pos_inf()); }

const ValueGroup trivial = ValueGroup::trivial_group(D);
const ValueGroup zgroup(D, {q(1)});
const ValueGroup dense(D, {q(1), QuadReal(BigRat(0), BigRat(1), D)});

} // namespace

TEST_CASE("bar distance") {
	// trivial group: max of endpoint gaps
	CHECK(bar_distance(trivial, fbar(0, 1, 1), fbar(1, 2, 1)) == ExtQuad(q(1, 2)));
	// Z: minimize |2/5 + g| over integers g
	CHECK(bar_distance(zgroup, fbar(2, 5, 1), fbar(0, 1, 1)) == ExtQuad(q(2, 5)));
	// dense: |L - L'| / 2
	CHECK(bar_distance(dense, fbar(1, 3, 2), fbar(7, 9, 5)) == ExtQuad(q(3, 2)));
	// infinite bars compare by coset distance; mixed pairs are infinitely far
	CHECK(bar_distance(trivial, ibar(1), ibar(3)) == ExtQuad(q(2)));
	CHECK(bar_distance(zgroup, ibar(1), bar(q(8, 5), ExtQuad::pos_inf())) == ExtQuad(q(2, 5)));
	CHECK(bar_distance(dense, ibar(1), ibar(5)) == ExtQuad(q(0)));
	CHECK(bar_distance(trivial, ibar(0), fbar(0, 1, 1)).is_pos_inf());
	// discrete minimization picks the bracketing lattice shift
	CHECK(bar_distance(zgroup, fbar(0, 1, 1), fbar(1, 2, 1)) == ExtQuad(q(1, 2)));
	CHECK(bar_distance(zgroup, fbar(9, 10, 1), fbar(0, 1, 1)) == ExtQuad(q(1, 10)));
}

TEST_CASE("bottleneck distance worked examples") {
	// S = T: zero with the identity matching
	std::vector<Bar> S{fbar(0, 1, 3), ibar(2)};
	MatchingResult same = bottleneck_degree(trivial, S, S);
	CHECK(same.delta == ExtQuad(q(0)));
	CHECK(same.pairs.size() == 2);
	CHECK(validate_matching(trivial, S, S, same));

	// infinite bar against a finite one: infinity
	MatchingResult inf = bottleneck_degree(trivial, {ibar(0)}, {fbar(0, 1, 1)});
	CHECK(inf.delta.is_pos_inf());

	// S = {(0,3), (1,1)}, T = {(1/2,3)}: match the long bars, discard (1,1)
	MatchingResult ex = bottleneck_degree(trivial, {fbar(0, 1, 3), fbar(1, 1, 1)}, {fbar(1, 2, 3)});
	CHECK(ex.delta == ExtQuad(q(1, 2)));
	CHECK(validate_matching(trivial, {fbar(0, 1, 3), fbar(1, 1, 1)}, {fbar(1, 2, 3)}, ex));
	CHECK(matching_oracle(trivial, {fbar(0, 1, 3), fbar(1, 1, 1)}, {fbar(1, 2, 3)}) == ExtQuad(q(1, 2)));

	// one side empty: unmatch penalty L/2
	Barcode empty, single;
	single.bars.push_back(fbar(0, 1, 4));
	CHECK(bottleneck_all(trivial, empty, single) == ExtQuad(q(2)));

	// sup over degrees
	Barcode a, b;
	a.bars.push_back(fbar(0, 1, 1));
	a.bars.push_back(bar(q(0), ExtQuad(q(4)), 1));
	b.bars.push_back(fbar(1, 2, 1));
	CHECK(bottleneck_all(trivial, a, b) == ExtQuad(q(2)));

	// identical barcodes across degrees
	CHECK(bottleneck_all(zgroup, a, a) == ExtQuad(q(0)));
}

TEST_CASE("pseudometric sanity on sampled barcodes") {
	selftest::Rng rng(88);
	const ValueGroup* groups[] = {&trivial, &zgroup, &dense};
	for (int t = 0; t < 60; ++t) {
		const ValueGroup& g = *groups[t % 3];
		auto mk = [&](int n) {
			std::vector<Bar> bars;
			for (int i = 0; i < n; ++i) {
				Bar b = rng.chance(1, 5)
				            ? bar(selftest::random_level(rng, D, true), ExtQuad::pos_inf())
				            : bar(selftest::random_level(rng, D, true), ExtQuad(q(rng.range(1, 6), rng.range(1, 3))));
				bars.push_back(b);
			}
			return bars;
		};
		std::vector<Bar> S = mk(rng.range(0, 3)), T = mk(rng.range(0, 3)), U = mk(rng.range(0, 3));
		ExtQuad st = bottleneck_degree(g, S, T).delta;
		ExtQuad ts = bottleneck_degree(g, T, S).delta;
		ExtQuad ss = bottleneck_degree(g, S, S).delta;
		ExtQuad su = bottleneck_degree(g, S, U).delta;
		ExtQuad ut = bottleneck_degree(g, U, T).delta;
		CHECK(ss == ExtQuad(q(0)));
		CHECK(st == ts);
		if (!su.is_pos_inf() && !ut.is_pos_inf()) CHECK(st <= su + ut);
		// agreement with the oracle and witness validity
		CHECK(st == matching_oracle(g, S, T));
		CHECK(validate_matching(g, S, T, bottleneck_degree(g, S, T)));
	}
}

TEST_CASE("matching oracle guard") {
	std::vector<Bar> big(6, fbar(0, 1, 1)), big2(6, fbar(1, 1, 1));
	CHECK_THROWS_AS(matching_oracle(trivial, big, big2), std::domain_error);
}
