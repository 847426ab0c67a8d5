#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barnov/complex.hpp"
#include "barnov/selftest.hpp"

using namespace barnov;

namespace {

const std::int64_t D = 2;
QuadReal q(long n, long den = 1) { return QuadReal(BigRat(n, den), BigRat(0), D); }
NovikovScalar ns(long v) { return NovikovScalar::constant(GroundScalar::from_int(GroundField::Q(), v), D); }

} // namespace

TEST_CASE("svd of the worked 2x2 example") {
	// domain levels (1,0), codomain levels (0,0), columns (e1, e1+e2)
	SetupPtr ctx = make_setup(GroundField::Q(), ValueGroup::trivial_group(D));
	FilteredSpace dom = make_space(ctx, {q(1), q(0)});
	FilteredSpace cod = make_space(ctx, {q(0), q(0)});
	LinearMap A = zero_map(dom, cod);
	A.cols[0].c[0] = ns(1);
	A.cols[1].c[0] = ns(1);
	A.cols[1].c[1] = ns(1);

	SvdResult r = svd(A, true);
	CHECK(r.rank == 2);
	REQUIRE(r.diffs.size() == 2);
	CHECK(r.diffs[0] == q(1));
	CHECK(r.diffs[1] == q(0));
	// y = (v1 - v2, v2), x = (-e2, e1+e2)
	CHECK(r.y[0].c[0] == ns(1));
	CHECK(r.y[0].c[1] == ns(-1));
	CHECK(r.y[1].c[0] == ns(0));
	CHECK(r.y[1].c[1] == ns(1));
	CHECK(r.x[0].c[0] == ns(0));
	CHECK(r.x[0].c[1] == ns(-1));
	CHECK(r.x[1].c[0] == ns(1));
	CHECK(r.x[1].c[1] == ns(1));

	// boundary depths read off the diffs
	auto beta = boundary_depths(A, 3);
	CHECK(beta == std::vector<QuadReal>{q(1), q(0), q(0)});
	CHECK(torsion_exponents(A, 3) == beta);
}

TEST_CASE("svd of the zero map") {
	SetupPtr ctx = make_setup(GroundField::Q(), ValueGroup::trivial_group(D));
	FilteredSpace dom = make_space(ctx, {q(2), q(1)});
	FilteredSpace cod = make_space(ctx, {q(0)});
	SvdResult r = svd(zero_map(dom, cod), true);
	CHECK(r.rank == 0);
	CHECK(r.y.size() == 2);
	CHECK(r.x.size() == 1);
	CHECK(r.y[0] == basis_vector(dom, 0));
	CHECK(r.x[0] == basis_vector(cod, 0));
	CHECK(boundary_depths(zero_map(dom, cod), 2) == std::vector<QuadReal>{q(0), q(0)});
}

TEST_CASE("svd of an elementary boundary has diff L") {
	SetupPtr ctx = make_setup(GroundField::Q(), ValueGroup(D, {q(1, 2)}));
	FloerComplex e = elementary(ctx, q(1), ExtQuad(q(2)), 0);
	LinearMap d1 = e.boundary(1);
	SvdResult r = svd(d1, true);
	CHECK(r.rank == 1);
	CHECK(r.diffs[0] == q(2));
	CHECK(r.y_levels[0] == q(3));
	CHECK(r.x_levels[0] == q(1));
	CHECK(boundary_depths(d1)[0] == q(2));
}

TEST_CASE("robustness oracle on elementary and tiny instances") {
	SetupPtr ctx = make_setup(GroundField::Fp(2), ValueGroup::trivial_group(0));
	// E(0, 2, 0) boundary over F2: beta_1 = 2
	FloerComplex e = elementary(ctx, QuadReal::integer(0, 0), ExtQuad(QuadReal::integer(2, 0)), 0);
	LinearMap d1 = e.boundary(1);
	CHECK(robustness_oracle(d1, 1) == QuadReal::integer(2, 0));
	CHECK(robustness_oracle(d1, 2) == QuadReal::integer(0, 0));
	CHECK(boundary_depths(d1, 1)[0] == QuadReal::integer(2, 0));

	// zero map
	FilteredSpace dom = make_space(ctx, {QuadReal::integer(0, 0)});
	FilteredSpace cod = make_space(ctx, {QuadReal::integer(0, 0)});
	CHECK(robustness_oracle(zero_map(dom, cod), 1) == QuadReal::integer(0, 0));

	// the 2x2 example recast over F2 with levels (1,0)/(0,0): (beta1, beta2) = (1, 0)
	FilteredSpace dom2 = make_space(ctx, {QuadReal::integer(1, 0), QuadReal::integer(0, 0)});
	FilteredSpace cod2 = make_space(ctx, {QuadReal::integer(0, 0), QuadReal::integer(0, 0)});
	LinearMap A = zero_map(dom2, cod2);
	NovikovScalar one = NovikovScalar::one(ctx->field, 0);
	A.cols[0].c[0] = one;
	A.cols[1].c[0] = one;
	A.cols[1].c[1] = one;
	CHECK(robustness_oracle(A, 1) == QuadReal::integer(1, 0));
	CHECK(robustness_oracle(A, 2) == QuadReal::integer(0, 0));
	auto beta = boundary_depths(A, 2);
	CHECK(beta[0] == QuadReal::integer(1, 0));
	CHECK(beta[1] == QuadReal::integer(0, 0));

	// guards
	SetupPtr ctxQ = make_setup(GroundField::Q(), ValueGroup::trivial_group(0));
	FilteredSpace sq = make_space(ctxQ, {QuadReal::integer(0, 0)});
	CHECK_THROWS_AS(robustness_oracle(zero_map(sq, sq), 1), std::domain_error);
}

TEST_CASE("svd postconditions and claim 1 on random maps") {
	selftest::Rng rng(321);
	std::vector<ValueGroup> groups{ValueGroup::trivial_group(D), ValueGroup(D, {q(1, 2)}),
	                               ValueGroup(D, {q(1), QuadReal(BigRat(0), BigRat(1), D)})};
	for (int t = 0; t < 200; ++t) {
		SetupPtr ctx = make_setup(t % 3 == 1 ? GroundField::Fp(2) : GroundField::Q(), groups[t % 3]);
		int n = rng.range(0, 4), m = rng.range(1, 4);
		std::vector<QuadReal> dl, cl;
		for (int j = 0; j < n; ++j) dl.push_back(selftest::random_level(rng, D, true));
		for (int i = 0; i < m; ++i) cl.push_back(selftest::random_level(rng, D, true));
		FilteredSpace dom = make_space(ctx, dl), cod = make_space(ctx, cl);
		LinearMap A = zero_map(dom, cod);
		for (int j = 0; j < n; ++j)
			for (int i = 0; i < m; ++i)
				if (rng.chance(1, 2)) A.cols[j].c[i] = selftest::random_novikov(rng, ctx, 2);

		SvdResult r = svd(A);
		CHECK_NOTHROW(check_svd(A, r));

		// Claim 1: the multiset of domain-basis levels survives
		std::vector<QuadReal> got = r.y_levels, want = dl;
		std::sort(got.begin(), got.end());
		std::sort(want.begin(), want.end());
		CHECK(got == want);
	}
}

TEST_CASE("boundary depths are invariant under filtered changes of basis") {
	selftest::Rng rng(654);
	std::vector<ValueGroup> groups{ValueGroup::trivial_group(D), ValueGroup(D, {q(1, 2)})};
	for (int t = 0; t < 40; ++t) {
		SetupPtr ctx = make_setup(GroundField::Q(), groups[t % 2]);
		selftest::NormalFormOptions opt;
		opt.max_bars = 3;
		FloerComplex c = selftest::random_complex(rng, ctx, opt);
		FloerComplex moved = selftest::scramble(rng, c).complex;
		for (int k = c.k_min; k <= c.k_max() + 1; ++k) {
			auto b0 = boundary_depths(c.boundary(k), 5);
			auto b1 = boundary_depths(moved.boundary(k), 5);
			CHECK(b0 == b1);
		}
	}
}
