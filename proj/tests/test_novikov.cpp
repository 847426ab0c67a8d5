#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barnov/novikov.hpp"
#include "barnov/selftest.hpp"

using namespace barnov;

namespace {

const GroundField Q = GroundField::Q();

NovikovScalar T(const BigRat& g, std::int64_t d = 2) {
	return NovikovScalar::monomial(GroundScalar::one(Q), QuadReal(g, BigRat(0), d));
}
NovikovScalar c(long v, std::int64_t d = 2) { return NovikovScalar::constant(GroundScalar::from_int(Q, v), d); }

} // namespace

TEST_CASE("valuation basics") {
	CHECK(NovikovScalar::zero(Q, 2).valuation().is_pos_inf());

	// 3 T^{1/2} + 2 T^2 over Gamma = (1/2) Z has valuation 1/2
	NovikovScalar s = c(3) * T(BigRat(1, 2)) + c(2) * T(BigRat(2));
	CHECK(s.valuation() == ExtQuad(QuadReal(BigRat(1, 2), BigRat(0), 2)));

	// T / (1 - T): nu = nu(num) - nu(den) = 1
	NovikovScalar frac = T(BigRat(1)) / (c(1) - T(BigRat(1)));
	CHECK(frac.valuation() == ExtQuad(QuadReal::integer(1, 2)));
}

TEST_CASE("field arithmetic") {
	CHECK(T(BigRat(1)) * T(BigRat(2)) == T(BigRat(3)));
	CHECK((T(BigRat(1)) * T(BigRat(2))).valuation() == ExtQuad(QuadReal::integer(3, 2)));

	NovikovScalar inv = (c(1) - T(BigRat(1))).inverse();
	CHECK(inv.valuation() == ExtQuad(QuadReal::integer(0, 2)));
	CHECK(inv * (c(1) - T(BigRat(1))) == c(1));

	// cancellation: (1 - T) + T = 1
	CHECK((c(1) - T(BigRat(1))) + T(BigRat(1)) == c(1));
	CHECK_THROWS_AS(c(1) / NovikovScalar::zero(Q, 2), std::domain_error);
}

TEST_CASE("normalization keeps the denominator monic with valuation zero") {
	// (2T)/2 -> T
	NovikovScalar a(GroupRingPoly::monomial(GroundScalar::from_int(Q, 2), QuadReal::integer(1, 2)),
	                GroupRingPoly::constant(GroundScalar::from_int(Q, 2), 2));
	CHECK(a == T(BigRat(1)));
	CHECK(a.den().is_one());

	// T^2 / T -> T
	NovikovScalar b(GroupRingPoly::monomial(GroundScalar::one(Q), QuadReal::integer(2, 2)),
	                GroupRingPoly::monomial(GroundScalar::one(Q), QuadReal::integer(1, 2)));
	CHECK(b == T(BigRat(1)));
	CHECK(b.den().is_one());

	// 0 / (1 - T) -> 0/1
	NovikovScalar z(GroupRingPoly::zero(Q, 2), (c(1) - T(BigRat(1))).num());
	CHECK(z.is_zero());
	CHECK(z.den().is_one());

	// denominator normalized: nu(den) = 0, lowest coefficient 1
	NovikovScalar f = (c(2) * T(BigRat(1)) + c(3) * T(BigRat(2))) / (c(5) * T(BigRat(1)) - c(5) * T(BigRat(3)));
	CHECK(f.den().valuation() == ExtQuad(QuadReal::integer(0, 2)));
	CHECK(f.den().lowest_coeff().is_one());
}

TEST_CASE("exponent validation against the value group") {
	ValueGroup half(2, {QuadReal(BigRat(1, 2), BigRat(0), 2)});
	GroupRingPoly ok = GroupRingPoly::monomial(GroundScalar::one(Q), QuadReal(BigRat(3, 2), BigRat(0), 2));
	CHECK_NOTHROW(ok.check_exponents(half));
	GroupRingPoly bad = GroupRingPoly::monomial(GroundScalar::one(Q), QuadReal(BigRat(1, 3), BigRat(0), 2));
	CHECK_THROWS_AS(bad.check_exponents(half), config_error);
}

TEST_CASE("valuation axioms and normalization idempotence on sampled values") {
	selftest::Rng rng(11);
	ValueGroup dense(2, {QuadReal::integer(1, 2), QuadReal(BigRat(0), BigRat(1), 2)});
	SetupPtr ctx = make_setup(Q, dense);
	SetupPtr ctx2 = make_setup(GroundField::Fp(5), dense);
	for (int t = 0; t < 500; ++t) {
		const SetupPtr& cx = t % 2 ? ctx2 : ctx;
		NovikovScalar x = selftest::random_novikov(rng, cx, 3);
		NovikovScalar y = selftest::random_novikov(rng, cx, 3);
		CHECK((x * y).valuation() == x.valuation() + y.valuation());
		CHECK((x + y).valuation() >= min(x.valuation(), y.valuation()));
		if (x.valuation() != y.valuation()) CHECK((x + y).valuation() == min(x.valuation(), y.valuation()));
		// arithmetic independent of representation: compare (x/y)*y with x
		CHECK((x / y) * y == x);
		CHECK(x - x == NovikovScalar::zero(cx->field, 2));
		// normalized denominators stay normalized through arithmetic
		NovikovScalar w = x / y + y / x;
		if (!w.is_zero()) {
			CHECK(w.den().valuation() == ExtQuad(QuadReal::integer(0, 2)));
			CHECK(w.den().lowest_coeff().is_one());
		}
	}
}
