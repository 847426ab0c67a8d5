#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barnov/selftest.hpp"

using namespace barnov;

namespace {

const std::int64_t D = 2;

SetupPtr ctx_trivial() { return make_setup(GroundField::Q(), ValueGroup::trivial_group(D)); }
SetupPtr ctx_z() { return make_setup(GroundField::Q(), ValueGroup(D, {QuadReal::integer(1, D)})); }

QuadReal q(long n, long den = 1) { return QuadReal(BigRat(n, den), BigRat(0), D); }
NovikovScalar ns(long v) { return NovikovScalar::constant(GroundScalar::from_int(GroundField::Q(), v), D); }
NovikovScalar T(long num, long den = 1) {
	return NovikovScalar::monomial(GroundScalar::one(GroundField::Q()), q(num, den));
}

FilteredVector vec(const FilteredSpace& s, std::vector<NovikovScalar> entries) {
	FilteredVector v;
	v.c = std::move(entries);
	if (v.dim() != s.dim()) throw std::logic_error("bad test vector");
	return v;
}

} // namespace

TEST_CASE("level function") {
	// Example exor: levels (1, 0) over the trivial group
	FilteredSpace s = make_space(ctx_trivial(), {q(1), q(0)});
	CHECK(level(s, zero_vector(s)).is_neg_inf());
	CHECK(level(s, vec(s, {ns(1), ns(1)})) == ExtQuad(q(1)));  // x + y sits at level 1
	CHECK(level(s, vec(s, {ns(0), ns(3)})) == ExtQuad(q(0)));

	// (F2): level of T e_1 with t = 0 over Gamma = Z is -1
	FilteredSpace z = make_space(ctx_z(), {q(0)});
	CHECK(level(z, vec(z, {T(1)})) == ExtQuad(q(-1)));
}

TEST_CASE("triangularize on the worked two-column example") {
	// codomain levels (0,0), columns (e1, e1+e2), free pivoting
	FilteredSpace s = make_space(ctx_trivial(), {q(0), q(0)});
	std::vector<FilteredVector> cols{vec(s, {ns(1), ns(0)}), vec(s, {ns(1), ns(1)})};
	TriangularizeResult tri = triangularize(s, cols, 0);
	CHECK(tri.rank() == 2);
	CHECK(tri.pivots.size() == 2);
	CHECK(is_orthogonal(s, tri.cols));
	// all-zero columns: nothing happens
	TriangularizeResult none = triangularize(s, {zero_vector(s), zero_vector(s)}, 0);
	CHECK(none.rank() == 0);
	CHECK(none.zeroed == std::vector<char>{1, 1});
	// single nonzero column comes back unchanged with one pivot
	TriangularizeResult one = triangularize(s, {cols[1]}, 0);
	CHECK(one.rank() == 1);
	CHECK(one.cols[0] == cols[1]);
}

TEST_CASE("best approximation realizes the distance minimizer") {
	FilteredSpace s = make_space(ctx_trivial(), {q(1), q(0)});
	FilteredVector x = basis_vector(s, 0), y = basis_vector(s, 1);
	FilteredVector xy = add(x, y);

	// query orthogonal to W: w0 = 0
	auto ba = best_approximation(s, {y}, x);
	CHECK(ba.w0.is_zero());
	CHECK(ba.dist == level(s, x));

	// query in W
	auto inw = best_approximation(s, {xy}, xy);
	CHECK(inw.dist.is_neg_inf());
	CHECK(inw.w0 == xy);

	// W = span{x+y}, query x: distance 0 via w0 = x+y
	auto opt = best_approximation(s, {xy}, x);
	CHECK(opt.dist == ExtQuad(q(0)));
	CHECK(opt.w0 == xy);
	CHECK(opt.residual == sub(x, xy));

	// dependent W raises the contract error
	CHECK_THROWS_AS(best_approximation(s, {xy, xy}, x), dependent_error);
}

TEST_CASE("gram_schmidt matches the worked examples") {
	FilteredSpace s = make_space(ctx_trivial(), {q(1), q(0)});
	FilteredVector x = basis_vector(s, 0), y = basis_vector(s, 1);
	FilteredVector xy = add(x, y);

	auto gs1 = gram_schmidt(s, {x, xy});
	CHECK(gs1[0] == x);
	CHECK(gs1[1] == y);

	auto gs2 = gram_schmidt(s, {xy, x}, 1);
	CHECK(gs2[0] == xy);
	CHECK(gs2[1] == scale(-ns(1), y));  // x - (x+y)

	// already-orthogonal input with full prefix is untouched
	auto gs3 = gram_schmidt(s, {xy, y}, 2);
	CHECK(gs3[0] == xy);
	CHECK(gs3[1] == y);

	CHECK_THROWS_AS(gram_schmidt(s, {x, xy, y}), dependent_error);
	try {
		gram_schmidt(s, {x, xy, y});
	} catch (const dependent_error& e) {
		CHECK(e.index == 2);
	}
}

TEST_CASE("orthogonality testing: paper example exor") {
	FilteredSpace s = make_space(ctx_trivial(), {q(1), q(0)});
	FilteredVector x = basis_vector(s, 0), y = basis_vector(s, 1);
	CHECK(is_orthogonal(s, {x, y}));
	CHECK_FALSE(is_orthogonal(s, {x, add(x, y)}));
	CHECK(is_orthogonal(s, {add(x, y), y}));
	CHECK_FALSE(is_orthogonal(s, {x, zero_vector(s)}));
	CHECK_FALSE(is_orthogonal(s, {x, x}));
	CHECK(is_orthogonal(s, {}));
}

TEST_CASE("orthogonal complement") {
	SetupPtr ctx = ctx_trivial();
	FilteredSpace s = make_space(ctx, {q(0), q(0)});
	// U = 0: the reference basis comes back
	auto whole = orthogonal_complement(s, {});
	CHECK(whole.size() == 2);
	CHECK(whole[0] == basis_vector(s, 0));
	CHECK(whole[1] == basis_vector(s, 1));
	// U = everything: empty complement
	CHECK(orthogonal_complement(s, whole).empty());
	// U = span{e2 - e1}
	FilteredVector u = sub(basis_vector(s, 1), basis_vector(s, 0));
	auto comp = orthogonal_complement(s, {u});
	REQUIRE(comp.size() == 1);
	std::vector<FilteredVector> joint{u, comp[0]};
	CHECK(is_orthogonal(s, joint));
}

TEST_CASE("dual and extended spaces, spectrum") {
	SetupPtr ctx = ctx_z();
	FilteredSpace s = make_space(ctx, {q(5, 2), q(1, 2)});
	FilteredSpace ds = dual_space(s);
	CHECK(ds.levels[0] == q(-5, 2));
	CHECK(dual_space(ds).levels[0] == s.levels[0]);
	CHECK(dual_space(zero_space(ctx)).dim() == 0);

	// spectrum over Z: {[1/2], [1/2]} (example after the definition)
	auto spec = filtration_spectrum(s);
	REQUIRE(spec.size() == 2);
	CHECK(spec[0].rep == q(1, 2));
	CHECK(spec[1].rep == q(1, 2));
	CHECK(spec[0].canonical);

	// extension keeps levels; non-inclusions are rejected
	ValueGroup half(D, {q(1, 2)});
	FilteredSpace ext = extend_coefficients_space(s, half);
	CHECK(ext.levels == s.levels);
	CHECK(ext.group() == half);
	ValueGroup third(D, {q(1, 3)});
	CHECK_THROWS_AS(extend_coefficients_space(ext, third), config_error);
}

TEST_CASE("solve_linear") {
	SetupPtr ctx = ctx_z();
	FilteredSpace s = make_space(ctx, {q(0), q(0)});
	FilteredVector e1 = basis_vector(s, 0), e2 = basis_vector(s, 1);
	// identity columns return b itself
	auto sol = solve_linear({e1, e2}, vec(s, {T(1), ns(7)}), s);
	REQUIRE(sol);
	CHECK((*sol)[0] == T(1));
	CHECK((*sol)[1] == ns(7));
	// (1 - T) e1 against itself
	FilteredVector c1 = scale(ns(1) - T(1), e1);
	auto one = solve_linear({c1}, c1, s);
	REQUIRE(one);
	CHECK((*one)[0] == ns(1));
	// inconsistency is a value, not a fault
	CHECK_FALSE(solve_linear({e1}, e2, s));
	// 2x2 Novikov system
	std::vector<FilteredVector> cols{vec(s, {ns(1), T(1)}), vec(s, {T(2), ns(1)})};
	FilteredVector b = vec(s, {ns(1) + T(2), T(1) + ns(1)});
	auto two = solve_linear(cols, b, s);
	REQUIRE(two);
	CHECK(combine(cols, *two, s) == b);
}

TEST_CASE("randomized toolkit properties") {
	selftest::Rng rng(99);
	std::vector<ValueGroup> groups{ValueGroup::trivial_group(D), ValueGroup(D, {q(1, 2)}),
	                               ValueGroup(D, {q(1), QuadReal(BigRat(0), BigRat(1), D)})};
	for (int t = 0; t < 60; ++t) {
		SetupPtr ctx = make_setup(t % 2 ? GroundField::Fp(3) : GroundField::Q(), groups[t % 3]);
		int n = rng.range(2, 4);
		std::vector<QuadReal> lv;
		for (int i = 0; i < n; ++i) lv.push_back(selftest::random_level(rng, D, true));
		FilteredSpace s = make_space(ctx, lv);

		std::vector<FilteredVector> raw;
		for (int i = 0; i < n; ++i) {
			FilteredVector v = zero_vector(s);
			for (int j = 0; j < n; ++j)
				if (rng.chance(2, 3)) v.c[j] = selftest::random_novikov(rng, ctx, 2);
			if (!v.is_zero()) raw.push_back(std::move(v));
		}
		std::vector<FilteredVector> indep;
		for (const auto& v : raw) {
			indep.push_back(v);
			if (rank_of(indep, s) < static_cast<int>(indep.size())) indep.pop_back();
		}
		if (indep.empty()) continue;

		// gram_schmidt output is orthogonal and spans the same subspace
		auto gs = gram_schmidt(s, indep);
		CHECK(is_orthogonal(s, gs));
		for (const auto& v : indep) CHECK(solve_linear(gs, v, s));
		for (const auto& w : gs) CHECK(solve_linear(indep, w, s));

		// best approximation beats random elements of W
		FilteredVector x = zero_vector(s);
		for (int j = 0; j < n; ++j)
			if (rng.chance(1, 2)) x.c[j] = selftest::random_novikov(rng, ctx, 2);
		auto ba = best_approximation(s, gs, x);
		CHECK(level(s, sub(x, ba.w0)) == ba.dist);
		for (int probe = 0; probe < 10; ++probe) {
			FilteredVector w = zero_vector(s);
			for (const auto& g : gs)
				if (rng.chance(1, 2)) w = add(w, scale(selftest::random_novikov(rng, ctx, 2), g));
			CHECK(ba.dist <= level(s, sub(x, w)));
		}

		// complement: trivial intersection and joint orthogonality
		auto comp = orthogonal_complement(s, indep);
		CHECK(static_cast<int>(comp.size() + indep.size()) == n);
		std::vector<FilteredVector> joint = gram_schmidt(s, indep);
		joint.insert(joint.end(), comp.begin(), comp.end());
		CHECK(rank_of(joint, s) == n);
		CHECK(is_orthogonal(s, joint));

		// dual basis of an orthogonal basis is orthogonal at negated levels
		if (static_cast<int>(gs.size()) == n) {
			auto inv = invert_matrix(gs, s);
			REQUIRE(inv);
			FilteredSpace ds = dual_space(s);
			std::vector<FilteredVector> dual_basis;
			for (int i = 0; i < n; ++i) {
				FilteredVector phi;
				for (int j = 0; j < n; ++j) phi.c.push_back((*inv)[j].c[i]);
				dual_basis.push_back(std::move(phi));
			}
			CHECK(is_orthogonal(ds, dual_basis));
			for (int i = 0; i < n; ++i) CHECK(level(ds, dual_basis[i]) == -level(s, gs[i]));
		}
	}
}
