#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barnov/io.hpp"
#include "barnov/selftest.hpp"

using namespace barnov;

namespace {

const std::int64_t D = 2;
QuadReal q(long n, long den = 1) { return QuadReal(BigRat(n, den), BigRat(0), D); }

} // namespace

TEST_CASE("complex JSON round trip") {
	SetupPtr ctx = make_setup(GroundField::Q(), ValueGroup(D, {q(1, 2)}));
	FloerComplex e = elementary(ctx, q(1), ExtQuad(q(2)), 0);
	Json j = complex_to_json(e);
	FloerComplex back = complex_from_json(j);
	CHECK(complexes_equal(e, back));
	CHECK(back.ctx->group == e.ctx->group);

	// a Novikov entry with a sqrt exponent round-trips exactly
	SetupPtr ctxd = make_setup(GroundField::Fp(3), ValueGroup(D, {q(1), QuadReal(BigRat(0), BigRat(1), D)}));
	FilteredSpace c0 = make_space(ctxd, {q(0)});
	FilteredSpace c1 = make_space(ctxd, {QuadReal(BigRat(2), BigRat(1), D)});
	NovikovScalar entry = NovikovScalar::monomial(GroundScalar::from_int(ctxd->field, 2),
	                                              QuadReal(BigRat(1), BigRat(1), D));
	LinearMap d{c1, c0, {scale(entry, basis_vector(c0, 0))}};
	FloerComplex c = make_complex(ctxd, 0, {c0, c1}, {d});
	REQUIRE(validate(c).ok());
	CHECK(complexes_equal(complex_from_json(complex_to_json(c)), c));
}

TEST_CASE("loader rejects malformed complexes") {
	SetupPtr ctx = make_setup(GroundField::Q(), ValueGroup::trivial_group(D));
	FloerComplex e = elementary(ctx, q(0), ExtQuad(q(1)), 0);
	Json j = complex_to_json(e);

	// boundary violating the level inequality
	Json bad = j;
	bad["degrees"]["0"]["levels"][0] = "5";
	CHECK_THROWS_WITH_AS(static_cast<void>(complex_from_json(bad)), doctest::Contains("level violation"),
	                     config_error);

	// exponent outside the value group names the term
	Json badexp = j;
	badexp["boundaries"]["1"][0][0] = Json::array({Json::array({"1", "1/2"})});
	CHECK_THROWS_WITH_AS(static_cast<void>(complex_from_json(badexp)), doctest::Contains("outside the value group"),
	                     config_error);

	// d o d != 0
	SetupPtr ctx2 = make_setup(GroundField::Q(), ValueGroup::trivial_group(D));
	FilteredSpace s = make_space(ctx2, {q(0)});
	LinearMap dmap{s, s, {basis_vector(s, 0)}};
	FloerComplex broken = FloerComplex{ctx2, 0, {s, s, s}, {dmap, dmap}};
	CHECK_THROWS_WITH_AS(static_cast<void>(complex_from_json(complex_to_json(broken))),
	                     doctest::Contains("d o d != 0"), config_error);
}

TEST_CASE("barcode JSON round trip") {
	ValueGroup g(D, {q(1)});
	Barcode verbose;
	verbose.bars.push_back(Bar{0, q(1, 2), true, ExtQuad(q(3, 2))});
	verbose.bars.push_back(Bar{0, q(0), true, ExtQuad(q(0))});
	verbose.bars.push_back(Bar{1, QuadReal(BigRat(1), BigRat(1), D), true, ExtQuad::pos_inf()});

	Json j = barcode_to_json(g, verbose);
	CHECK(j.dump().find("\"inf\"") != std::string::npos);
	BarcodeFile back = barcode_from_json(j);
	CHECK(back.group == g);
	CHECK(barcodes_equal(g, back.verbose, verbose));
	// concise drops the zero-length bar
	CHECK(back.concise().size() == 2);

	// the zero-length bar is flagged verbose_only
	bool found = false;
	for (const auto& deg : j["degrees"])
		for (const auto& b : deg["bars"])
			if (b["verbose_only"].get<bool>()) found = true;
	CHECK(found);

	// empty barcode still emits a valid document
	Json empty = barcode_to_json(g, Barcode{});
	CHECK(barcode_from_json(empty).verbose.size() == 0);
}

TEST_CASE("CSV and SVG emitters") {
	Barcode verbose;
	verbose.bars.push_back(Bar{0, q(0), true, ExtQuad(q(3))});
	verbose.bars.push_back(Bar{1, q(1, 2), true, ExtQuad::pos_inf()});
	std::string csv = barcode_to_csv(verbose);
	CHECK(csv.find("degree,a,L,verbose_only") == 0);
	CHECK(csv.find("0,0,3,0") != std::string::npos);
	CHECK(csv.find("1,1/2,inf,0") != std::string::npos);
	std::string svg = barcode_to_svg(verbose);
	CHECK(svg.find("<svg") == 0);
	CHECK(svg.find("<line") != std::string::npos);
}

TEST_CASE("rips complexes") {
	SetupPtr ctx = make_setup(GroundField::Q(), ValueGroup::trivial_group(0));

	// one point: a single degree-0 generator at level 0
	FloerComplex single = rips_complex(ctx, {{BigRat(5), BigRat(7)}}, 2, RipsMetric::Linf);
	CHECK(single.total_dim() == 1);
	CHECK(single.space(0).levels[0] == QuadReal::integer(0, 0));

	// triangle with pairwise L-inf distances 1, 2, 2
	PointCloud tri{{BigRat(0), BigRat(0)}, {BigRat(1), BigRat(0)}, {BigRat(2), BigRat(2)}};
	FloerComplex tc = rips_complex(ctx, tri, 2, RipsMetric::Linf);
	REQUIRE(validate(tc).ok());
	std::vector<QuadReal> edges = tc.space(1).levels;
	std::sort(edges.begin(), edges.end());
	CHECK(edges[0] == QuadReal::integer(1, 0));
	CHECK(edges[1] == QuadReal::integer(2, 0));
	CHECK(edges[2] == QuadReal::integer(2, 0));
	CHECK(tc.space(2).levels[0] == QuadReal::integer(2, 0));

	// a cap drops the 2-simplex and long edges
	FloerComplex capped = rips_complex(ctx, tri, 2, RipsMetric::Linf, BigRat(1));
	CHECK(capped.space(1).dim() == 1);
	CHECK(capped.k_max() == 1);

	// metric variants stay rational
	FloerComplex l1 = rips_complex(ctx, tri, 1, RipsMetric::L1);
	CHECK(l1.space(1).levels[0] == QuadReal::integer(1, 0));
	FloerComplex esq = rips_complex(ctx, tri, 1, RipsMetric::EuclidSq);
	std::vector<QuadReal> esq_edges = esq.space(1).levels;
	std::sort(esq_edges.begin(), esq_edges.end());
	CHECK(esq_edges[2] == QuadReal::integer(8, 0));  // (2,2) squared distance

	// faces never outlevel cofaces, and validation holds, on random clouds
	selftest::Rng rng(12);
	for (int t = 0; t < 20; ++t) {
		PointCloud pts = selftest::random_points(rng, rng.range(1, 6), 2);
		FloerComplex c = rips_complex(ctx, pts, 2, RipsMetric::Linf);
		CHECK(validate(c).ok());
		for (int k = c.k_min + 1; k <= c.k_max(); ++k) {
			LinearMap d = c.boundary(k);
			for (int j = 0; j < d.domain.dim(); ++j)
				CHECK(level(d.codomain, d.cols[j]) <= ExtQuad(d.domain.levels[j]));
		}
	}

	// guards
	CHECK_THROWS_AS(rips_complex(ctx, tri, 4, RipsMetric::Linf), config_error);
	SetupPtr ctxz = make_setup(GroundField::Q(), ValueGroup(D, {q(1)}));
	CHECK_THROWS_AS(rips_complex(ctxz, tri, 2, RipsMetric::Linf), config_error);
}

TEST_CASE("complex file round trips through disk") {
	SetupPtr ctx = make_setup(GroundField::Fp(2), ValueGroup::trivial_group(0));
	selftest::Rng rng(3);
	FloerComplex c = rips_complex(ctx, selftest::random_points(rng, 4, 2), 2, RipsMetric::Linf);
	std::string path = "/tmp/barnov_test_complex.json";
	save_complex(c, path);
	FloerComplex back = load_complex(path);
	CHECK(complexes_equal(c, back));
	CHECK(barcodes_equal(ctx->group, barcodes(c).verbose, barcodes(back).verbose));
}
