// Seeded self-test battery: deterministic random generators for complexes,
// filtered isomorphisms, normal forms and quasiequivalences, plus the
// acceptance criteria the `verify` subcommand and the acceptance test run.
#ifndef BARNOV_SELFTEST_HPP
#define BARNOV_SELFTEST_HPP

#include "barnov/io.hpp"

#include <iosfwd>

namespace barnov::selftest {

// splitmix64; self-contained so that seeded runs are byte-identical
// across platforms and standard libraries
struct Rng {
	std::uint64_t state;

	explicit Rng(std::uint64_t seed) : state(seed) {}
	std::uint64_t next();
	std::uint64_t below(std::uint64_t n);
	int range(int lo, int hi);  // inclusive
	bool chance(int num, int den) { return below(den) < static_cast<std::uint64_t>(num); }
};

BigRat random_rational(Rng& rng, int num_span = 6, int max_den = 4);
QuadReal random_level(Rng& rng, std::int64_t d, bool allow_quad_part);
QuadReal random_group_element(Rng& rng, const ValueGroup& g, int span = 2);
// smallest-style group element strictly above `gap` (nullopt for trivial
// groups when gap >= 0)
std::optional<QuadReal> group_element_above(Rng& rng, const ValueGroup& g, const QuadReal& gap);
GroundScalar random_ground(Rng& rng, const GroundField& f, bool nonzero);
NovikovScalar random_novikov(Rng& rng, const SetupPtr& ctx, int max_terms = 2);

struct NormalFormBar {
	QuadReal a;
	ExtQuad L;
	int k = 0;
};

FloerComplex from_normal_form(const SetupPtr& ctx, const std::vector<NormalFormBar>& bars);
Barcode expected_verbose(const std::vector<NormalFormBar>& bars);
Barcode expected_concise(const std::vector<NormalFormBar>& bars);

struct NormalFormOptions {
	int max_bars = 4;
	int min_degree = -1;
	int max_degree = 2;
	bool allow_zero_length = true;
	bool allow_infinite = true;
	bool quad_levels = false;            // levels with a sqrt(d) part
	std::optional<QuadReal> min_finite;  // lower bound for finite positive lengths
};

std::vector<NormalFormBar> random_normal_form(Rng& rng, const SetupPtr& ctx, const NormalFormOptions& opt);

// A filtered chain isomorphism applied in reverse: the returned complex is
// the domain presentation, `iso` maps it back to the input complex (level
// preserving, conjugated boundary).  Basis changes are permutations, T^g
// scalings, and strictly level-dominated triangular entries.
struct ScrambleResult {
	FloerComplex complex;
	FilteredChainMap iso;
};

ScrambleResult scramble(Rng& rng, const FloerComplex& c, bool allow_scalings = true);

FloerComplex random_complex(Rng& rng, const SetupPtr& ctx, const NormalFormOptions& opt);

// identity-on-matched-summands quasiequivalence between two normal forms
FilteredChainMap matched_normal_form_map(const FloerComplex& source, const FloerComplex& target,
                                         const QuadReal& shift);

PointCloud random_points(Rng& rng, int n, int coord_dim);

struct CriterionResult {
	int id = 0;
	std::string name;
	bool pass = false;
	std::string detail;
};

std::vector<CriterionResult> run_acceptance(std::uint64_t seed);
// prints one pass/fail line per criterion; returns true when all pass
bool report_acceptance(std::uint64_t seed, std::ostream& out);

} // namespace barnov::selftest

#endif
