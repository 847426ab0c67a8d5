// The value group Gamma <= R: a finitely generated subgroup of Q(sqrt(d)),
// with exact membership (coset equality in R/Gamma) via an integer lattice
// in the rational coordinates (q0, q1).
#ifndef BARNOV_VALUE_GROUP_HPP
#define BARNOV_VALUE_GROUP_HPP

#include "barnov/quadreal.hpp"

#include <memory>
#include <vector>

namespace barnov {

class ValueGroup {
public:
	enum class Classification { trivial, discrete, dense };

	ValueGroup() : d_(0) {}
	ValueGroup(std::int64_t disc, std::vector<QuadReal> generators);
	static ValueGroup trivial_group(std::int64_t disc) { return ValueGroup(disc, {}); }

	std::int64_t disc() const { return d_; }
	const std::vector<QuadReal>& generators() const { return gens; }
	Classification classification() const { return cls; }
	bool is_trivial() const { return cls == Classification::trivial; }
	bool is_dense() const { return cls == Classification::dense; }
	// positive generator of a discrete group
	const QuadReal& discrete_generator() const;

	bool contains(const QuadReal& g) const;
	// subgroup test: every generator of *this lies in `larger`
	bool subgroup_of(const ValueGroup& larger) const;

	struct Rep {
		QuadReal rep;
		bool canonical;
	};
	// rep == a (mod Gamma); canonical (unique) exactly when Gamma is trivial or discrete
	Rep canonical_rep(const QuadReal& a) const;
	bool same_coset(const QuadReal& a, const QuadReal& b) const { return contains(a - b); }

	bool operator==(const ValueGroup& o) const;
	std::string to_string() const;

private:
	std::int64_t d_;
	std::vector<QuadReal> gens;
	Classification cls = Classification::trivial;
	// lattice of D*Gamma in Z^2, columns in Hermite normal form:
	// rank 0: empty; rank 1: {u}; rank 2: {u, v} with u = (u0, u1), v = (0, v1), u0, v1 > 0
	int rank = 0;
	BigInt u0, u1, v1;
	BigInt scale = 1;  // D
	QuadReal disc_gen;
};

// Session-wide configuration shared by every object of one computation.
struct Setup {
	GroundField field;
	ValueGroup group;

	std::int64_t disc() const { return group.disc(); }
};

using SetupPtr = std::shared_ptr<const Setup>;

inline SetupPtr make_setup(GroundField f, ValueGroup g) {
	return std::make_shared<const Setup>(Setup{std::move(f), std::move(g)});
}

} // namespace barnov

#endif
