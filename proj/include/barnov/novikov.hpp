// Exact arithmetic in the Novikov field over (K, Gamma).  Scalars are kept as
// fractions of finitely supported group-ring polynomials: the elimination
// kernel divides by pivots, and quotients of finite sums generally have
// infinite expansions, but fraction form keeps both the arithmetic and the
// valuation exact.
#ifndef BARNOV_NOVIKOV_HPP
#define BARNOV_NOVIKOV_HPP

#include "barnov/value_group.hpp"

namespace barnov {

// Finitely supported sum of c * T^g with g in Gamma, terms sorted by exponent,
// coefficients nonzero.  Valuation = least exponent of the support.
class GroupRingPoly {
public:
	struct Term {
		QuadReal exp;
		GroundScalar coeff;
	};

	GroupRingPoly() = default;
	GroupRingPoly(GroundField f, std::int64_t disc) : fld(f), d(disc) {}
	static GroupRingPoly zero(const GroundField& f, std::int64_t disc) { return GroupRingPoly(f, disc); }
	static GroupRingPoly constant(const GroundScalar& c, std::int64_t disc);
	static GroupRingPoly monomial(const GroundScalar& c, const QuadReal& g);

	const std::vector<Term>& terms() const { return ts; }
	const GroundField& field() const { return fld; }
	std::int64_t disc() const { return d; }
	bool is_zero() const { return ts.empty(); }
	bool is_one() const;
	bool is_monomial() const { return ts.size() == 1; }

	ExtQuad valuation() const;
	const GroundScalar& lowest_coeff() const;
	const QuadReal& lowest_exp() const;

	GroupRingPoly operator+(const GroupRingPoly& o) const;
	GroupRingPoly operator-(const GroupRingPoly& o) const;
	GroupRingPoly operator*(const GroupRingPoly& o) const;
	GroupRingPoly operator-() const;
	GroupRingPoly scaled(const GroundScalar& c) const;
	GroupRingPoly shifted(const QuadReal& g) const;  // multiply by T^g
	bool operator==(const GroupRingPoly& o) const;
	bool operator!=(const GroupRingPoly& o) const { return !(*this == o); }

	// exponents must arrive strictly increasing
	void push_term(const QuadReal& g, const GroundScalar& c);
	// verify every exponent lies in Gamma
	void check_exponents(const ValueGroup& group) const;

	// quotient q with *this = q * g, for inputs promised exactly divisible
	// (the fraction-free elimination kernel only divides where Sylvester's
	// identity guarantees exactness); throws std::logic_error otherwise
	GroupRingPoly divided_exact(const GroupRingPoly& g) const;

	std::string to_string() const;

private:
	GroundField fld;
	std::int64_t d = 0;
	std::vector<Term> ts;
};

// num/den, normalized so that den has valuation 0 and lowest coefficient 1.
class NovikovScalar {
public:
	NovikovScalar() = default;
	explicit NovikovScalar(GroupRingPoly p);
	NovikovScalar(GroupRingPoly numerator, GroupRingPoly denominator);
	static NovikovScalar zero(const GroundField& f, std::int64_t disc);
	static NovikovScalar one(const GroundField& f, std::int64_t disc);
	static NovikovScalar monomial(const GroundScalar& c, const QuadReal& g);
	static NovikovScalar constant(const GroundScalar& c, std::int64_t disc);

	const GroupRingPoly& num() const { return n; }
	const GroupRingPoly& den() const { return m; }
	const GroundField& field() const { return n.field(); }
	std::int64_t disc() const { return n.disc(); }
	bool is_zero() const { return n.is_zero(); }
	bool is_one() const { return n.is_one() && m.is_one(); }

	ExtQuad valuation() const;

	NovikovScalar operator+(const NovikovScalar& o) const;
	NovikovScalar operator-(const NovikovScalar& o) const;
	NovikovScalar operator*(const NovikovScalar& o) const;
	NovikovScalar operator/(const NovikovScalar& o) const;
	NovikovScalar operator-() const;
	NovikovScalar inverse() const;
	bool operator==(const NovikovScalar& o) const;  // cross-multiplied
	bool operator!=(const NovikovScalar& o) const { return !(*this == o); }

	std::string to_string() const;

private:
	GroupRingPoly n, m;

	void normalize();
};

} // namespace barnov

#endif
