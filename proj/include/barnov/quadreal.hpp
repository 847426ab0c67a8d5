// Exact elements of Q(sqrt(d)) with a total order matching the real embedding,
// plus the two-point extension used for levels (-inf) and valuations (+inf).
#ifndef BARNOV_QUADREAL_HPP
#define BARNOV_QUADREAL_HPP

#include "barnov/ground.hpp"

namespace barnov {

// q0 + q1*sqrt(d), d a fixed nonnegative squarefree integer shared per session.
// For d in {0,1} the value is normalized to a pure rational (q1 = 0).
class QuadReal {
public:
	QuadReal() = default;
	QuadReal(BigRat a, BigRat b, std::int64_t disc);
	static QuadReal rational(const BigRat& a, std::int64_t disc) { return QuadReal(a, 0, disc); }
	static QuadReal integer(long v, std::int64_t disc) { return QuadReal(BigRat(v), 0, disc); }

	const BigRat& q0() const { return a; }
	const BigRat& q1() const { return b; }
	std::int64_t disc() const { return d; }
	bool is_rational() const { return b.is_zero(); }
	bool is_zero() const { return a.is_zero() && b.is_zero(); }

	QuadReal operator+(const QuadReal& o) const;
	QuadReal operator-(const QuadReal& o) const;
	QuadReal operator*(const QuadReal& o) const;
	QuadReal operator/(const QuadReal& o) const;
	QuadReal operator-() const;
	QuadReal abs() const { return sign() < 0 ? -*this : *this; }

	int sign() const;  // exact: -1, 0, +1
	bool operator==(const QuadReal& o) const;
	bool operator!=(const QuadReal& o) const { return !(*this == o); }
	bool operator<(const QuadReal& o) const {
		check_same(o);
		if (b == o.b) return a < o.a;  // covers all rational-only sessions
		if (a == o.a) return b < o.b;  // sqrt(d) > 0
		return (*this - o).sign() < 0;
	}
	bool operator<=(const QuadReal& o) const { return !(o < *this); }
	bool operator>(const QuadReal& o) const { return o < *this; }
	bool operator>=(const QuadReal& o) const { return o <= *this; }

	BigInt floor() const;  // exact floor of the real value
	double approx() const; // for drawing only

	std::string to_string() const;

private:
	BigRat a, b;
	std::int64_t d = 0;

	void check_same(const QuadReal& o) const;
};

enum class Ordering { LT, EQ, GT };
Ordering quad_compare(const QuadReal& u, const QuadReal& v);

bool is_squarefree(std::int64_t d);

// QuadReal extended by -inf/+inf where the algebra needs it: levels take -inf
// on the zero vector, valuations take +inf on the zero scalar, bar lengths
// take +inf on infinite bars.
class ExtQuad {
public:
	enum class Kind { neg_inf, finite, pos_inf };

	ExtQuad() : k(Kind::finite) {}
	explicit ExtQuad(QuadReal v) : k(Kind::finite), val(std::move(v)) {}
	static ExtQuad neg_inf() { ExtQuad e; e.k = Kind::neg_inf; return e; }
	static ExtQuad pos_inf() { ExtQuad e; e.k = Kind::pos_inf; return e; }

	bool finite() const { return k == Kind::finite; }
	bool is_neg_inf() const { return k == Kind::neg_inf; }
	bool is_pos_inf() const { return k == Kind::pos_inf; }
	const QuadReal& value() const;

	ExtQuad operator-() const;
	ExtQuad operator+(const ExtQuad& o) const;  // throws on inf + (-inf)
	ExtQuad operator-(const ExtQuad& o) const { return *this + (-o); }

	bool operator==(const ExtQuad& o) const;
	bool operator!=(const ExtQuad& o) const { return !(*this == o); }
	bool operator<(const ExtQuad& o) const;
	bool operator<=(const ExtQuad& o) const { return *this < o || *this == o; }
	bool operator>(const ExtQuad& o) const { return o < *this; }
	bool operator>=(const ExtQuad& o) const { return o <= *this; }

	std::string to_string() const;

private:
	Kind k;
	QuadReal val;
};

inline const ExtQuad& max(const ExtQuad& x, const ExtQuad& y) { return x < y ? y : x; }
inline const ExtQuad& min(const ExtQuad& x, const ExtQuad& y) { return y < x ? y : x; }

} // namespace barnov

#endif
