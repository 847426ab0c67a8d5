#include "barnov/quadreal.hpp"

namespace barnov {

bool is_squarefree(std::int64_t d) {
	if (d < 0) return false;
	for (std::int64_t f = 2; f * f <= d; ++f)
		if (d % (f * f) == 0) return false;
	return true;
}

QuadReal::QuadReal(BigRat a0, BigRat b0, std::int64_t disc) : a(std::move(a0)), b(std::move(b0)), d(disc) {
	if (!is_squarefree(d)) throw config_error("discriminant " + std::to_string(d) + " is not squarefree");
	if (d == 1) {
		a += b;
		b = 0;
	} else if (d == 0) {
		b = 0;
	}
}

void QuadReal::check_same(const QuadReal& o) const {
	if (d != o.d)
		throw config_error("mismatched session discriminants " + std::to_string(d) + " vs " + std::to_string(o.d));
}

QuadReal QuadReal::operator+(const QuadReal& o) const {
	check_same(o);
	return QuadReal(BigRat(a + o.a), BigRat(b + o.b), d);
}

QuadReal QuadReal::operator-(const QuadReal& o) const {
	check_same(o);
	return QuadReal(BigRat(a - o.a), BigRat(b - o.b), d);
}

QuadReal QuadReal::operator*(const QuadReal& o) const {
	check_same(o);
	return QuadReal(BigRat(a * o.a + b * o.b * d), BigRat(a * o.b + b * o.a), d);
}

QuadReal QuadReal::operator/(const QuadReal& o) const {
	check_same(o);
	if (o.is_zero()) throw std::domain_error("division by zero QuadReal");
	// multiply by the conjugate; a^2 - d b^2 != 0 since sqrt(d) is irrational or b = 0
	BigRat n(o.a * o.a - o.b * o.b * d);
	return *this * QuadReal(BigRat(o.a / n), BigRat(-o.b / n), d);
}

QuadReal QuadReal::operator-() const { return QuadReal(BigRat(-a), BigRat(-b), d); }

// Sign of a + b*sqrt(d) by sign analysis and squared comparison; no floating point.
int QuadReal::sign() const {
	int sa = a.sign(), sb = b.sign();
	if (sb == 0) return sa;
	if (sa == 0) return sb;
	if (sa == sb) return sa;
	// opposite signs: compare a^2 with d b^2
	BigRat lhs(a * a), rhs(b * b * d);
	if (lhs == rhs) return 0;  // only when sqrt(d) rational; normalization keeps b = 0 then
	return lhs > rhs ? sa : sb;
}

bool QuadReal::operator==(const QuadReal& o) const {
	check_same(o);
	return a == o.a && b == o.b;
}

Ordering quad_compare(const QuadReal& u, const QuadReal& v) {
	int s = (u - v).sign();
	return s < 0 ? Ordering::LT : (s == 0 ? Ordering::EQ : Ordering::GT);
}

static BigInt floor_rat(const BigRat& q) {
	BigInt n = numerator(q), d = denominator(q);
	BigInt f = n / d;
	if (n < 0 && f * d != n) --f;
	return f;
}

BigInt QuadReal::floor() const {
	if (b.is_zero()) return floor_rat(a);
	// bracket sqrt(d) by s/2^k <= sqrt(d) < (s+1)/2^k with 2^-k |b| < 1/4,
	// then fix up the estimate with exact comparisons
	BigInt babs = floor_rat(BigRat(boost::multiprecision::abs(numerator(b)), denominator(b))) + 1;
	unsigned k = 3;
	for (BigInt t = babs; t > 0; t >>= 1) ++k;
	BigInt s = sqrt(BigInt(BigInt(d) << (2 * k)));
	BigRat approx_root(s, BigInt(1) << k);
	BigInt n = floor_rat(BigRat(a + b * approx_root));
	while (QuadReal::rational(BigRat(n + 1), d) <= *this) ++n;
	while (QuadReal::rational(BigRat(n), d) > *this) --n;
	return n;
}

double QuadReal::approx() const {
	return a.convert_to<double>() + b.convert_to<double>() * std::sqrt(static_cast<double>(d));
}

std::string QuadReal::to_string() const {
	if (b.is_zero()) return rat_to_string(a);
	std::string root = "sqrt(" + std::to_string(d) + ")";
	std::string bs = rat_to_string(BigRat(boost::multiprecision::abs(numerator(b)), denominator(b)));
	std::string tail = (bs == "1" ? root : bs + "*" + root);
	if (a.is_zero()) return (b.sign() < 0 ? "-" : "") + tail;
	return rat_to_string(a) + (b.sign() < 0 ? "-" : "+") + tail;
}

const QuadReal& ExtQuad::value() const {
	if (k != Kind::finite) throw std::domain_error("infinite ExtQuad has no finite value");
	return val;
}

ExtQuad ExtQuad::operator-() const {
	switch (k) {
	case Kind::neg_inf: return pos_inf();
	case Kind::pos_inf: return neg_inf();
	default: return ExtQuad(-val);
	}
}

ExtQuad ExtQuad::operator+(const ExtQuad& o) const {
	if (k == Kind::finite && o.k == Kind::finite) return ExtQuad(val + o.val);
	if (k == Kind::finite) return o;
	if (o.k == Kind::finite) return *this;
	if (k == o.k) return *this;
	throw std::domain_error("indeterminate sum of opposite infinities");
}

bool ExtQuad::operator==(const ExtQuad& o) const {
	if (k != o.k) return false;
	return k != Kind::finite || val == o.val;
}

bool ExtQuad::operator<(const ExtQuad& o) const {
	if (k == o.k) return k == Kind::finite && val < o.val;
	if (k == Kind::neg_inf) return true;
	if (k == Kind::pos_inf) return false;
	return o.k == Kind::pos_inf;
}

std::string ExtQuad::to_string() const {
	switch (k) {
	case Kind::neg_inf: return "-inf";
	case Kind::pos_inf: return "inf";
	default: return val.to_string();
	}
}

} // namespace barnov
