// Exact ground-field scalars: arbitrary-precision rationals or a prime field F_p.
#ifndef BARNOV_GROUND_HPP
#define BARNOV_GROUND_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace barnov {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct config_error : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

// "p/q" decimal strings; a bare "p" means denominator 1.
std::string rat_to_string(const BigRat& v);
BigRat rat_parse(const std::string& s);

struct GroundField {
	enum class Kind { rationals, prime };
	Kind kind = Kind::rationals;
	std::uint32_t p = 0;

	static GroundField Q() { return GroundField{Kind::rationals, 0}; }
	static GroundField Fp(std::uint32_t prime);

	bool operator==(const GroundField& o) const { return kind == o.kind && p == o.p; }
	bool operator!=(const GroundField& o) const { return !(*this == o); }
	std::string to_string() const;
	static GroundField parse(const std::string& s);
};

// One scalar of the session ground field. Rational payload or residue mod p,
// depending on the field descriptor carried alongside.
class GroundScalar {
public:
	GroundScalar() = default;
	static GroundScalar zero(const GroundField& f);
	static GroundScalar one(const GroundField& f);
	static GroundScalar from_int(const GroundField& f, long v);
	static GroundScalar from_rational(const GroundField& f, const BigRat& q);

	const GroundField& field() const { return fld; }
	bool is_zero() const;
	bool is_one() const;

	GroundScalar operator+(const GroundScalar& o) const;
	GroundScalar operator-(const GroundScalar& o) const;
	GroundScalar operator*(const GroundScalar& o) const;
	GroundScalar operator/(const GroundScalar& o) const;
	GroundScalar operator-() const;
	GroundScalar inverse() const;
	bool operator==(const GroundScalar& o) const;
	bool operator!=(const GroundScalar& o) const { return !(*this == o); }

	// Rational payload (field must be Q).
	const BigRat& rational() const;
	std::uint64_t residue() const { return res; }

	std::string to_string() const;
	static GroundScalar parse(const GroundField& f, const std::string& s);

private:
	GroundField fld;
	BigRat q;
	std::uint64_t res = 0;

	void check_same(const GroundScalar& o) const;
};

} // namespace barnov

#endif
