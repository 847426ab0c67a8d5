#include "barnov/ground.hpp"

namespace barnov {

bool is_prime(std::uint64_t n) {
	if (n < 2) return false;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0) return false;
	return true;
}

GroundField GroundField::Fp(std::uint32_t prime) {
	if (!is_prime(prime)) throw config_error("field modulus " + std::to_string(prime) + " is not prime");
	return GroundField{Kind::prime, prime};
}

std::string GroundField::to_string() const {
	return kind == Kind::rationals ? "Q" : "Fp:" + std::to_string(p);
}

GroundField GroundField::parse(const std::string& s) {
	if (s == "Q") return Q();
	if (s.rfind("Fp:", 0) == 0) return Fp(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
	if (s.rfind("F", 0) == 0 && s.size() > 1 && std::isdigit(static_cast<unsigned char>(s[1])))
		return Fp(static_cast<std::uint32_t>(std::stoul(s.substr(1))));
	throw config_error("unknown field descriptor '" + s + "' (expected Q or Fp:<p>)");
}

GroundScalar GroundScalar::zero(const GroundField& f) {
	GroundScalar s;
	s.fld = f;
	return s;
}

GroundScalar GroundScalar::one(const GroundField& f) {
	GroundScalar s;
	s.fld = f;
	if (f.kind == GroundField::Kind::rationals)
		s.q = 1;
	else
		s.res = 1 % f.p;
	return s;
}

GroundScalar GroundScalar::from_int(const GroundField& f, long v) {
	GroundScalar s;
	s.fld = f;
	if (f.kind == GroundField::Kind::rationals) {
		s.q = v;
	} else {
		long long m = static_cast<long long>(v) % static_cast<long long>(f.p);
		if (m < 0) m += f.p;
		s.res = static_cast<std::uint64_t>(m);
	}
	return s;
}

GroundScalar GroundScalar::from_rational(const GroundField& f, const BigRat& value) {
	GroundScalar s;
	s.fld = f;
	if (f.kind == GroundField::Kind::rationals) {
		s.q = value;
	} else {
		BigInt num = numerator(value), den = denominator(value);
		BigInt p(f.p);
		BigInt nm = num % p;
		if (nm < 0) nm += p;
		BigInt dm = den % p;
		if (dm < 0) dm += p;
		if (dm == 0) throw config_error("rational with denominator divisible by p cannot map to F_p");
		GroundScalar n = from_int(f, 0), d = from_int(f, 0);
		n.res = nm.convert_to<std::uint64_t>();
		d.res = dm.convert_to<std::uint64_t>();
		s = n / d;
	}
	return s;
}

void GroundScalar::check_same(const GroundScalar& o) const {
	if (fld != o.fld) throw config_error("ground field mismatch: " + fld.to_string() + " vs " + o.fld.to_string());
}

bool GroundScalar::is_zero() const {
	return fld.kind == GroundField::Kind::rationals ? q.is_zero() : res == 0;
}

bool GroundScalar::is_one() const {
	return fld.kind == GroundField::Kind::rationals ? q == 1 : res == 1 % fld.p;
}

GroundScalar GroundScalar::operator+(const GroundScalar& o) const {
	check_same(o);
	GroundScalar s = *this;
	if (fld.kind == GroundField::Kind::rationals)
		s.q += o.q;
	else
		s.res = (res + o.res) % fld.p;
	return s;
}

GroundScalar GroundScalar::operator-(const GroundScalar& o) const { return *this + (-o); }

GroundScalar GroundScalar::operator*(const GroundScalar& o) const {
	check_same(o);
	GroundScalar s = *this;
	if (fld.kind == GroundField::Kind::rationals)
		s.q *= o.q;
	else
		s.res = (res * o.res) % fld.p;  // p < 2^32, product fits in 64 bits
	return s;
}

GroundScalar GroundScalar::operator/(const GroundScalar& o) const { return *this * o.inverse(); }

GroundScalar GroundScalar::operator-() const {
	GroundScalar s = *this;
	if (fld.kind == GroundField::Kind::rationals)
		s.q = -s.q;
	else if (res != 0)
		s.res = fld.p - res;
	return s;
}

GroundScalar GroundScalar::inverse() const {
	if (is_zero()) throw std::domain_error("division by zero in ground field");
	GroundScalar s = *this;
	if (fld.kind == GroundField::Kind::rationals) {
		s.q = BigRat(1) / q;
	} else {
		// extended Euclid on (res, p)
		std::int64_t a = static_cast<std::int64_t>(res), m = fld.p;
		std::int64_t x0 = 0, x1 = 1, r0 = m, r1 = a;
		while (r1 != 0) {
			std::int64_t qq = r0 / r1;
			std::int64_t t = r0 - qq * r1;
			r0 = r1;
			r1 = t;
			t = x0 - qq * x1;
			x0 = x1;
			x1 = t;
		}
		if (x0 < 0) x0 += m;
		s.res = static_cast<std::uint64_t>(x0) % fld.p;
	}
	return s;
}

bool GroundScalar::operator==(const GroundScalar& o) const {
	check_same(o);
	return fld.kind == GroundField::Kind::rationals ? q == o.q : res == o.res;
}

const BigRat& GroundScalar::rational() const {
	if (fld.kind != GroundField::Kind::rationals)
		throw config_error("rational payload requested from prime-field scalar");
	return q;
}

std::string rat_to_string(const BigRat& v) {
	BigInt n = numerator(v), d = denominator(v);
	if (d == 1) return n.str();
	return n.str() + "/" + d.str();
}

BigRat rat_parse(const std::string& s) {
	if (s.empty()) throw config_error("empty rational literal");
	for (char c : s)
		if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
			throw config_error("bad rational literal '" + s + "'");
	auto slash = s.find('/');
	if (slash != std::string::npos) {
		BigInt den(s.substr(slash + 1));
		if (den == 0) throw config_error("zero denominator in '" + s + "'");
		return BigRat(BigInt(s.substr(0, slash)), den);
	}
	return BigRat(BigInt(s));
}

std::string GroundScalar::to_string() const {
	return fld.kind == GroundField::Kind::rationals ? rat_to_string(q) : std::to_string(res);
}

GroundScalar GroundScalar::parse(const GroundField& f, const std::string& s) {
	return from_rational(f, rat_parse(s));
}

} // namespace barnov
