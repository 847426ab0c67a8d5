#include "barnov/value_group.hpp"

#include <numeric>

namespace barnov {

namespace {

BigInt gcd(BigInt a, BigInt b) {
	if (a < 0) a = -a;
	if (b < 0) b = -b;
	while (b != 0) {
		BigInt t = a % b;
		a = b;
		b = t;
	}
	return a;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
	if (a == 0 || b == 0) return 0;
	return a / gcd(a, b) * b;
}

// extended gcd: returns g and x, y with a x + b y = g >= 0
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
	if (b == 0) {
		if (a < 0) {
			x = -1;
			y = 0;
			return -a;
		}
		x = 1;
		y = 0;
		return a;
	}
	BigInt x1, y1;
	BigInt g = ext_gcd(b, BigInt(a % b), x1, y1);
	x = y1;
	y = x1 - (a / b) * y1;
	return g;
}

} // namespace

ValueGroup::ValueGroup(std::int64_t disc, std::vector<QuadReal> generators) : d_(disc), gens(std::move(generators)) {
	if (!is_squarefree(d_)) throw config_error("discriminant " + std::to_string(d_) + " is not squarefree");
	std::vector<std::pair<BigRat, BigRat>> coords;
	for (const auto& g : gens) {
		if (g.disc() != d_) throw config_error("value-group generator has foreign discriminant");
		if (!g.is_zero()) coords.emplace_back(g.q0(), g.q1());
	}

	// clear denominators: the lattice D*Gamma lives in Z^2
	scale = 1;
	for (const auto& [x, y] : coords) {
		scale = lcm(scale, denominator(x));
		scale = lcm(scale, denominator(y));
	}
	std::vector<std::pair<BigInt, BigInt>> cols;
	for (const auto& [x, y] : coords) {
		BigRat sx(x * scale), sy(y * scale);
		cols.emplace_back(numerator(sx), numerator(sy));
	}

	// column-style Hermite normal form of the 2 x k generator matrix:
	// fold all columns into u with u0 = gcd of first coordinates, then the
	// remaining first-coordinate-zero columns into v = (0, v1)
	u0 = 0;
	u1 = 0;
	v1 = 0;
	std::vector<BigInt> residual;
	for (auto& [x, y] : cols) {
		if (x == 0) {
			residual.push_back(y);
			continue;
		}
		if (u0 == 0) {
			u0 = x;
			u1 = y;
			if (u0 < 0) {
				u0 = -u0;
				u1 = -u1;
			}
			continue;
		}
		BigInt s, t;
		BigInt g = ext_gcd(u0, x, s, t);
		BigInt nu0 = g;
		BigInt nu1 = s * u1 + t * y;
		// the combination (u0/g)*col - (x/g)*u has first coordinate zero
		residual.push_back(BigInt((u0 / g) * y - (x / g) * u1));
		u0 = nu0;
		u1 = nu1;
	}
	for (const auto& y : residual) v1 = gcd(v1, y);
	if (v1 != 0) u1 = ((u1 % v1) + v1) % v1;  // reduce for a canonical basis

	rank = (u0 != 0 ? 1 : 0) + (v1 != 0 ? 1 : 0);
	if (rank == 0)
		cls = Classification::trivial;
	else if (rank == 1)
		cls = Classification::discrete;
	else
		cls = Classification::dense;  // rank 2 forces d > 1, hence Z-independent reals

	if (cls == Classification::discrete) {
		if (u0 != 0)
			disc_gen = QuadReal(BigRat(u0, scale), BigRat(u1, scale), d_);
		else
			disc_gen = QuadReal(BigRat(0), BigRat(v1, scale), d_);
		if (disc_gen.sign() < 0) disc_gen = -disc_gen;
	}
}

const QuadReal& ValueGroup::discrete_generator() const {
	if (cls != Classification::discrete) throw std::domain_error("group is not discrete");
	return disc_gen;
}

bool ValueGroup::contains(const QuadReal& g) const {
	if (g.disc() != d_) throw config_error("membership query with foreign discriminant");
	if (g.is_zero()) return true;
	if (rank == 0) return false;
	BigRat sx(g.q0() * scale), sy(g.q1() * scale);
	if (denominator(sx) != 1 || denominator(sy) != 1) return false;
	BigInt x = numerator(sx), y = numerator(sy);
	// solve alpha*u + beta*v = (x, y) over Z against the HNF basis
	BigInt alpha = 0;
	if (u0 != 0) {
		if (x % u0 != 0) return false;
		alpha = x / u0;
	} else if (x != 0) {
		return false;
	}
	BigInt rest = y - alpha * u1;
	if (v1 != 0) return rest % v1 == 0;
	return rest == 0;
}

bool ValueGroup::subgroup_of(const ValueGroup& larger) const {
	if (d_ != larger.d_) return false;
	for (const auto& g : gens)
		if (!larger.contains(g)) return false;
	return true;
}

ValueGroup::Rep ValueGroup::canonical_rep(const QuadReal& a) const {
	switch (cls) {
	case Classification::trivial: return {a, true};
	case Classification::dense: return {a, false};
	case Classification::discrete: {
		QuadReal q = a / disc_gen;
		BigInt f = q.floor();
		QuadReal rep = a - disc_gen * QuadReal(BigRat(f), BigRat(0), d_);
		return {rep, true};
	}
	}
	return {a, true};
}

bool ValueGroup::operator==(const ValueGroup& o) const {
	return d_ == o.d_ && subgroup_of(o) && o.subgroup_of(*this);
}

std::string ValueGroup::to_string() const {
	if (is_trivial()) return "{0}";
	std::string s = "<";
	for (std::size_t i = 0; i < gens.size(); ++i) {
		if (i) s += ", ";
		s += gens[i].to_string();
	}
	return s + ">";
}

} // namespace barnov
