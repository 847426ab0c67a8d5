#include "barnov/novikov.hpp"

#include <algorithm>
#include <vector>

namespace barnov {

GroupRingPoly GroupRingPoly::constant(const GroundScalar& c, std::int64_t disc) {
	GroupRingPoly p(c.field(), disc);
	if (!c.is_zero()) p.ts.push_back({QuadReal::integer(0, disc), c});
	return p;
}

GroupRingPoly GroupRingPoly::monomial(const GroundScalar& c, const QuadReal& g) {
	GroupRingPoly p(c.field(), g.disc());
	if (!c.is_zero()) p.ts.push_back({g, c});
	return p;
}

bool GroupRingPoly::is_one() const {
	return ts.size() == 1 && ts[0].exp.is_zero() && ts[0].coeff.is_one();
}

ExtQuad GroupRingPoly::valuation() const {
	if (ts.empty()) return ExtQuad::pos_inf();
	return ExtQuad(ts.front().exp);
}

const GroundScalar& GroupRingPoly::lowest_coeff() const {
	if (ts.empty()) throw std::domain_error("zero polynomial has no lowest coefficient");
	return ts.front().coeff;
}

const QuadReal& GroupRingPoly::lowest_exp() const {
	if (ts.empty()) throw std::domain_error("zero polynomial has no lowest exponent");
	return ts.front().exp;
}

void GroupRingPoly::push_term(const QuadReal& g, const GroundScalar& c) {
	if (c.is_zero()) return;
	if (!ts.empty() && !(ts.back().exp < g)) throw std::logic_error("terms must be pushed in increasing exponent order");
	ts.push_back({g, c});
}

void GroupRingPoly::check_exponents(const ValueGroup& group) const {
	for (const auto& t : ts)
		if (!group.contains(t.exp))
			throw config_error("exponent " + t.exp.to_string() + " lies outside the value group " + group.to_string());
}

GroupRingPoly GroupRingPoly::operator+(const GroupRingPoly& o) const {
	if (fld != o.fld || d != o.d) throw config_error("group-ring arithmetic across configurations");
	GroupRingPoly r(fld, d);
	std::size_t i = 0, j = 0;
	while (i < ts.size() || j < o.ts.size()) {
		if (j == o.ts.size() || (i < ts.size() && ts[i].exp < o.ts[j].exp)) {
			r.ts.push_back(ts[i++]);
		} else if (i == ts.size() || o.ts[j].exp < ts[i].exp) {
			r.ts.push_back(o.ts[j++]);
		} else {
			GroundScalar c = ts[i].coeff + o.ts[j].coeff;
			if (!c.is_zero()) r.ts.push_back({ts[i].exp, c});
			++i;
			++j;
		}
	}
	return r;
}

GroupRingPoly GroupRingPoly::operator-() const {
	GroupRingPoly r(fld, d);
	r.ts.reserve(ts.size());
	for (const auto& t : ts) r.ts.push_back({t.exp, -t.coeff});
	return r;
}

GroupRingPoly GroupRingPoly::operator-(const GroupRingPoly& o) const { return *this + (-o); }

GroupRingPoly GroupRingPoly::operator*(const GroupRingPoly& o) const {
	if (fld != o.fld || d != o.d) throw config_error("group-ring arithmetic across configurations");
	GroupRingPoly r(fld, d);
	if (ts.empty() || o.ts.empty()) return r;
	if (ts.size() == 1) return o.scaled(ts[0].coeff).shifted(ts[0].exp);
	if (o.ts.size() == 1) return scaled(o.ts[0].coeff).shifted(o.ts[0].exp);
	std::vector<Term> prod;
	prod.reserve(ts.size() * o.ts.size());
	for (const auto& s : ts)
		for (const auto& t : o.ts) prod.push_back({s.exp + t.exp, s.coeff * t.coeff});
	std::sort(prod.begin(), prod.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
	for (auto& t : prod) {
		if (!r.ts.empty() && r.ts.back().exp == t.exp) {
			r.ts.back().coeff = r.ts.back().coeff + t.coeff;
			if (r.ts.back().coeff.is_zero()) r.ts.pop_back();
		} else {
			r.ts.push_back(std::move(t));
		}
	}
	return r;
}

GroupRingPoly GroupRingPoly::scaled(const GroundScalar& c) const {
	GroupRingPoly r(fld, d);
	if (c.is_zero()) return r;
	r.ts.reserve(ts.size());
	for (const auto& t : ts) r.ts.push_back({t.exp, t.coeff * c});
	return r;
}

GroupRingPoly GroupRingPoly::shifted(const QuadReal& g) const {
	GroupRingPoly r(fld, d);
	r.ts.reserve(ts.size());
	for (const auto& t : ts) r.ts.push_back({t.exp + g, t.coeff});
	return r;
}

// Division with no remainder: peel the lowest term of the running remainder
// against the lowest term of g.  In the group ring of an ordered group the
// lowest term of a product is the product of lowest terms, so for exact
// inputs each step emits one quotient term and strictly raises the
// remainder's valuation.
GroupRingPoly GroupRingPoly::divided_exact(const GroupRingPoly& g) const {
	if (g.is_zero()) throw std::domain_error("exact division by zero polynomial");
	GroupRingPoly q(fld, d);
	if (is_zero()) return q;
	GroupRingPoly r = *this;
	const QuadReal& ge = g.lowest_exp();
	GroundScalar gc_inv = g.lowest_coeff().inverse();
	// any exact quotient has top exponent top(f) - top(g)
	QuadReal top_bound = ts.back().exp - g.ts.back().exp;
	std::size_t fuse = 1024 + 8 * (ts.size() + 2) * (g.ts.size() + 2);
	std::vector<Term> merged;
	while (!r.is_zero()) {
		QuadReal e = r.lowest_exp() - ge;
		if (top_bound < e || q.ts.size() > fuse) throw std::logic_error("exact division found a remainder");
		GroundScalar c = r.lowest_coeff() * gc_inv;
		q.ts.push_back({e, c});
		// r -= c * T^e * g as a single merge
		merged.clear();
		merged.reserve(r.ts.size() + g.ts.size());
		std::size_t i = 0, j = 0;
		while (i < r.ts.size() || j < g.ts.size()) {
			QuadReal shifted = j < g.ts.size() ? g.ts[j].exp + e : QuadReal();
			if (j == g.ts.size() || (i < r.ts.size() && r.ts[i].exp < shifted)) {
				merged.push_back(r.ts[i++]);
			} else if (i == r.ts.size() || shifted < r.ts[i].exp) {
				merged.push_back({shifted, -(c * g.ts[j].coeff)});
				++j;
			} else {
				GroundScalar cc = r.ts[i].coeff - c * g.ts[j].coeff;
				if (!cc.is_zero()) merged.push_back({r.ts[i].exp, cc});
				++i;
				++j;
			}
		}
		r.ts.swap(merged);
	}
	return q;
}

bool GroupRingPoly::operator==(const GroupRingPoly& o) const {
	if (ts.size() != o.ts.size()) return false;
	for (std::size_t i = 0; i < ts.size(); ++i)
		if (ts[i].exp != o.ts[i].exp || ts[i].coeff != o.ts[i].coeff) return false;
	return true;
}

std::string GroupRingPoly::to_string() const {
	if (ts.empty()) return "0";
	std::string s;
	for (std::size_t i = 0; i < ts.size(); ++i) {
		if (i) s += " + ";
		if (ts[i].exp.is_zero())
			s += ts[i].coeff.to_string();
		else if (ts[i].coeff.is_one())
			s += "T^(" + ts[i].exp.to_string() + ")";
		else
			s += ts[i].coeff.to_string() + "*T^(" + ts[i].exp.to_string() + ")";
	}
	return s;
}

NovikovScalar::NovikovScalar(GroupRingPoly p)
    : n(std::move(p)), m(GroupRingPoly::constant(GroundScalar::one(n.field()), n.disc())) {}

NovikovScalar::NovikovScalar(GroupRingPoly numerator, GroupRingPoly denominator)
    : n(std::move(numerator)), m(std::move(denominator)) {
	if (m.is_zero()) throw std::domain_error("Novikov scalar with zero denominator");
	normalize();
}

NovikovScalar NovikovScalar::zero(const GroundField& f, std::int64_t disc) {
	return NovikovScalar(GroupRingPoly::zero(f, disc));
}

NovikovScalar NovikovScalar::one(const GroundField& f, std::int64_t disc) {
	return NovikovScalar(GroupRingPoly::constant(GroundScalar::one(f), disc));
}

NovikovScalar NovikovScalar::monomial(const GroundScalar& c, const QuadReal& g) {
	return NovikovScalar(GroupRingPoly::monomial(c, g));
}

NovikovScalar NovikovScalar::constant(const GroundScalar& c, std::int64_t disc) {
	return NovikovScalar(GroupRingPoly::constant(c, disc));
}

// den becomes monic-lowest with valuation 0; any common monomial factor moves
// into the numerator.  Exact cancellation when num and den agree up to a
// monomial keeps the elimination kernel's scalars small in the common case.
void NovikovScalar::normalize() {
	if (n.is_zero()) {
		m = GroupRingPoly::constant(GroundScalar::one(n.field()), n.disc());
		return;
	}
	QuadReal shift = m.lowest_exp();
	GroundScalar lead = m.lowest_coeff();
	if (!shift.is_zero()) m = m.shifted(-shift);
	if (!lead.is_one()) m = m.scaled(lead.inverse());
	if (!shift.is_zero() || !lead.is_one()) {
		n = n.shifted(-shift).scaled(lead.inverse());
	}
	if (m.is_one()) return;
	// num == c * T^g * den  =>  reduce to a monomial
	if (n.terms().size() == m.terms().size()) {
		QuadReal g = n.lowest_exp() - m.lowest_exp();
		GroundScalar c = n.lowest_coeff() / m.lowest_coeff();
		if (m.scaled(c).shifted(g) == n) {
			n = GroupRingPoly::monomial(c, g);
			m = GroupRingPoly::constant(GroundScalar::one(n.field()), n.disc());
		}
	}
}

ExtQuad NovikovScalar::valuation() const {
	if (n.is_zero()) return ExtQuad::pos_inf();
	return n.valuation() - m.valuation();
}

NovikovScalar NovikovScalar::operator+(const NovikovScalar& o) const {
	if (m == o.m) return NovikovScalar(n + o.n, m);
	return NovikovScalar(n * o.m + o.n * m, m * o.m);
}

NovikovScalar NovikovScalar::operator-(const NovikovScalar& o) const { return *this + (-o); }

NovikovScalar NovikovScalar::operator*(const NovikovScalar& o) const {
	if (is_zero() || o.is_zero()) return zero(field(), disc());
	return NovikovScalar(n * o.n, m * o.m);
}

NovikovScalar NovikovScalar::operator/(const NovikovScalar& o) const { return *this * o.inverse(); }

NovikovScalar NovikovScalar::operator-() const {
	NovikovScalar r = *this;
	r.n = -r.n;
	return r;
}

NovikovScalar NovikovScalar::inverse() const {
	if (is_zero()) throw std::domain_error("division by zero Novikov scalar");
	return NovikovScalar(m, n);
}

bool NovikovScalar::operator==(const NovikovScalar& o) const { return n * o.m == o.n * m; }

std::string NovikovScalar::to_string() const {
	if (m.is_one()) return n.to_string();
	return "(" + n.to_string() + ")/(" + m.to_string() + ")";
}

} // namespace barnov
