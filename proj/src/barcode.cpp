#include "barnov/barcode.hpp"

#include <algorithm>

namespace barnov {

std::vector<Bar> Barcode::degree_slice(int k) const {
	std::vector<Bar> out;
	for (const auto& b : bars)
		if (b.degree == k) out.push_back(b);
	return out;
}

std::vector<int> Barcode::occupied_degrees() const {
	std::vector<int> ks;
	for (const auto& b : bars) ks.push_back(b.degree);
	std::sort(ks.begin(), ks.end());
	ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
	return ks;
}

void sort_bars(Barcode& bc) {
	std::stable_sort(bc.bars.begin(), bc.bars.end(), [](const Bar& p, const Bar& q) {
		if (p.degree != q.degree) return p.degree < q.degree;
		if (p.a != q.a) return p.a < q.a;
		return p.length < q.length;
	});
}

BarcodePair barcodes(const FloerComplex& c, bool debug_checks) {
	ValidationReport rep = validate(c);
	if (!rep.ok()) throw config_error("barcodes of an invalid complex:\n" + rep.summary());

	BarcodePair out;
	const ValueGroup& group = c.ctx->group;
	for (int k = c.k_min; k <= c.k_max(); ++k) {
		// orthogonal basis of Z_k = ker d_k, with its levels; kernel vectors
		// are rescaled to polynomial entries (another orthogonal basis of the
		// same kernel, so the barcode is unchanged) to keep the solve cheap
		SvdResult sk = svd(c.boundary(k), debug_checks);
		std::vector<FilteredVector> zbasis = sk.kernel_basis();
		std::vector<QuadReal> zlevels;
		for (auto& z : zbasis) {
			z = clear_denominators(z);
			zlevels.push_back(level(c.space(k), z).value());
		}
		FilteredSpace zk = make_space(c.ctx, zlevels);

		// d_{k+1} with codomain restricted to Z_k coordinates
		LinearMap dk1 = c.boundary(k + 1);
		LinearMap restricted = zero_map(dk1.domain, zk);
		auto solved = solve_linear_many(zbasis, dk1.cols, c.space(k));
		for (int j = 0; j < dk1.domain.dim(); ++j) {
			if (!solved[j]) throw std::logic_error("boundary image escapes the kernel (d o d != 0?)");
			restricted.cols[j].c = std::move(*solved[j]);
		}

		SvdResult sz = svd(restricted, debug_checks);
		for (int i = 0; i < static_cast<int>(sz.x.size()); ++i) {
			ValueGroup::Rep rep_a = group.canonical_rep(sz.x_levels[i]);
			Bar bar;
			bar.degree = k;
			bar.a = rep_a.rep;
			bar.a_canonical = rep_a.canonical;
			bar.length = i < sz.rank ? ExtQuad(sz.diffs[i]) : ExtQuad::pos_inf();
			out.verbose.bars.push_back(bar);
			if (bar.length > ExtQuad(QuadReal::integer(0, c.ctx->disc()))) out.concise.bars.push_back(bar);
		}
	}
	sort_bars(out.verbose);
	sort_bars(out.concise);
	return out;
}

namespace {

// ground-field value of a Novikov scalar that is a constant (trivial Gamma)
GroundScalar ground_value(const NovikovScalar& s) {
	if (s.is_zero()) return GroundScalar::zero(s.field());
	if (!s.num().is_monomial() || !s.den().is_monomial() || !s.num().lowest_exp().is_zero() ||
	    !s.den().lowest_exp().is_zero())
		throw std::logic_error("non-constant scalar over a trivial value group");
	return s.num().lowest_coeff() / s.den().lowest_coeff();
}

} // namespace

Barcode classical_oracle(const FloerComplex& c) {
	if (!c.ctx->group.is_trivial()) throw config_error("classical oracle requires a trivial value group");
	ValidationReport rep = validate(c);
	if (!rep.ok()) throw config_error("classical oracle on an invalid complex:\n" + rep.summary());

	// global generator order: level ascending, then degree, then index, so
	// every boundary hits strictly earlier generators
	struct Gen {
		int degree, index;
		QuadReal lvl;
	};
	std::vector<Gen> gens;
	for (int k = c.k_min; k <= c.k_max(); ++k)
		for (int i = 0; i < c.space(k).dim(); ++i) gens.push_back({k, i, c.space(k).levels[i]});
	std::stable_sort(gens.begin(), gens.end(), [](const Gen& p, const Gen& q) {
		if (p.lvl != q.lvl) return p.lvl < q.lvl;
		return p.degree < q.degree;
	});
	const int n = static_cast<int>(gens.size());
	std::vector<std::vector<int>> pos_of(c.spaces.size());
	for (std::size_t i = 0; i < c.spaces.size(); ++i) pos_of[i].assign(c.spaces[i].dim(), -1);
	for (int p = 0; p < n; ++p) pos_of[gens[p].degree - c.k_min][gens[p].index] = p;

	const GroundField& f = c.ctx->field;
	const GroundScalar gzero = GroundScalar::zero(f);
	std::vector<std::vector<GroundScalar>> col(n, std::vector<GroundScalar>(n, gzero));
	for (int p = 0; p < n; ++p) {
		const Gen& g = gens[p];
		LinearMap d = c.boundary(g.degree);
		if (d.codomain.dim() == 0) continue;
		for (int i = 0; i < d.codomain.dim(); ++i) {
			const NovikovScalar& e = d.cols[g.index].c[i];
			if (!e.is_zero()) col[p][pos_of[g.degree - 1 - c.k_min][i]] = ground_value(e);
		}
	}

	auto low = [&](int j) {
		for (int i = n - 1; i >= 0; --i)
			if (!col[j][i].is_zero()) return i;
		return -1;
	};

	std::vector<int> low_owner(n, -1);  // row -> column with that low
	std::vector<int> death_of(n, -1);   // generator position -> killing column
	for (int j = 0; j < n; ++j) {
		int l = low(j);
		while (l >= 0 && low_owner[l] >= 0) {
			int j2 = low_owner[l];
			GroundScalar factor = col[j][l] / col[j2][l];
			for (int i = 0; i <= l; ++i)
				if (!col[j2][i].is_zero()) col[j][i] = col[j][i] - factor * col[j2][i];
			l = low(j);
		}
		if (l >= 0) {
			low_owner[l] = j;
			death_of[l] = j;
		}
	}

	Barcode out;
	for (int p = 0; p < n; ++p) {
		if (low(p) >= 0) continue;  // reduced column nonzero: p is a negative generator
		Bar bar;
		bar.degree = gens[p].degree;
		bar.a = gens[p].lvl;
		bar.a_canonical = true;
		if (death_of[p] >= 0) {
			QuadReal len = gens[death_of[p]].lvl - gens[p].lvl;
			if (len.sign() <= 0) continue;  // zero-length pair: empty interval
			bar.length = ExtQuad(len);
		} else {
			bar.length = ExtQuad::pos_inf();
		}
		out.bars.push_back(bar);
	}
	sort_bars(out);
	return out;
}

ExtQuad spectral_invariant(const FloerComplex& c, int k, const FilteredVector& cycle) {
	LinearMap dk = c.boundary(k);
	if (cycle.dim() != dk.domain.dim()) throw config_error("cycle dimension mismatch");
	if (!dk.apply(cycle).is_zero()) throw std::invalid_argument("spectral invariant of a non-cycle");
	SvdResult r = svd(c.boundary(k + 1));
	std::vector<FilteredVector> image(r.x.begin(), r.x.begin() + r.rank);
	return best_approximation(c.space(k), image, cycle).dist;
}

bool bars_equal(const ValueGroup& group, const Bar& x, const Bar& y) {
	return x.degree == y.degree && x.length == y.length && group.same_coset(x.a, y.a);
}

bool barcodes_equal(const ValueGroup& group, const Barcode& a, const Barcode& b) {
	if (a.bars.size() != b.bars.size()) return false;
	std::vector<char> used(b.bars.size(), 0);
	for (const auto& x : a.bars) {
		bool found = false;
		for (std::size_t j = 0; j < b.bars.size(); ++j) {
			if (used[j]) continue;
			if (bars_equal(group, x, b.bars[j])) {
				used[j] = 1;
				found = true;
				break;
			}
		}
		if (!found) return false;
	}
	return true;
}

} // namespace barnov
