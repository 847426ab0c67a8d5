#include "barnov/complex.hpp"

#include <algorithm>

namespace barnov {

FilteredSpace FloerComplex::space(int k) const {
	if (!in_window(k)) return zero_space(ctx);
	return spaces[k - k_min];
}

LinearMap FloerComplex::boundary(int k) const {
	int i = k - k_min - 1;
	if (i >= 0 && i < static_cast<int>(bnds.size())) return bnds[i];
	return zero_map(space(k), space(k - 1));
}

int FloerComplex::total_dim() const {
	int n = 0;
	for (const auto& s : spaces) n += s.dim();
	return n;
}

FloerComplex make_complex(SetupPtr ctx, int k_min, std::vector<FilteredSpace> spaces, std::vector<LinearMap> bnds) {
	if (bnds.size() + 1 != spaces.size() && !(spaces.empty() && bnds.empty()))
		throw config_error("complex needs one boundary map per adjacent degree pair");
	for (std::size_t i = 0; i < bnds.size(); ++i) {
		if (bnds[i].domain.dim() != spaces[i + 1].dim() || bnds[i].codomain.dim() != spaces[i].dim())
			throw config_error("boundary map dimensions disagree with the graded spaces");
	}
	return FloerComplex{std::move(ctx), k_min, std::move(spaces), std::move(bnds)};
}

bool complexes_equal(const FloerComplex& a, const FloerComplex& b) {
	if (a.k_min != b.k_min || a.spaces.size() != b.spaces.size()) return false;
	for (std::size_t i = 0; i < a.spaces.size(); ++i) {
		if (a.spaces[i].levels.size() != b.spaces[i].levels.size()) return false;
		for (std::size_t j = 0; j < a.spaces[i].levels.size(); ++j)
			if (a.spaces[i].levels[j] != b.spaces[i].levels[j]) return false;
	}
	for (std::size_t i = 0; i < a.bnds.size(); ++i)
		for (std::size_t j = 0; j < a.bnds[i].cols.size(); ++j)
			if (a.bnds[i].cols[j] != b.bnds[i].cols[j]) return false;
	return true;
}

std::string ValidationReport::summary() const {
	if (ok()) return "ok";
	std::string s;
	for (const auto& v : violations) s += v + "\n";
	return s;
}

ValidationReport validate(const FloerComplex& c, bool strict) {
	ValidationReport rep;
	for (int k = c.k_min; k <= c.k_max(); ++k) {
		LinearMap dk = c.boundary(k);
		LinearMap dk1 = c.boundary(k + 1);
		LinearMap sq = compose(dk, dk1);
		for (int j = 0; j < sq.domain.dim(); ++j)
			for (int i = 0; i < sq.codomain.dim(); ++i)
				if (!sq.cols[j].c[i].is_zero())
					rep.violations.push_back("d o d != 0: degree " + std::to_string(k + 1) + " generator " +
					                         std::to_string(j) + " hits degree " + std::to_string(k - 1) +
					                         " generator " + std::to_string(i));
		for (int j = 0; j < dk.domain.dim(); ++j) {
			ExtQuad lb = level(dk.codomain, dk.cols[j]);
			ExtQuad lv(dk.domain.levels[j]);
			bool bad = strict ? !(lb < lv) : lv < lb;
			if (bad)
				rep.violations.push_back("level violation at degree " + std::to_string(k) + " generator " +
				                         std::to_string(j) + ": l(dv) = " + lb.to_string() + (strict ? " !< " : " > ") +
				                         "l(v) = " + lv.to_string());
		}
	}
	return rep;
}

FloerComplex elementary(SetupPtr ctx, const QuadReal& a, const ExtQuad& L, int k) {
	if (L.is_neg_inf() || (L.finite() && L.value().sign() < 0)) throw config_error("elementary complex needs L >= 0");
	if (L.is_pos_inf()) {
		std::vector<FilteredSpace> sp{make_space(ctx, {a})};
		return make_complex(ctx, k, std::move(sp), {});
	}
	FilteredSpace ck = make_space(ctx, {a});
	FilteredSpace ck1 = make_space(ctx, {a + L.value()});
	LinearMap d{ck1, ck, {basis_vector(ck, 0)}};
	std::vector<FilteredSpace> sp{ck, ck1};
	std::vector<LinearMap> bd{d};
	return make_complex(ctx, k, std::move(sp), std::move(bd));
}

FloerComplex direct_sum(const std::vector<FloerComplex>& summands) {
	if (summands.empty()) throw config_error("direct sum of zero complexes needs a context");
	SetupPtr ctx = summands[0].ctx;
	for (const auto& s : summands)
		if (s.ctx->field != ctx->field || !(s.ctx->group == ctx->group))
			throw config_error("direct sum across different (K, Gamma) configurations");
	int lo = summands[0].k_min, hi = summands[0].k_max();
	for (const auto& s : summands) {
		if (s.spaces.empty()) continue;
		lo = std::min(lo, s.k_min);
		hi = std::max(hi, s.k_max());
	}
	std::vector<FilteredSpace> spaces;
	for (int k = lo; k <= hi; ++k) {
		std::vector<QuadReal> levels;
		for (const auto& s : summands) {
			FilteredSpace sk = s.space(k);
			levels.insert(levels.end(), sk.levels.begin(), sk.levels.end());
		}
		spaces.push_back(make_space(ctx, std::move(levels)));
	}
	std::vector<LinearMap> bnds;
	for (int k = lo + 1; k <= hi; ++k) {
		LinearMap d = zero_map(spaces[k - lo], spaces[k - 1 - lo]);
		int coff = 0, roff = 0;
		for (const auto& s : summands) {
			LinearMap dk = s.boundary(k);
			for (int j = 0; j < dk.domain.dim(); ++j)
				for (int i = 0; i < dk.codomain.dim(); ++i) d.cols[coff + j].c[roff + i] = dk.cols[j].c[i];
			coff += dk.domain.dim();
			roff += dk.codomain.dim();
		}
		bnds.push_back(std::move(d));
	}
	return make_complex(ctx, lo, std::move(spaces), std::move(bnds));
}

FloerComplex dual_complex(const FloerComplex& c) {
	int lo = -c.k_max(), hi = -c.k_min;
	std::vector<FilteredSpace> spaces;
	for (int k = lo; k <= hi; ++k) spaces.push_back(dual_space(c.space(-k)));
	std::vector<LinearMap> bnds;
	for (int k = lo + 1; k <= hi; ++k) {
		// boundary (C*)_k -> (C*)_{k-1} is the adjoint of d : C_{-k+1} -> C_{-k}
		LinearMap adj = adjoint_map(c.boundary(-k + 1));
		adj.domain = spaces[k - lo];
		adj.codomain = spaces[k - 1 - lo];
		bnds.push_back(std::move(adj));
	}
	return make_complex(c.ctx, lo, std::move(spaces), std::move(bnds));
}

FloerComplex coefficient_extension(const FloerComplex& c, const ValueGroup& larger) {
	SetupPtr ctx = make_setup(c.ctx->field, larger);
	std::vector<FilteredSpace> spaces;
	for (const auto& s : c.spaces) spaces.push_back(extend_coefficients_space(s, larger));
	std::vector<LinearMap> bnds;
	for (std::size_t i = 0; i < c.bnds.size(); ++i) {
		LinearMap d = c.bnds[i];
		d.domain = spaces[i + 1];
		d.codomain = spaces[i];
		bnds.push_back(std::move(d));
	}
	FloerComplex out = make_complex(ctx, c.k_min, std::move(spaces), std::move(bnds));
	return out;
}

LinearMap FilteredChainMap::map_at(int k) const {
	auto it = maps.find(k);
	if (it != maps.end()) return it->second;
	return zero_map(source.space(k), target.space(k));
}

ValidationReport validate_chain_map(const FilteredChainMap& phi) {
	ValidationReport rep;
	int lo = std::min(phi.source.k_min, phi.target.k_min);
	int hi = std::max(phi.source.k_max(), phi.target.k_max());
	for (int k = lo; k <= hi; ++k) {
		LinearMap lhs = compose(phi.target.boundary(k), phi.map_at(k));
		LinearMap rhs = compose(phi.map_at(k - 1), phi.source.boundary(k));
		for (int j = 0; j < lhs.domain.dim(); ++j)
			if (lhs.cols[j] != rhs.cols[j])
				rep.violations.push_back("chain map equation fails at degree " + std::to_string(k) + " generator " +
				                         std::to_string(j));
		LinearMap pk = phi.map_at(k);
		for (int j = 0; j < pk.domain.dim(); ++j) {
			ExtQuad shifted = ExtQuad(pk.domain.levels[j] + phi.shift);
			if (shifted < level(pk.codomain, pk.cols[j]))
				rep.violations.push_back("shift violation at degree " + std::to_string(k) + " generator " +
				                         std::to_string(j));
		}
	}
	return rep;
}

Splitting splitting(const FloerComplex& c) {
	Splitting sp;
	for (int k = c.k_min; k <= c.k_max(); ++k) {
		SvdResult r = svd(c.boundary(k));
		// spans are what matter here; polynomial representatives keep the
		// projection solves cheap
		std::vector<FilteredVector> F(r.y.begin(), r.y.begin() + r.rank);
		std::vector<FilteredVector> ker = r.kernel_basis();
		for (auto& v : F) v = clear_denominators(v);
		for (auto& v : ker) v = clear_denominators(v);
		sp.F[k] = std::move(F);
		sp.kernel[k] = std::move(ker);
	}
	return sp;
}

namespace {

// projection onto span(F) along span(kernel), as a matrix
LinearMap projection_onto(const FilteredSpace& s, const std::vector<FilteredVector>& F,
                          const std::vector<FilteredVector>& kernel) {
	std::vector<FilteredVector> basis = F;
	basis.insert(basis.end(), kernel.begin(), kernel.end());
	auto inv = invert_matrix(basis, s);
	if (!inv) throw std::logic_error("splitting basis is not invertible");
	LinearMap p = zero_map(s, s);
	for (int j = 0; j < s.dim(); ++j) {
		std::vector<NovikovScalar> coeffs((*inv)[j].c.begin(), (*inv)[j].c.begin() + F.size());
		p.cols[j] = combine(F, coeffs, s);
	}
	return p;
}

} // namespace

FilteredChainMap split_map(const FilteredChainMap& phi, const Splitting& sc, const Splitting& sd) {
	FilteredChainMap out = phi;
	out.maps.clear();
	int lo = std::min(phi.source.k_min, phi.target.k_min);
	int hi = std::max(phi.source.k_max(), phi.target.k_max());
	for (int k = lo; k <= hi; ++k) {
		FilteredSpace ck = phi.source.space(k), dk = phi.target.space(k);
		if (ck.dim() == 0 || dk.dim() == 0) continue;
		auto fc = sc.F.count(k) ? sc.F.at(k) : std::vector<FilteredVector>{};
		auto kc = sc.kernel.count(k) ? sc.kernel.at(k) : std::vector<FilteredVector>{};
		auto fd = sd.F.count(k) ? sd.F.at(k) : std::vector<FilteredVector>{};
		auto kd = sd.kernel.count(k) ? sd.kernel.at(k) : std::vector<FilteredVector>{};
		LinearMap pc = projection_onto(ck, fc, kc);
		LinearMap pd = projection_onto(dk, fd, kd);
		LinearMap base = phi.map_at(k);
		LinearMap res = zero_map(ck, dk);
		for (int j = 0; j < ck.dim(); ++j) {
			FilteredVector pcj = pc.cols[j];
			FilteredVector rest = sub(basis_vector(ck, j), pcj);
			res.cols[j] = add(pd.apply(base.apply(pcj)), base.apply(rest));
		}
		out.maps.emplace(k, std::move(res));
	}
	return out;
}

namespace {

struct BlockShifts {
	QuadReal c, d, e;
};

FloerComplex assemble_cylinder(const FilteredChainMap& phi, const BlockShifts& sh) {
	const FloerComplex& C = phi.source;
	const FloerComplex& D = phi.target;
	SetupPtr ctx = C.ctx;
	int lo = std::min(C.k_min, D.k_min);
	int hi = std::max(C.k_max() + 1, D.k_max());
	std::vector<FilteredSpace> spaces;
	for (int k = lo; k <= hi; ++k) {
		std::vector<QuadReal> levels;
		for (const auto& t : C.space(k).levels) levels.push_back(t + sh.c);
		for (const auto& t : D.space(k).levels) levels.push_back(t + sh.d);
		for (const auto& t : C.space(k - 1).levels) levels.push_back(t + sh.e);
		spaces.push_back(make_space(ctx, std::move(levels)));
	}
	std::vector<LinearMap> bnds;
	for (int k = lo + 1; k <= hi; ++k) {
		const FilteredSpace& dom = spaces[k - lo];
		const FilteredSpace& cod = spaces[k - 1 - lo];
		int nc = C.space(k).dim(), nd = D.space(k).dim();
		int mc = C.space(k - 1).dim(), md = D.space(k - 1).dim();
		LinearMap d = zero_map(dom, cod);
		LinearMap dC = C.boundary(k), dCe = C.boundary(k - 1), dD = D.boundary(k);
		LinearMap ph = phi.map_at(k - 1);
		// codomain blocks: c' rows [0, mc), d' rows [mc, mc+md), e' rows beyond
		for (int j = 0; j < nc; ++j)
			for (int i = 0; i < mc; ++i) d.cols[j].c[i] = dC.cols[j].c[i];
		for (int j = 0; j < nd; ++j)
			for (int i = 0; i < md; ++i) d.cols[nc + j].c[mc + i] = dD.cols[j].c[i];
		for (int j = 0; j < mc; ++j) {
			FilteredVector& col = d.cols[nc + nd + j];
			col.c[j] = -NovikovScalar::one(ctx->field, ctx->disc());  // -e into the c' block
			for (int i = 0; i < md; ++i) col.c[mc + i] = ph.cols[j].c[i];
			for (int i = 0; i < dCe.codomain.dim(); ++i) col.c[mc + md + i] = -dCe.cols[j].c[i];
		}
		bnds.push_back(std::move(d));
	}
	return make_complex(ctx, lo, std::move(spaces), std::move(bnds));
}

} // namespace

FloerComplex mapping_cylinder(const FilteredChainMap& phi, CylinderFiltration variant, const QuadReal& delta) {
	const QuadReal zero = QuadReal::integer(0, phi.source.ctx->disc());
	if (delta.sign() < 0) throw config_error("cylinder needs delta >= 0");
	if (variant == CylinderFiltration::plain && delta.sign() != 0)
		throw config_error("plain cylinder filtration requires delta = 0");
	if (delta < phi.shift) throw config_error("cylinder filtration needs the chain-map shift <= delta");
	BlockShifts sh{zero, zero, zero};
	switch (variant) {
	case CylinderFiltration::plain: break;
	case CylinderFiltration::shift_target: sh = {delta, zero, delta}; break;
	case CylinderFiltration::shift_source: sh = {zero, delta, delta + delta}; break;
	}
	return assemble_cylinder(phi, sh);
}

FloerComplex mapping_cone(const FilteredChainMap& phi, const QuadReal& delta) {
	if (delta.sign() < 0) throw config_error("cone needs delta >= 0");
	if (delta < phi.shift) throw config_error("cone filtration needs the chain-map shift <= delta");
	const FloerComplex& C = phi.source;
	const FloerComplex& D = phi.target;
	SetupPtr ctx = C.ctx;
	int lo = std::min(C.k_min + 1, D.k_min);
	int hi = std::max(C.k_max() + 1, D.k_max());
	std::vector<FilteredSpace> spaces;
	for (int k = lo; k <= hi; ++k) {
		std::vector<QuadReal> levels;
		for (const auto& t : D.space(k).levels) levels.push_back(t + delta);
		for (const auto& t : C.space(k - 1).levels) levels.push_back(t + delta + delta);
		spaces.push_back(make_space(ctx, std::move(levels)));
	}
	std::vector<LinearMap> bnds;
	for (int k = lo + 1; k <= hi; ++k) {
		const FilteredSpace& dom = spaces[k - lo];
		const FilteredSpace& cod = spaces[k - 1 - lo];
		int nd = D.space(k).dim();
		int md = D.space(k - 1).dim();
		LinearMap d = zero_map(dom, cod);
		LinearMap dD = D.boundary(k), dCe = C.boundary(k - 1);
		LinearMap ph = phi.map_at(k - 1);
		for (int j = 0; j < nd; ++j)
			for (int i = 0; i < md; ++i) d.cols[j].c[i] = dD.cols[j].c[i];
		for (int j = 0; j < C.space(k - 1).dim(); ++j) {
			FilteredVector& col = d.cols[nd + j];
			for (int i = 0; i < md; ++i) col.c[i] = -ph.cols[j].c[i];
			for (int i = 0; i < dCe.codomain.dim(); ++i) col.c[md + i] = -dCe.cols[j].c[i];
		}
		bnds.push_back(std::move(d));
	}
	return make_complex(ctx, lo, std::move(spaces), std::move(bnds));
}

} // namespace barnov
