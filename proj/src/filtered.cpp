#include "barnov/filtered.hpp"

#include <algorithm>

namespace barnov {

namespace {

// product of the distinct denominators among the given scalars
GroupRingPoly distinct_denominator_product(const std::vector<const NovikovScalar*>& entries, const GroundField& fld,
                                           std::int64_t d) {
	std::vector<const GroupRingPoly*> seen;
	for (const NovikovScalar* e : entries) {
		if (e->den().is_one()) continue;
		bool dup = false;
		for (const GroupRingPoly* p : seen)
			if (*p == e->den()) {
				dup = true;
				break;
			}
		if (!dup) seen.push_back(&e->den());
	}
	GroupRingPoly prod = GroupRingPoly::constant(GroundScalar::one(fld), d);
	for (const GroupRingPoly* p : seen) prod = prod * *p;
	return prod;
}

} // namespace

FilteredSpace make_space(SetupPtr ctx, std::vector<QuadReal> levels) {
	for (const auto& t : levels)
		if (t.disc() != ctx->disc()) throw config_error("level with foreign discriminant");
	return FilteredSpace{std::move(ctx), std::move(levels)};
}

FilteredSpace zero_space(SetupPtr ctx) { return FilteredSpace{std::move(ctx), {}}; }

bool FilteredVector::is_zero() const {
	for (const auto& x : c)
		if (!x.is_zero()) return false;
	return true;
}

bool FilteredVector::operator==(const FilteredVector& o) const {
	if (c.size() != o.c.size()) return false;
	for (std::size_t i = 0; i < c.size(); ++i)
		if (c[i] != o.c[i]) return false;
	return true;
}

FilteredVector zero_vector(const FilteredSpace& s) {
	FilteredVector v;
	v.c.assign(s.levels.size(), NovikovScalar::zero(s.field(), s.disc()));
	return v;
}

FilteredVector basis_vector(const FilteredSpace& s, int i) {
	FilteredVector v = zero_vector(s);
	v.c.at(i) = NovikovScalar::one(s.field(), s.disc());
	return v;
}

FilteredVector add(const FilteredVector& v, const FilteredVector& w) {
	FilteredVector r = v;
	for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] + w.c.at(i);
	return r;
}

FilteredVector sub(const FilteredVector& v, const FilteredVector& w) {
	FilteredVector r = v;
	for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] - w.c.at(i);
	return r;
}

FilteredVector scale(const NovikovScalar& lambda, const FilteredVector& v) {
	FilteredVector r = v;
	for (auto& x : r.c) x = lambda * x;
	return r;
}

FilteredVector subtract_scaled(const FilteredVector& v, const NovikovScalar& lambda, const FilteredVector& w) {
	FilteredVector r = v;
	for (std::size_t i = 0; i < r.c.size(); ++i)
		if (!w.c[i].is_zero()) r.c[i] = r.c[i] - lambda * w.c[i];
	return r;
}

ExtQuad level(const FilteredSpace& s, const FilteredVector& v) {
	if (v.dim() != s.dim()) throw config_error("vector/space dimension mismatch");
	ExtQuad best = ExtQuad::neg_inf();
	for (int i = 0; i < s.dim(); ++i) {
		if (v.c[i].is_zero()) continue;
		ExtQuad cand(s.levels[i] - v.c[i].valuation().value());
		if (best < cand) best = cand;
	}
	return best;
}

TriangularizeResult triangularize(const FilteredSpace& codomain, std::vector<FilteredVector> cols, int forced_prefix,
                                  const std::vector<QuadReal>* domain_levels, bool track_domain) {
	const int m = codomain.dim();
	const int n = static_cast<int>(cols.size());
	if (forced_prefix < 0 || forced_prefix > n) throw config_error("forced_prefix out of range");
	for (const auto& c : cols)
		if (c.dim() != m) throw config_error("column/codomain dimension mismatch");
	if (domain_levels && static_cast<int>(domain_levels->size()) != n)
		throw config_error("domain_levels size mismatch");

	const GroundField& fld = codomain.field();
	const std::int64_t d = codomain.disc();
	const GroupRingPoly pone = GroupRingPoly::constant(GroundScalar::one(fld), d);
	const QuadReal qzero = QuadReal::integer(0, d);

	// Clear each column to polynomial entries.  A column's cumulative scaling
	// telescopes to clear_j * (pivot of the last step that touched it), since
	// each Bareiss step multiplies by pivot/prev and prev is the previous
	// step's pivot; off[j] tracks the valuation of that scaling for the
	// pivot rule.
	std::vector<std::vector<GroupRingPoly>> a(n, std::vector<GroupRingPoly>(m, GroupRingPoly::zero(fld, d)));
	std::vector<std::vector<GroupRingPoly>> v;
	std::vector<GroupRingPoly> clear_of(n, pone), last_piv(n, pone);
	std::vector<QuadReal> clear_val(n, qzero), off(n, qzero);
	for (int j = 0; j < n; ++j) {
		std::vector<const NovikovScalar*> entries;
		for (int i = 0; i < m; ++i) entries.push_back(&cols[j].c[i]);
		GroupRingPoly clear = distinct_denominator_product(entries, fld, d);
		for (int i = 0; i < m; ++i) {
			const NovikovScalar& e = cols[j].c[i];
			if (e.is_zero()) continue;
			a[j][i] = e.num() * clear.divided_exact(e.den());
		}
		clear_val[j] = clear.valuation().value();
		off[j] = clear_val[j];
		clear_of[j] = std::move(clear);
	}
	if (track_domain) {
		v.assign(n, std::vector<GroupRingPoly>(n, GroupRingPoly::zero(fld, d)));
		for (int j = 0; j < n; ++j) v[j][j] = clear_of[j];  // clearing applies to v_j too
	}

	TriangularizeResult res;
	std::vector<char> unused(n, 1);
	GroupRingPoly prev = pone;

	auto run_pivot = [&](int i0, int j0) {
		res.pivots.emplace_back(i0, j0);
		unused[j0] = 0;
		GroupRingPoly pivot = a[j0][i0];
		QuadReal pivot_val = pivot.valuation().value();
		for (int j = 0; j < n; ++j) {
			if (!unused[j]) continue;
			const GroupRingPoly f = a[j][i0];
			for (int i = 0; i < m; ++i) {
				GroupRingPoly upd = pivot * a[j][i] - f * a[j0][i];
				a[j][i] = upd.divided_exact(prev);
			}
			if (track_domain)
				for (int i = 0; i < n; ++i) {
					GroupRingPoly upd = pivot * v[j][i] - f * v[j0][i];
					v[j][i] = upd.divided_exact(prev);
				}
			last_piv[j] = pivot;
			off[j] = clear_val[j] + pivot_val;
		}
		prev = std::move(pivot);
	};

	// best row within one column (ties to the smallest row index); the
	// quantity is computed on scaled data, with the column's valuation
	// offset cancelling so that it matches the plain algorithm exactly
	auto best_row = [&](int j) {
		int bi = -1;
		ExtQuad bq = ExtQuad::neg_inf();
		for (int i = 0; i < m; ++i) {
			if (a[j][i].is_zero()) continue;
			ExtQuad q(codomain.levels[i] - a[j][i].valuation().value() + off[j]);
			if (bi < 0 || bq < q) {
				bi = i;
				bq = q;
			}
		}
		return std::pair<int, ExtQuad>(bi, bq);
	};

	for (int j0 = 0; j0 < forced_prefix; ++j0) {
		auto [i0, q] = best_row(j0);
		if (i0 < 0) throw dependent_error(j0);
		run_pivot(i0, j0);
	}

	for (;;) {
		int bi = -1, bj = -1;
		ExtQuad bq = ExtQuad::neg_inf();
		for (int j = 0; j < n; ++j) {
			if (!unused[j]) continue;
			auto [i, q] = best_row(j);
			if (i < 0) continue;
			if (domain_levels) q = q - ExtQuad((*domain_levels)[j]);
			if (bj < 0 || bq < q) {  // equal q keeps the earlier (smaller i, then j) candidate
				bi = i;
				bj = j;
				bq = q;
			} else if (q == bq && i < bi) {
				bi = i;
				bj = j;
			}
		}
		if (bj < 0) break;
		run_pivot(bi, bj);
	}

	// divide the accumulated scalings back out
	res.cols.assign(n, FilteredVector{});
	if (track_domain) res.domain_vectors.assign(n, FilteredVector{});
	res.zeroed.assign(n, 0);
	for (int j = 0; j < n; ++j) {
		GroupRingPoly denom = clear_of[j].is_one() ? last_piv[j] : clear_of[j] * last_piv[j];
		res.cols[j].c.reserve(m);
		for (int i = 0; i < m; ++i) res.cols[j].c.push_back(NovikovScalar(a[j][i], denom));
		if (track_domain) {
			res.domain_vectors[j].c.reserve(n);
			for (int i = 0; i < n; ++i) res.domain_vectors[j].c.push_back(NovikovScalar(v[j][i], denom));
		}
		res.zeroed[j] = res.cols[j].is_zero();
	}
	return res;
}

BestApproximation best_approximation(const FilteredSpace& s, const std::vector<FilteredVector>& W_basis,
                                     const FilteredVector& x) {
	std::vector<FilteredVector> cols = W_basis;
	cols.push_back(x);
	TriangularizeResult tri = triangularize(s, std::move(cols), static_cast<int>(W_basis.size()));
	BestApproximation out;
	out.residual = tri.cols.back();
	out.w0 = sub(x, out.residual);
	out.dist = level(s, out.residual);
	return out;
}

std::vector<FilteredVector> gram_schmidt(const FilteredSpace& s, const std::vector<FilteredVector>& vectors,
                                         int prefix) {
	if (prefix < 0 || prefix > static_cast<int>(vectors.size())) throw config_error("prefix out of range");
	std::vector<FilteredVector> out(vectors.begin(), vectors.begin() + prefix);
	// the approximations run against rescaled representatives of the same
	// spans, so entry denominators do not compound across iterations
	std::vector<FilteredVector> work;
	work.reserve(vectors.size());
	for (const auto& v : out) work.push_back(clear_denominators(v));
	for (int i = prefix; i < static_cast<int>(vectors.size()); ++i) {
		BestApproximation ba = best_approximation(s, work, vectors[i]);
		if (ba.residual.is_zero()) throw dependent_error(i);
		work.push_back(clear_denominators(ba.residual));
		out.push_back(std::move(ba.residual));
	}
	return out;
}

int rank_of(const std::vector<FilteredVector>& cols, const FilteredSpace& s) {
	return triangularize(s, cols, 0).rank();
}

FilteredVector clear_denominators(const FilteredVector& v) {
	FilteredVector out = v;
	if (v.c.empty()) return out;
	const GroundField& fld = v.c[0].field();
	std::vector<const NovikovScalar*> entries;
	for (const auto& e : v.c) entries.push_back(&e);
	GroupRingPoly prod = distinct_denominator_product(entries, fld, v.c[0].disc());
	if (prod.is_one()) return out;
	for (std::size_t i = 0; i < out.c.size(); ++i) {
		const NovikovScalar& e = v.c[i];
		if (e.is_zero()) continue;
		out.c[i] = NovikovScalar(e.num() * prod.divided_exact(e.den()));
	}
	return out;
}

bool is_orthogonal(const FilteredSpace& s, const std::vector<FilteredVector>& vectors) {
	const int n = static_cast<int>(vectors.size());
	for (const auto& v : vectors)
		if (v.is_zero()) return false;
	if (n <= 1) return true;
	if (rank_of(vectors, s) < n) return false;
	for (int j = 0; j < n; ++j) {
		std::vector<FilteredVector> others;
		others.reserve(n - 1);
		for (int i = 0; i < n; ++i)
			if (i != j) others.push_back(vectors[i]);
		std::vector<FilteredVector> gs = gram_schmidt(s, others, 0);
		BestApproximation ba = best_approximation(s, gs, vectors[j]);
		if (ba.dist != level(s, vectors[j])) return false;
	}
	return true;
}

std::vector<FilteredVector> orthogonal_complement(const FilteredSpace& s, const std::vector<FilteredVector>& U_basis) {
	std::vector<FilteredVector> ext = gram_schmidt(s, U_basis, 0);
	const int k = static_cast<int>(ext.size());
	for (int i = 0; i < s.dim() && static_cast<int>(ext.size()) < s.dim(); ++i) {
		FilteredVector e = basis_vector(s, i);
		ext.push_back(e);
		if (rank_of(ext, s) < static_cast<int>(ext.size())) ext.pop_back();
	}
	std::vector<FilteredVector> out = gram_schmidt(s, ext, k);
	return std::vector<FilteredVector>(out.begin() + k, out.end());
}

FilteredSpace dual_space(const FilteredSpace& s) {
	FilteredSpace d = s;
	for (auto& t : d.levels) t = -t;
	return d;
}

FilteredSpace extend_coefficients_space(const FilteredSpace& s, const ValueGroup& larger) {
	if (!s.group().subgroup_of(larger))
		throw config_error("coefficient extension target does not contain the current value group");
	FilteredSpace e = s;
	e.ctx = make_setup(s.field(), larger);
	return e;
}

std::vector<ValueGroup::Rep> filtration_spectrum(const FilteredSpace& s) {
	std::vector<ValueGroup::Rep> reps;
	reps.reserve(s.levels.size());
	for (const auto& t : s.levels) reps.push_back(s.group().canonical_rep(t));
	std::sort(reps.begin(), reps.end(), [](const ValueGroup::Rep& a, const ValueGroup::Rep& b) {
		return a.rep < b.rep;
	});
	return reps;
}

bool spectra_equal(const ValueGroup& group, const std::vector<ValueGroup::Rep>& a,
                   const std::vector<ValueGroup::Rep>& b) {
	if (a.size() != b.size()) return false;
	std::vector<char> used(b.size(), 0);
	for (const auto& x : a) {
		bool found = false;
		for (std::size_t j = 0; j < b.size(); ++j) {
			if (used[j]) continue;
			if (group.same_coset(x.rep, b[j].rep)) {
				used[j] = 1;
				found = true;
				break;
			}
		}
		if (!found) return false;
	}
	return true;
}

// Fraction-free Gauss-Jordan (Montante): rows are cleared to polynomial
// entries (row scalings leave the solution set unchanged), every update is
// the cross-multiplied form divided exactly by the previous pivot.  At the
// end all pivot entries equal the final pivot, so each solution entry costs
// one field division.
std::vector<std::optional<std::vector<NovikovScalar>>> solve_linear_many(const std::vector<FilteredVector>& cols,
                                                                         const std::vector<FilteredVector>& rhs,
                                                                         const FilteredSpace& s) {
	const int m = s.dim();
	const int n = static_cast<int>(cols.size());
	const int q = static_cast<int>(rhs.size());
	const GroundField& fld = s.field();
	const std::int64_t d = s.disc();
	const GroupRingPoly pone = GroupRingPoly::constant(GroundScalar::one(fld), d);
	const NovikovScalar nzero = NovikovScalar::zero(fld, d);

	std::vector<std::vector<GroupRingPoly>> a(m, std::vector<GroupRingPoly>(n + q, GroupRingPoly::zero(fld, d)));
	for (int i = 0; i < m; ++i) {
		std::vector<const NovikovScalar*> entries;
		for (int j = 0; j < n; ++j) entries.push_back(&cols[j].c.at(i));
		for (int j = 0; j < q; ++j) entries.push_back(&rhs[j].c.at(i));
		GroupRingPoly clear = distinct_denominator_product(entries, fld, d);
		auto put = [&](int col, const NovikovScalar& e) {
			if (!e.is_zero()) a[i][col] = e.num() * clear.divided_exact(e.den());
		};
		for (int j = 0; j < n; ++j) put(j, cols[j].c.at(i));
		for (int j = 0; j < q; ++j) put(n + j, rhs[j].c.at(i));
	}

	std::vector<int> pivot_row_of_col(n, -1);
	std::vector<char> row_used(m, 0);
	GroupRingPoly prev = pone;
	for (int col = 0; col < n; ++col) {
		int pr = -1;
		for (int r = 0; r < m; ++r)
			if (!row_used[r] && !a[r][col].is_zero()) {
				pr = r;
				break;
			}
		if (pr < 0) continue;
		const GroupRingPoly pivot = a[pr][col];
		for (int r = 0; r < m; ++r) {
			if (r == pr) continue;
			const GroupRingPoly f = a[r][col];
			for (int c = 0; c < n + q; ++c) {
				GroupRingPoly upd = pivot * a[r][c] - f * a[pr][c];
				a[r][c] = upd.divided_exact(prev);
			}
		}
		prev = pivot;
		row_used[pr] = 1;
		pivot_row_of_col[col] = pr;
	}

	std::vector<std::optional<std::vector<NovikovScalar>>> out(q);
	const NovikovScalar det = NovikovScalar(prev).inverse();
	for (int j = 0; j < q; ++j) {
		bool consistent = true;
		for (int r = 0; r < m && consistent; ++r)
			if (!row_used[r] && !a[r][n + j].is_zero()) consistent = false;
		if (!consistent) continue;
		std::vector<NovikovScalar> x(n, nzero);
		for (int col = 0; col < n; ++col)
			if (pivot_row_of_col[col] >= 0) x[col] = NovikovScalar(a[pivot_row_of_col[col]][n + j]) * det;
		out[j] = std::move(x);
	}
	return out;
}

std::optional<std::vector<NovikovScalar>> solve_linear(const std::vector<FilteredVector>& cols,
                                                       const FilteredVector& b, const FilteredSpace& s) {
	return solve_linear_many(cols, {b}, s)[0];
}

std::optional<std::vector<FilteredVector>> invert_matrix(const std::vector<FilteredVector>& cols,
                                                         const FilteredSpace& s) {
	const int nn = static_cast<int>(cols.size());
	if (nn != s.dim()) return std::nullopt;
	std::vector<FilteredVector> unit;
	unit.reserve(nn);
	for (int i = 0; i < nn; ++i) unit.push_back(basis_vector(s, i));
	auto sols = solve_linear_many(cols, unit, s);
	std::vector<FilteredVector> inv;
	inv.reserve(nn);
	for (int i = 0; i < nn; ++i) {
		if (!sols[i]) return std::nullopt;
		FilteredVector v;
		v.c = std::move(*sols[i]);
		inv.push_back(std::move(v));
	}
	return inv;
}

FilteredVector combine(const std::vector<FilteredVector>& cols, const std::vector<NovikovScalar>& coeffs,
                       const FilteredSpace& codomain) {
	FilteredVector r = zero_vector(codomain);
	for (std::size_t j = 0; j < cols.size(); ++j) {
		if (coeffs.at(j).is_zero()) continue;
		for (int i = 0; i < r.dim(); ++i)
			if (!cols[j].c[i].is_zero()) r.c[i] = r.c[i] + coeffs[j] * cols[j].c[i];
	}
	return r;
}

} // namespace barnov
