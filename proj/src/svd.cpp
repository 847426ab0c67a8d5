#include "barnov/svd.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace barnov {

bool LinearMap::is_zero() const {
	for (const auto& c : cols)
		if (!c.is_zero()) return false;
	return true;
}

LinearMap zero_map(FilteredSpace domain, FilteredSpace codomain) {
	LinearMap A{std::move(domain), std::move(codomain), {}};
	A.cols.assign(A.domain.dim(), zero_vector(A.codomain));
	return A;
}

LinearMap identity_map(const FilteredSpace& s) {
	LinearMap A{s, s, {}};
	for (int i = 0; i < s.dim(); ++i) A.cols.push_back(basis_vector(s, i));
	return A;
}

LinearMap adjoint_map(const LinearMap& A) {
	LinearMap T{dual_space(A.codomain), dual_space(A.domain), {}};
	T.cols.assign(T.domain.dim(), zero_vector(T.codomain));
	for (int j = 0; j < A.domain.dim(); ++j)
		for (int i = 0; i < A.codomain.dim(); ++i) T.cols[i].c[j] = A.cols[j].c[i];
	return T;
}

LinearMap compose(const LinearMap& A, const LinearMap& B) {
	if (A.domain.dim() != B.codomain.dim()) throw config_error("composition dimension mismatch");
	LinearMap C{B.domain, A.codomain, {}};
	C.cols.reserve(B.cols.size());
	for (const auto& col : B.cols) C.cols.push_back(A.apply(col));
	return C;
}

SvdResult svd(const LinearMap& A, bool debug_checks) {
	const int n = A.domain.dim();
	const int m = A.codomain.dim();
	TriangularizeResult tri = triangularize(A.codomain, A.cols, 0, &A.domain.levels, /*track_domain=*/true);

	const int r = tri.rank();
	std::vector<int> order(r);
	std::iota(order.begin(), order.end(), 0);
	std::vector<QuadReal> ylev(r), xlev(r);
	for (int l = 0; l < r; ++l) {
		int j = tri.pivots[l].second;
		ylev[l] = level(A.domain, tri.domain_vectors[j]).value();
		xlev[l] = level(A.codomain, tri.cols[j]).value();
	}
	std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
		return xlev[b] - ylev[b] < xlev[a] - ylev[a];  // diff descending
	});

	SvdResult res;
	res.rank = r;
	for (int l : order) {
		int j = tri.pivots[l].second;
		res.y.push_back(tri.domain_vectors[j]);
		res.x.push_back(tri.cols[j]);
		res.y_levels.push_back(ylev[l]);
		res.x_levels.push_back(xlev[l]);
		res.diffs.push_back(ylev[l] - xlev[l]);
	}
	std::vector<char> pivoted(n, 0);
	for (const auto& [row, col] : tri.pivots) pivoted[col] = 1;
	for (int j = 0; j < n; ++j) {
		if (pivoted[j]) continue;
		res.y.push_back(tri.domain_vectors[j]);
		res.y_levels.push_back(level(A.domain, tri.domain_vectors[j]).value());
	}
	std::vector<FilteredVector> image(res.x.begin(), res.x.begin() + r);
	for (auto& w : orthogonal_complement(A.codomain, image)) {
		res.x_levels.push_back(level(A.codomain, w).value());
		res.x.push_back(std::move(w));
	}
	(void)m;

	if (debug_checks) check_svd(A, res);
	return res;
}

void check_svd(const LinearMap& A, const SvdResult& r) {
	const int n = A.domain.dim();
	const int m = A.codomain.dim();
	if (static_cast<int>(r.y.size()) != n || static_cast<int>(r.x.size()) != m)
		throw std::logic_error("svd: basis sizes do not match the spaces");
	if (n > 0 && !is_orthogonal(A.domain, r.y)) throw std::logic_error("svd: domain basis not orthogonal");
	if (m > 0 && !is_orthogonal(A.codomain, r.x)) throw std::logic_error("svd: codomain basis not orthogonal");
	for (int i = 0; i < r.rank; ++i)
		if (A.apply(r.y[i]) != r.x[i]) throw std::logic_error("svd: A y_i != x_i");
	for (int i = r.rank; i < n; ++i)
		if (!A.apply(r.y[i]).is_zero()) throw std::logic_error("svd: kernel vector not in kernel");
	if (rank_of(A.cols, A.codomain) != r.rank) throw std::logic_error("svd: rank mismatch");
	for (int i = 0; i + 1 < r.rank; ++i)
		if (r.diffs[i] < r.diffs[i + 1]) throw std::logic_error("svd: diffs not sorted");
}

std::vector<QuadReal> boundary_depths(const LinearMap& A, int min_count) {
	SvdResult r = svd(A);
	std::vector<QuadReal> beta = r.diffs;
	while (static_cast<int>(beta.size()) < min_count) beta.push_back(QuadReal::integer(0, A.domain.disc()));
	return beta;
}

std::vector<QuadReal> torsion_exponents(const LinearMap& A, int min_count) { return boundary_depths(A, min_count); }

namespace {

int mask_of(const FilteredVector& v) {
	int m = 0;
	for (int i = 0; i < v.dim(); ++i)
		if (!v.c[i].is_zero()) m |= 1 << i;
	return m;
}

ExtQuad mask_level(int mask, const std::vector<QuadReal>& levels) {
	ExtQuad best = ExtQuad::neg_inf();
	for (std::size_t i = 0; i < levels.size(); ++i)
		if (mask & (1 << i)) best = max(best, ExtQuad(levels[i]));
	return best;
}

} // namespace

QuadReal robustness_oracle(const LinearMap& A, int k) {
	const int n = A.domain.dim();
	const int m = A.codomain.dim();
	if (A.domain.field() != GroundField::Fp(2)) throw std::domain_error("robustness oracle requires F_2 coefficients");
	if (!A.domain.group().is_trivial()) throw std::domain_error("robustness oracle requires trivial value group");
	if (n > 12 || m > 12) throw std::domain_error("robustness oracle size guard exceeded");
	if (k < 1) throw std::domain_error("robustness oracle needs k >= 1");
	const QuadReal zero = QuadReal::integer(0, A.domain.disc());

	std::vector<int> colmask(n);
	for (int j = 0; j < n; ++j) colmask[j] = mask_of(A.cols[j]);

	// minimal preimage level for every element of Im A
	std::vector<ExtQuad> min_pre(std::size_t(1) << m, ExtQuad::pos_inf());
	std::vector<char> in_image(std::size_t(1) << m, 0);
	for (int ymask = 0; ymask < (1 << n); ++ymask) {
		int im = 0;
		for (int j = 0; j < n; ++j)
			if (ymask & (1 << j)) im ^= colmask[j];
		ExtQuad lvl = mask_level(ymask, A.domain.levels);
		if (!in_image[im] || lvl < min_pre[im]) min_pre[im] = lvl;
		in_image[im] = 1;
	}

	std::vector<int> image_elts;
	for (int w = 1; w < (1 << m); ++w)
		if (in_image[w]) image_elts.push_back(w);
	int dim_im = 0;
	while ((1 << dim_im) - 1 < static_cast<int>(image_elts.size())) ++dim_im;
	if (dim_im > 4) throw std::domain_error("robustness oracle: dim Im A exceeds guard");
	if (k > dim_im) return zero;

	// all k-element independent subsets, deduplicated by their span
	std::set<std::vector<int>> seen;
	ExtQuad best = ExtQuad::neg_inf();
	std::vector<int> pick;
	auto span_of = [](const std::vector<int>& basis) {
		std::vector<int> sp;
		for (int s = 0; s < (1 << basis.size()); ++s) {
			int v = 0;
			for (std::size_t i = 0; i < basis.size(); ++i)
				if (s & (1 << i)) v ^= basis[i];
			sp.push_back(v);
		}
		std::sort(sp.begin(), sp.end());
		return sp;
	};
	auto consider = [&](const std::vector<int>& basis) {
		std::vector<int> sp = span_of(basis);
		if (static_cast<int>(sp.size()) != (1 << k)) return;           // dependent (0 repeats)
		if (std::adjacent_find(sp.begin(), sp.end()) != sp.end()) return;
		if (!seen.insert(sp).second) return;
		ExtQuad worst = ExtQuad::pos_inf();
		for (int v : sp) {
			if (v == 0) continue;
			ExtQuad gap = min_pre[v] - mask_level(v, A.codomain.levels);
			if (gap < worst) worst = gap;
		}
		if (best < worst) best = worst;
	};
	std::function<void(std::size_t)> rec = [&](std::size_t from) {
		if (static_cast<int>(pick.size()) == k) {
			consider(pick);
			return;
		}
		for (std::size_t i = from; i < image_elts.size(); ++i) {
			pick.push_back(image_elts[i]);
			rec(i + 1);
			pick.pop_back();
		}
	};
	rec(0);

	if (!best.finite() || best.value() < zero) return zero;
	return best.value();
}

} // namespace barnov
