#include "barnov/distance.hpp"

#include <algorithm>

namespace barnov {

namespace {

// distance in R/Gamma between representatives: inf over g of |a - b + g|
ExtQuad coset_distance(const ValueGroup& group, const QuadReal& a, const QuadReal& b) {
	QuadReal x = a - b;
	switch (group.classification()) {
	case ValueGroup::Classification::trivial: return ExtQuad(x.abs());
	case ValueGroup::Classification::dense: return ExtQuad(QuadReal::integer(0, x.disc()));
	case ValueGroup::Classification::discrete: {
		const QuadReal& g = group.discrete_generator();
		QuadReal q = x / g;
		BigInt f = q.floor();
		QuadReal r = x - g * QuadReal(BigRat(f), BigRat(0), x.disc());  // in [0, g)
		return ExtQuad(min(ExtQuad(r), ExtQuad(g - r)).value());
	}
	}
	return ExtQuad(x.abs());
}

QuadReal endpoint_gap(const QuadReal& a, const QuadReal& La, const QuadReal& b, const QuadReal& Lb,
                      const QuadReal& g) {
	QuadReal left = (a + g - b).abs();
	QuadReal right = (a + g + La - b - Lb).abs();
	return left < right ? right : left;
}

} // namespace

ExtQuad bar_distance(const ValueGroup& group, const Bar& x, const Bar& y) {
	const std::int64_t d = x.a.disc();
	if (x.infinite() && y.infinite()) return coset_distance(group, x.a, y.a);
	if (x.infinite() || y.infinite()) return ExtQuad::pos_inf();
	const QuadReal &La = x.length.value(), &Lb = y.length.value();
	switch (group.classification()) {
	case ValueGroup::Classification::trivial:
		return ExtQuad(endpoint_gap(x.a, La, y.a, Lb, QuadReal::integer(0, d)));
	case ValueGroup::Classification::dense: {
		QuadReal half(BigRat(1, 2), BigRat(0), d);
		return ExtQuad((La - Lb).abs() * half);
	}
	case ValueGroup::Classification::discrete: {
		const QuadReal& g = group.discrete_generator();
		QuadReal half(BigRat(1, 2), BigRat(0), d);
		QuadReal target = -(x.a - y.a + (La - Lb) * half);  // real minimizer
		BigInt f = (target / g).floor();
		QuadReal g0 = g * QuadReal(BigRat(f), BigRat(0), d);
		QuadReal g1 = g0 + g;
		QuadReal v0 = endpoint_gap(x.a, La, y.a, Lb, g0);
		QuadReal v1 = endpoint_gap(x.a, La, y.a, Lb, g1);
		return ExtQuad(v0 < v1 ? v0 : v1);
	}
	}
	return ExtQuad::pos_inf();
}

namespace {

// Perfect matching on the doubled graph decides feasibility of delta.
// Left vertices: S bars then T-diagonal copies; right: T bars then
// S-diagonal copies.
struct DoubledGraph {
	int ns, nt;
	std::vector<std::vector<char>> adj;  // (ns+nt) x (nt+ns)

	bool augment(int u, std::vector<int>& match_right, std::vector<char>& seen) const {
		for (int v = 0; v < static_cast<int>(adj[u].size()); ++v) {
			if (!adj[u][v] || seen[v]) continue;
			seen[v] = 1;
			if (match_right[v] < 0 || augment(match_right[v], match_right, seen)) {
				match_right[v] = u;
				return true;
			}
		}
		return false;
	}

	// returns right-side matches (index -> left vertex) when perfect
	std::optional<std::vector<int>> perfect_matching() const {
		int total = ns + nt;
		std::vector<int> match_right(total, -1);
		int matched = 0;
		for (int u = 0; u < total; ++u) {
			std::vector<char> seen(total, 0);
			if (augment(u, match_right, seen)) ++matched;
		}
		if (matched != total) return std::nullopt;
		return match_right;
	}
};

} // namespace

MatchingResult bottleneck_degree(const ValueGroup& group, const std::vector<Bar>& S, const std::vector<Bar>& T) {
	const int ns = static_cast<int>(S.size());
	const int nt = static_cast<int>(T.size());
	MatchingResult best;
	if (ns == 0 && nt == 0) {
		best.delta = ExtQuad(QuadReal::integer(0, group.disc()));
		return best;
	}

	std::vector<std::vector<ExtQuad>> dist(ns, std::vector<ExtQuad>(nt, ExtQuad::pos_inf()));
	std::vector<ExtQuad> candidates;
	for (int i = 0; i < ns; ++i)
		for (int j = 0; j < nt; ++j) {
			dist[i][j] = bar_distance(group, S[i], T[j]);
			if (!dist[i][j].is_pos_inf()) candidates.push_back(dist[i][j]);
		}
	QuadReal half(BigRat(1, 2), BigRat(0), group.disc());
	std::vector<ExtQuad> shalf(ns), thalf(nt);
	for (int i = 0; i < ns; ++i) {
		shalf[i] = S[i].infinite() ? ExtQuad::pos_inf() : ExtQuad(S[i].length.value() * half);
		if (!shalf[i].is_pos_inf()) candidates.push_back(shalf[i]);
	}
	for (int j = 0; j < nt; ++j) {
		thalf[j] = T[j].infinite() ? ExtQuad::pos_inf() : ExtQuad(T[j].length.value() * half);
		if (!thalf[j].is_pos_inf()) candidates.push_back(thalf[j]);
	}
	std::sort(candidates.begin(), candidates.end());
	candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

	auto build = [&](const ExtQuad& delta) {
		DoubledGraph g;
		g.ns = ns;
		g.nt = nt;
		g.adj.assign(ns + nt, std::vector<char>(nt + ns, 0));
		for (int i = 0; i < ns; ++i) {
			for (int j = 0; j < nt; ++j)
				if (dist[i][j] <= delta) g.adj[i][j] = 1;
			if (shalf[i] <= delta) g.adj[i][nt + i] = 1;  // discard s_i
		}
		for (int j = 0; j < nt; ++j) {
			if (thalf[j] <= delta) g.adj[ns + j][j] = 1;  // discard t_j
			for (int i = 0; i < ns; ++i) g.adj[ns + j][nt + i] = 1;
		}
		return g;
	};

	// smallest feasible candidate by binary search (feasibility is monotone)
	int lo = 0, hi = static_cast<int>(candidates.size()) - 1, found = -1;
	std::vector<int> witness;
	while (lo <= hi) {
		int mid = (lo + hi) / 2;
		auto pm = build(candidates[mid]).perfect_matching();
		if (pm) {
			found = mid;
			witness = *pm;
			hi = mid - 1;
		} else {
			lo = mid + 1;
		}
	}
	if (found < 0) return best;  // +inf, e.g. unmatched infinite bars

	best.delta = candidates[found];
	for (int j = 0; j < nt; ++j) {
		int u = witness[j];
		if (u < ns)
			best.pairs.emplace_back(u, j);
		else
			best.unmatched_T.push_back(j);
	}
	for (int i = 0; i < ns; ++i)
		if (witness[nt + i] == i) best.unmatched_S.push_back(i);
	return best;
}

ExtQuad bottleneck_all(const ValueGroup& group, const Barcode& S, const Barcode& T) {
	std::vector<int> degrees = S.occupied_degrees();
	for (int k : T.occupied_degrees()) degrees.push_back(k);
	std::sort(degrees.begin(), degrees.end());
	degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
	ExtQuad sup(QuadReal::integer(0, group.disc()));
	for (int k : degrees) {
		MatchingResult m = bottleneck_degree(group, S.degree_slice(k), T.degree_slice(k));
		sup = max(sup, m.delta);
	}
	return sup;
}

namespace {

void oracle_rec(const ValueGroup& group, const std::vector<Bar>& S, const std::vector<Bar>& T, std::size_t i,
                std::vector<int>& assign, std::vector<char>& tused, ExtQuad& best) {
	if (i == S.size()) {
		ExtQuad defect(QuadReal::integer(0, group.disc()));
		QuadReal half(BigRat(1, 2), BigRat(0), group.disc());
		for (std::size_t s = 0; s < S.size(); ++s) {
			if (assign[s] >= 0)
				defect = max(defect, bar_distance(group, S[s], T[assign[s]]));
			else
				defect = max(defect, S[s].infinite() ? ExtQuad::pos_inf() : ExtQuad(S[s].length.value() * half));
		}
		for (std::size_t t = 0; t < T.size(); ++t)
			if (!tused[t])
				defect = max(defect, T[t].infinite() ? ExtQuad::pos_inf() : ExtQuad(T[t].length.value() * half));
		if (defect < best) best = defect;
		return;
	}
	assign[i] = -1;
	oracle_rec(group, S, T, i + 1, assign, tused, best);
	for (std::size_t t = 0; t < T.size(); ++t) {
		if (tused[t]) continue;
		tused[t] = 1;
		assign[i] = static_cast<int>(t);
		oracle_rec(group, S, T, i + 1, assign, tused, best);
		assign[i] = -1;
		tused[t] = 0;
	}
}

} // namespace

ExtQuad matching_oracle(const ValueGroup& group, const std::vector<Bar>& S, const std::vector<Bar>& T) {
	if (S.size() + T.size() > 10) throw std::domain_error("matching oracle size guard exceeded");
	ExtQuad best = ExtQuad::pos_inf();
	std::vector<int> assign(S.size(), -1);
	std::vector<char> tused(T.size(), 0);
	oracle_rec(group, S, T, 0, assign, tused, best);
	return best;
}

bool validate_matching(const ValueGroup& group, const std::vector<Bar>& S, const std::vector<Bar>& T,
                       const MatchingResult& m) {
	if (m.delta.is_pos_inf()) return true;
	std::vector<char> sused(S.size(), 0), tused(T.size(), 0);
	QuadReal half(BigRat(1, 2), BigRat(0), group.disc());
	ExtQuad two_delta = m.delta + m.delta;
	for (const auto& [i, j] : m.pairs) {
		if (sused[i] || tused[j]) return false;
		sused[i] = tused[j] = 1;
		if (m.delta < bar_distance(group, S[i], T[j])) return false;
	}
	for (int i : m.unmatched_S) {
		if (sused[i]) return false;
		sused[i] = 1;
		if (S[i].infinite() || two_delta < S[i].length) return false;
	}
	for (int j : m.unmatched_T) {
		if (tused[j]) return false;
		tused[j] = 1;
		if (T[j].infinite() || two_delta < T[j].length) return false;
	}
	for (char u : sused)
		if (!u) return false;
	for (char u : tused)
		if (!u) return false;
	return true;
}

} // namespace barnov
