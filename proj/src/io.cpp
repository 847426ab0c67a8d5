#include "barnov/io.hpp"

#include <fstream>
#include <sstream>

namespace barnov {

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw std::runtime_error("cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw std::runtime_error("cannot write " + path);
	out << text;
}

Json quad_to_json(const QuadReal& v) {
	if (v.is_rational()) return rat_to_string(v.q0());
	return Json::array({rat_to_string(v.q0()), rat_to_string(v.q1())});
}

QuadReal quad_from_json(const Json& j, std::int64_t d) {
	if (j.is_string()) return QuadReal::rational(rat_parse(j.get<std::string>()), d);
	if (j.is_number_integer()) return QuadReal::integer(j.get<long>(), d);
	if (j.is_array() && j.size() == 2)
		return QuadReal(rat_parse(j[0].get<std::string>()), rat_parse(j[1].get<std::string>()), d);
	throw config_error("bad QuadReal literal: " + j.dump());
}

namespace {

Json group_to_json(const ValueGroup& g) {
	Json gens = Json::array();
	for (const auto& x : g.generators()) gens.push_back(quad_to_json(x));
	return Json{{"d", g.disc()}, {"generators", gens}};
}

ValueGroup group_from_json(const Json& j) {
	std::int64_t d = j.at("d").get<std::int64_t>();
	std::vector<QuadReal> gens;
	for (const auto& x : j.at("generators")) gens.push_back(quad_from_json(x, d));
	return ValueGroup(d, std::move(gens));
}

Json poly_to_json(const NovikovScalar& s) {
	if (!s.den().is_one()) throw config_error("fractions never appear in files; entry is " + s.to_string());
	Json terms = Json::array();
	for (const auto& t : s.num().terms()) terms.push_back(Json::array({t.coeff.to_string(), quad_to_json(t.exp)}));
	return terms;
}

NovikovScalar poly_from_json(const Json& j, const GroundField& f, const ValueGroup& group) {
	if (!j.is_array()) throw config_error("polynomial entry must be a list of [coefficient, exponent] pairs");
	GroupRingPoly p = GroupRingPoly::zero(f, group.disc());
	for (const auto& term : j) {
		if (!term.is_array() || term.size() != 2) throw config_error("bad term " + term.dump());
		GroundScalar c = GroundScalar::parse(f, term[0].get<std::string>());
		QuadReal e = quad_from_json(term[1], group.disc());
		if (!group.contains(e))
			throw config_error("exponent " + e.to_string() + " of term " + term.dump() +
			                   " lies outside the value group");
		p = p + GroupRingPoly::monomial(c, e);
	}
	return NovikovScalar(std::move(p));
}

} // namespace

Json complex_to_json(const FloerComplex& c) {
	Json degrees = Json::object();
	for (int k = c.k_min; k <= c.k_max(); ++k) {
		Json levels = Json::array();
		for (const auto& t : c.space(k).levels) levels.push_back(quad_to_json(t));
		degrees[std::to_string(k)] = Json{{"levels", levels}};
	}
	Json boundaries = Json::object();
	for (int k = c.k_min + 1; k <= c.k_max(); ++k) {
		LinearMap d = c.boundary(k);
		if (d.domain.dim() == 0 || d.codomain.dim() == 0) continue;
		Json rows = Json::array();
		for (int i = 0; i < d.codomain.dim(); ++i) {
			Json row = Json::array();
			for (int j = 0; j < d.domain.dim(); ++j) row.push_back(poly_to_json(d.cols[j].c[i]));
			rows.push_back(row);
		}
		boundaries[std::to_string(k)] = rows;
	}
	return Json{{"field", c.ctx->field.to_string()},
	            {"value_group", group_to_json(c.ctx->group)},
	            {"degrees", degrees},
	            {"boundaries", boundaries}};
}

FloerComplex complex_from_json(const Json& j) {
	GroundField f = GroundField::parse(j.at("field").get<std::string>());
	ValueGroup group = group_from_json(j.at("value_group"));
	SetupPtr ctx = make_setup(f, group);

	std::map<int, std::vector<QuadReal>> levels;
	for (const auto& [key, val] : j.at("degrees").items()) {
		int k = std::stoi(key);
		std::vector<QuadReal> lv;
		for (const auto& t : val.at("levels")) lv.push_back(quad_from_json(t, group.disc()));
		levels[k] = std::move(lv);
	}
	if (levels.empty()) return make_complex(ctx, 0, {}, {});
	int lo = levels.begin()->first, hi = levels.rbegin()->first;
	std::vector<FilteredSpace> spaces;
	for (int k = lo; k <= hi; ++k)
		spaces.push_back(make_space(ctx, levels.count(k) ? levels[k] : std::vector<QuadReal>{}));

	std::vector<LinearMap> bnds;
	for (int k = lo + 1; k <= hi; ++k) {
		LinearMap d = zero_map(spaces[k - lo], spaces[k - 1 - lo]);
		std::string key = std::to_string(k);
		if (j.at("boundaries").contains(key)) {
			const Json& rows = j.at("boundaries").at(key);
			if (static_cast<int>(rows.size()) != d.codomain.dim())
				throw config_error("boundary " + key + " row count != dim C_" + std::to_string(k - 1));
			for (int i = 0; i < d.codomain.dim(); ++i) {
				if (static_cast<int>(rows[i].size()) != d.domain.dim())
					throw config_error("boundary " + key + " column count != dim C_" + key);
				for (int jj = 0; jj < d.domain.dim(); ++jj) d.cols[jj].c[i] = poly_from_json(rows[i][jj], f, group);
			}
		}
		bnds.push_back(std::move(d));
	}
	FloerComplex c = make_complex(ctx, lo, std::move(spaces), std::move(bnds));
	ValidationReport rep = validate(c);
	if (!rep.ok()) throw config_error("loaded complex fails validation:\n" + rep.summary());
	return c;
}

FloerComplex load_complex(const std::string& path) {
	Json j;
	try {
		j = Json::parse(read_file(path));
	} catch (const nlohmann::json::parse_error& e) {
		throw config_error(path + ": " + e.what());
	}
	return complex_from_json(j);
}

void save_complex(const FloerComplex& c, const std::string& path) {
	write_file(path, complex_to_json(c).dump(2) + "\n");
}

Barcode BarcodeFile::concise() const {
	Barcode out;
	for (const auto& b : verbose.bars)
		if (!(b.length == ExtQuad(QuadReal::integer(0, d)))) out.bars.push_back(b);
	return out;
}

Json barcode_to_json(const ValueGroup& group, const Barcode& verbose) {
	Barcode sorted = verbose;
	sort_bars(sorted);
	Json degrees = Json::array();
	for (int k : sorted.occupied_degrees()) {
		Json bars = Json::array();
		for (const auto& b : sorted.degree_slice(k)) {
			Json e = Json::object();
			e["a"] = quad_to_json(b.a);
			e["L"] = b.infinite() ? Json("inf") : quad_to_json(b.length.value());
			e["verbose_only"] = !b.infinite() && b.length.value().is_zero();
			bars.push_back(e);
		}
		degrees.push_back(Json{{"degree", k}, {"bars", bars}});
	}
	return Json{{"value_group", group_to_json(group)}, {"degrees", degrees}};
}

BarcodeFile barcode_from_json(const Json& j) {
	BarcodeFile f;
	f.group = group_from_json(j.at("value_group"));
	f.d = f.group.disc();
	for (const auto& deg : j.at("degrees")) {
		int k = deg.at("degree").get<int>();
		for (const auto& e : deg.at("bars")) {
			Bar b;
			b.degree = k;
			b.a = quad_from_json(e.at("a"), f.d);
			b.a_canonical = true;
			if (e.at("L").is_string() && e.at("L").get<std::string>() == "inf")
				b.length = ExtQuad::pos_inf();
			else
				b.length = ExtQuad(quad_from_json(e.at("L"), f.d));
			if (b.length < ExtQuad(QuadReal::integer(0, f.d))) throw config_error("negative bar length");
			f.verbose.bars.push_back(b);
		}
	}
	sort_bars(f.verbose);
	return f;
}

BarcodeFile load_barcode(const std::string& path) {
	Json j;
	try {
		j = Json::parse(read_file(path));
	} catch (const nlohmann::json::parse_error& e) {
		throw config_error(path + ": " + e.what());
	}
	return barcode_from_json(j);
}

void save_barcode(const ValueGroup& group, const Barcode& verbose, const std::string& path) {
	write_file(path, barcode_to_json(group, verbose).dump(2) + "\n");
}

std::string barcode_to_csv(const Barcode& verbose) {
	Barcode sorted = verbose;
	sort_bars(sorted);
	std::string out = "degree,a,L,verbose_only\n";
	for (const auto& b : sorted.bars) {
		bool zero = !b.infinite() && b.length.value().is_zero();
		out += std::to_string(b.degree) + "," + b.a.to_string() + "," +
		       (b.infinite() ? "inf" : b.length.value().to_string()) + "," + (zero ? "1" : "0") + "\n";
	}
	return out;
}

std::string barcode_to_svg(const Barcode& verbose, double inf_margin) {
	Barcode sorted = verbose;
	sort_bars(sorted);
	double lo = 0, hi = 1;
	bool first = true;
	for (const auto& b : sorted.bars) {
		double x0 = b.a.approx();
		double x1 = b.infinite() ? x0 : x0 + b.length.value().approx();
		if (first) {
			lo = x0;
			hi = x1;
			first = false;
		}
		lo = std::min(lo, x0);
		hi = std::max(hi, x1);
	}
	if (first) {
		lo = 0;
		hi = 1;
	}
	hi += inf_margin;
	if (hi <= lo) hi = lo + 1;
	const double width = 640, row = 14, pad = 40;
	double height = pad + row * (sorted.bars.size() + 1);
	auto sx = [&](double x) { return pad + (x - lo) / (hi - lo) * (width - 2 * pad); };
	char buf[256];
	std::string svg;
	std::snprintf(buf, sizeof buf,
	              "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\">\n", width, height);
	svg += buf;
	int i = 0;
	for (const auto& b : sorted.bars) {
		double x0 = sx(b.a.approx());
		double x1 = b.infinite() ? sx(hi) : sx(b.a.approx() + b.length.value().approx());
		double y = pad + row * i++;
		const char* color = b.infinite() ? "#b03030" : "#305090";
		std::snprintf(buf, sizeof buf,
		              "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" stroke-width=\"6\">"
		              "<title>degree %d: (%s, %s)</title></line>\n",
		              x0, y, std::max(x1, x0 + 1.0), y, color, b.degree, b.a.to_string().c_str(),
		              b.infinite() ? "inf" : b.length.value().to_string().c_str());
		svg += buf;
	}
	svg += "</svg>\n";
	return svg;
}

RipsMetric parse_metric(const std::string& s) {
	if (s == "L1") return RipsMetric::L1;
	if (s == "Linf") return RipsMetric::Linf;
	if (s == "EuclidSq") return RipsMetric::EuclidSq;
	throw config_error("unknown metric '" + s + "' (expected L1, Linf, or EuclidSq)");
}

PointCloud points_from_json(const Json& j) {
	PointCloud pts;
	for (const auto& row : j) {
		std::vector<BigRat> p;
		for (const auto& x : row) p.push_back(rat_parse(x.is_string() ? x.get<std::string>() : x.dump()));
		pts.push_back(std::move(p));
	}
	return pts;
}

Json points_to_json(const PointCloud& pts) {
	Json j = Json::array();
	for (const auto& p : pts) {
		Json row = Json::array();
		for (const auto& x : p) row.push_back(rat_to_string(x));
		j.push_back(row);
	}
	return j;
}

namespace {

BigRat point_distance(const std::vector<BigRat>& p, const std::vector<BigRat>& q, RipsMetric metric) {
	BigRat acc = 0;
	for (std::size_t i = 0; i < p.size(); ++i) {
		BigRat diff = p[i] - q[i];
		if (diff < 0) diff = -diff;
		switch (metric) {
		case RipsMetric::L1: acc += diff; break;
		case RipsMetric::Linf: acc = std::max(acc, diff); break;
		case RipsMetric::EuclidSq: acc += diff * diff; break;
		}
	}
	return acc;
}

} // namespace

FloerComplex rips_complex(const SetupPtr& ctx, const PointCloud& points, int max_dim, RipsMetric metric,
                          const std::optional<BigRat>& cap) {
	if (!ctx->group.is_trivial()) throw config_error("Rips complexes use the trivial value group");
	if (max_dim < 0 || max_dim > 3) throw config_error("Rips max_dim limited to 3");
	const int n = static_cast<int>(points.size());
	if (n > 16) throw config_error("Rips point cloud limited to 16 points");
	for (const auto& p : points)
		if (p.size() != points[0].size()) throw config_error("inconsistent point dimensions");

	std::vector<std::vector<BigRat>> dist(n, std::vector<BigRat>(n, BigRat(0)));
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) dist[i][j] = dist[j][i] = point_distance(points[i], points[j], metric);

	// simplices per dimension in lexicographic vertex order
	std::vector<std::vector<std::vector<int>>> simplices(max_dim + 1);
	std::vector<std::vector<BigRat>> diameters(max_dim + 1);
	std::vector<int> verts;
	std::function<void(int, int)> enumerate = [&](int from, int want) {
		if (static_cast<int>(verts.size()) == want) {
			BigRat diam = 0;
			for (std::size_t a = 0; a < verts.size(); ++a)
				for (std::size_t b = a + 1; b < verts.size(); ++b) diam = std::max(diam, dist[verts[a]][verts[b]]);
			if (cap && diam > *cap) return;
			simplices[want - 1].push_back(verts);
			diameters[want - 1].push_back(diam);
			return;
		}
		for (int v = from; v < n; ++v) {
			verts.push_back(v);
			enumerate(v + 1, want);
			verts.pop_back();
		}
	};
	for (int dim = 0; dim <= max_dim; ++dim) enumerate(0, dim + 1);

	int top = max_dim;
	while (top > 0 && simplices[top].empty()) --top;
	std::vector<FilteredSpace> spaces;
	for (int dim = 0; dim <= top; ++dim) {
		std::vector<QuadReal> levels;
		for (const auto& diam : diameters[dim]) levels.push_back(QuadReal::rational(diam, ctx->disc()));
		spaces.push_back(make_space(ctx, std::move(levels)));
	}

	std::vector<LinearMap> bnds;
	for (int dim = 1; dim <= top; ++dim) {
		LinearMap d = zero_map(spaces[dim], spaces[dim - 1]);
		for (std::size_t j = 0; j < simplices[dim].size(); ++j) {
			const auto& s = simplices[dim][j];
			for (std::size_t drop = 0; drop < s.size(); ++drop) {
				std::vector<int> face;
				for (std::size_t i = 0; i < s.size(); ++i)
					if (i != drop) face.push_back(s[i]);
				auto it = std::lower_bound(simplices[dim - 1].begin(), simplices[dim - 1].end(), face);
				int row = static_cast<int>(it - simplices[dim - 1].begin());
				GroundScalar sign = GroundScalar::from_int(ctx->field, drop % 2 == 0 ? 1 : -1);
				d.cols[j].c[row] = NovikovScalar::constant(sign, ctx->disc());
			}
		}
		bnds.push_back(std::move(d));
	}
	return make_complex(ctx, 0, std::move(spaces), std::move(bnds));
}

Json svd_report_to_json(const FloerComplex& c, int degree) {
	LinearMap d = c.boundary(degree);
	SvdResult r = svd(d);
	Json ylev = Json::array(), xlev = Json::array(), diffs = Json::array(), beta = Json::array();
	for (const auto& v : r.y_levels) ylev.push_back(quad_to_json(v));
	for (const auto& v : r.x_levels) xlev.push_back(quad_to_json(v));
	for (const auto& v : r.diffs) {
		diffs.push_back(quad_to_json(v));
		beta.push_back(quad_to_json(v));
	}
	return Json{{"degree", degree},
	            {"domain_dim", d.domain.dim()},
	            {"codomain_dim", d.codomain.dim()},
	            {"rank", r.rank},
	            {"y_levels", ylev},
	            {"x_levels", xlev},
	            {"diffs", diffs},
	            {"boundary_depths", beta},
	            {"torsion_exponents", beta}};
}

Json spectrum_to_json(const FloerComplex& c) {
	Json degrees = Json::object();
	for (int k = c.k_min; k <= c.k_max(); ++k) {
		Json reps = Json::array();
		for (const auto& r : filtration_spectrum(c.space(k)))
			reps.push_back(Json{{"rep", quad_to_json(r.rep)}, {"canonical", r.canonical}});
		degrees[std::to_string(k)] = reps;
	}
	return Json{{"value_group", group_to_json(c.ctx->group)}, {"spectrum", degrees}};
}

Json bottleneck_to_json(const ValueGroup& group, const Barcode& conciseS, const Barcode& conciseT) {
	std::vector<int> degrees = conciseS.occupied_degrees();
	for (int k : conciseT.occupied_degrees()) degrees.push_back(k);
	std::sort(degrees.begin(), degrees.end());
	degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
	Json per = Json::array();
	ExtQuad sup(QuadReal::integer(0, group.disc()));
	for (int k : degrees) {
		std::vector<Bar> S = conciseS.degree_slice(k), T = conciseT.degree_slice(k);
		MatchingResult m = bottleneck_degree(group, S, T);
		sup = max(sup, m.delta);
		Json pairs = Json::array();
		for (auto& [i, j] : m.pairs) pairs.push_back(Json::array({i, j}));
		per.push_back(Json{{"degree", k},
		                   {"delta", m.delta.is_pos_inf() ? Json("inf") : quad_to_json(m.delta.value())},
		                   {"matching", Json{{"pairs", pairs},
		                                     {"unmatched_left", m.unmatched_S},
		                                     {"unmatched_right", m.unmatched_T}}}});
	}
	return Json{{"delta", sup.is_pos_inf() ? Json("inf") : quad_to_json(sup.value())}, {"per_degree", per}};
}

} // namespace barnov
