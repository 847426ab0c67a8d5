// barnov: barcodes, singular value decompositions, filtration spectra and
// bottleneck distances of filtered chain complexes over Novikov fields.
#include "barnov/selftest.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace barnov;

namespace {

// value-group option: trivial[:d] | discrete:g | quad:d:g1,g2,...
// generator grammar: q0 | q1r | q0+q1r | q0-q1r, with r denoting sqrt(d)
QuadReal parse_generator(const std::string& tok, std::int64_t d) {
	auto rpos = tok.find('r');
	if (rpos == std::string::npos) return QuadReal(rat_parse(tok), BigRat(0), d);
	std::string head = tok.substr(0, rpos);
	if (tok.size() != rpos + 1) throw config_error("bad generator token '" + tok + "'");
	std::size_t split = std::string::npos;
	for (std::size_t i = 1; i < head.size(); ++i)
		if (head[i] == '+' || head[i] == '-') split = i;
	BigRat q0(0), q1(1);
	if (split == std::string::npos) {
		if (!head.empty()) q1 = rat_parse(head);
	} else {
		q0 = rat_parse(head.substr(0, split));
		std::string rest = head.substr(split + 1);
		q1 = rest.empty() ? BigRat(1) : rat_parse(rest);
		if (head[split] == '-') q1 = -q1;
	}
	return QuadReal(q0, q1, d);
}

ValueGroup parse_gamma(const std::string& spec) {
	std::vector<std::string> parts;
	std::size_t start = 0;
	while (true) {
		auto pos = spec.find(':', start);
		parts.push_back(spec.substr(start, pos == std::string::npos ? pos : pos - start));
		if (pos == std::string::npos) break;
		start = pos + 1;
	}
	if (parts[0] == "trivial") {
		std::int64_t d = parts.size() > 1 ? std::stoll(parts[1]) : 0;
		return ValueGroup::trivial_group(d);
	}
	if (parts[0] == "discrete") {
		if (parts.size() < 2) throw config_error("discrete group needs a generator, e.g. discrete:1/2");
		return ValueGroup(0, {QuadReal(rat_parse(parts[1]), BigRat(0), 0)});
	}
	if (parts[0] == "quad") {
		if (parts.size() < 3) throw config_error("quad group needs d and generators, e.g. quad:2:1,r");
		std::int64_t d = std::stoll(parts[1]);
		std::vector<QuadReal> gens;
		std::string list = parts[2];
		std::size_t p = 0;
		while (p <= list.size()) {
			auto q = list.find(',', p);
			std::string tok = list.substr(p, q == std::string::npos ? q : q - p);
			if (!tok.empty()) gens.push_back(parse_generator(tok, d));
			if (q == std::string::npos) break;
			p = q + 1;
		}
		return ValueGroup(d, std::move(gens));
	}
	throw config_error("unknown value-group spec '" + spec + "'");
}

void emit(const std::string& text, const std::string& out_path) {
	if (out_path.empty())
		std::cout << text;
	else
		write_file(out_path, text);
}

int fail(const std::string& what) {
	Json diag{{"error", what}};
	std::cerr << diag.dump() << "\n";
	return 1;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact barcodes and non-Archimedean SVDs of filtered chain complexes"};
	app.require_subcommand(1);

	std::string in_path, in_path2, out_path, format = "json";
	std::string field_spec = "Q", gamma_spec = "trivial", metric_spec = "Linf", cap_spec;
	int degree = 0, max_dim = 2;
	std::uint64_t seed = 1;
	bool debug_checks = false, strict = false;

	auto* cmd_barcode = app.add_subcommand("barcode", "verbose and concise barcodes of a complex");
	cmd_barcode->add_option("complex", in_path, "complex JSON file")->required();
	cmd_barcode->add_option("-o,--out", out_path, "output path (default stdout)");
	cmd_barcode->add_option("--format", format, "json, csv, or svg")->capture_default_str();
	cmd_barcode->add_flag("--debug-checks", debug_checks, "re-verify orthogonality of every SVD");
	cmd_barcode->add_flag("--strict", strict, "require strict level decrease of the boundary");

	auto* cmd_svd = app.add_subcommand("svd", "singular value decomposition of one boundary map");
	cmd_svd->add_option("complex", in_path, "complex JSON file")->required();
	cmd_svd->add_option("--degree", degree, "degree k of d_k : C_k -> C_{k-1}")->required();
	cmd_svd->add_option("-o,--out", out_path, "output path (default stdout)");

	auto* cmd_bottleneck = app.add_subcommand("bottleneck", "bottleneck distance between two barcode files");
	cmd_bottleneck->add_option("left", in_path, "first barcode JSON file")->required();
	cmd_bottleneck->add_option("right", in_path2, "second barcode JSON file")->required();
	cmd_bottleneck->add_option("-o,--out", out_path, "output path (default stdout)");

	auto* cmd_spectrum = app.add_subcommand("spectrum", "filtration spectra of a complex");
	cmd_spectrum->add_option("complex", in_path, "complex JSON file")->required();
	cmd_spectrum->add_option("-o,--out", out_path, "output path (default stdout)");

	auto* cmd_rips = app.add_subcommand("rips", "filtered Rips complex from rational points");
	cmd_rips->add_option("points", in_path, "points JSON file (array of rational coordinate arrays)")->required();
	cmd_rips->add_option("-o,--out", out_path, "output path (default stdout)");
	cmd_rips->add_option("--field", field_spec, "Q or Fp:<p>")->capture_default_str();
	cmd_rips->add_option("--gamma", gamma_spec, "value group (must be trivial for Rips)")->capture_default_str();
	cmd_rips->add_option("--metric", metric_spec, "L1, Linf, or EuclidSq")->capture_default_str();
	cmd_rips->add_option("--max-dim", max_dim, "largest simplex dimension (<= 3)")->capture_default_str();
	cmd_rips->add_option("--cap", cap_spec, "drop simplices with diameter above this rational");

	auto* cmd_verify = app.add_subcommand("verify", "seeded self-test battery (acceptance criteria)");
	cmd_verify->add_option("--seed", seed, "random seed")->capture_default_str();

	CLI11_PARSE(app, argc, argv);

	try {
		if (*cmd_barcode) {
			FloerComplex c = load_complex(in_path);
			if (strict) {
				ValidationReport rep = validate(c, true);
				if (!rep.ok()) return fail("strict validation failed:\n" + rep.summary());
			}
			BarcodePair bp = barcodes(c, debug_checks);
			if (format == "json")
				emit(barcode_to_json(c.ctx->group, bp.verbose).dump(2) + "\n", out_path);
			else if (format == "csv")
				emit(barcode_to_csv(bp.verbose), out_path);
			else if (format == "svg")
				emit(barcode_to_svg(bp.verbose), out_path);
			else
				return fail("unknown format '" + format + "'");
		} else if (*cmd_svd) {
			FloerComplex c = load_complex(in_path);
			emit(svd_report_to_json(c, degree).dump(2) + "\n", out_path);
		} else if (*cmd_bottleneck) {
			BarcodeFile left = load_barcode(in_path), right = load_barcode(in_path2);
			if (!(left.group == right.group)) return fail("barcode files use different value groups");
			emit(bottleneck_to_json(left.group, left.concise(), right.concise()).dump(2) + "\n", out_path);
		} else if (*cmd_spectrum) {
			FloerComplex c = load_complex(in_path);
			emit(spectrum_to_json(c).dump(2) + "\n", out_path);
		} else if (*cmd_rips) {
			GroundField f = GroundField::parse(field_spec);
			ValueGroup g = parse_gamma(gamma_spec);
			if (!g.is_trivial()) return fail("Rips complexes require --gamma trivial");
			PointCloud pts = points_from_json(Json::parse(read_file(in_path)));
			std::optional<BigRat> cap;
			if (!cap_spec.empty()) cap = rat_parse(cap_spec);
			FloerComplex c = rips_complex(make_setup(f, g), pts, max_dim, parse_metric(metric_spec), cap);
			emit(complex_to_json(c).dump(2) + "\n", out_path);
		} else if (*cmd_verify) {
			bool ok = selftest::report_acceptance(seed, std::cout);
			return ok ? 0 : 1;
		}
	} catch (const std::exception& e) {
		return fail(e.what());
	}
	return 0;
}
