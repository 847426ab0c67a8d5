// File formats and generators: complexes and barcodes as JSON, CSV/SVG
// barcode emitters, and filtered Rips complexes from rational point data.
#ifndef BARNOV_IO_HPP
#define BARNOV_IO_HPP

#include "barnov/distance.hpp"

#include <json.hpp>

namespace barnov {

using Json = nlohmann::ordered_json;

// QuadReals serialize as "p/q" when rational, else ["p/q", "r/s"]; the
// session discriminant d travels at top level of each document.
Json quad_to_json(const QuadReal& v);
QuadReal quad_from_json(const Json& j, std::int64_t d);

Json complex_to_json(const FloerComplex& c);
FloerComplex complex_from_json(const Json& j);
FloerComplex load_complex(const std::string& path);
void save_complex(const FloerComplex& c, const std::string& path);

struct BarcodeFile {
	std::int64_t d = 0;
	ValueGroup group;
	Barcode verbose;  // zero-length bars flagged verbose_only

	Barcode concise() const;
};

Json barcode_to_json(const ValueGroup& group, const Barcode& verbose);
BarcodeFile barcode_from_json(const Json& j);
BarcodeFile load_barcode(const std::string& path);
void save_barcode(const ValueGroup& group, const Barcode& verbose, const std::string& path);

std::string barcode_to_csv(const Barcode& verbose);
// One horizontal bar per (a, L); infinite bars run to the right margin.
std::string barcode_to_svg(const Barcode& verbose, double inf_margin = 1.0);

enum class RipsMetric { L1, Linf, EuclidSq };
RipsMetric parse_metric(const std::string& s);

using PointCloud = std::vector<std::vector<BigRat>>;
PointCloud points_from_json(const Json& j);
Json points_to_json(const PointCloud& pts);

// Simplices up to max_dim at their exact diameter under the chosen metric;
// boundary signs (-1)^i in sorted vertex order; cap drops simplices whose
// diameter exceeds it.  Requires a trivial value group.
FloerComplex rips_complex(const SetupPtr& ctx, const PointCloud& points, int max_dim, RipsMetric metric,
                          const std::optional<BigRat>& cap = std::nullopt);

Json svd_report_to_json(const FloerComplex& c, int degree);
Json spectrum_to_json(const FloerComplex& c);
Json bottleneck_to_json(const ValueGroup& group, const Barcode& conciseS, const Barcode& conciseT);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace barnov

#endif
