#pragma once

// JSON forms of the library's inputs and results.
//
//   matrix         {"order": n, "rows": [[...], ...]}
//   configuration  {"sigma": s, "range": r, "agents": [{"id": "a1", "x": .., "y": ..}, ...]}
//   path           {"mobile": "a4", "waypoints": [[x, y], ...], "steps": k}
//
// Parsers throw Error(ParseError) on malformed text or schema violations;
// semantic problems (coincident agents, sigma <= 0, ...) keep their own codes.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "isoconn/iso_connectivity.hpp"
#include "isoconn/isospectral.hpp"
#include "isoconn/matrix.hpp"
#include "isoconn/mobility.hpp"
#include "isoconn/spectral.hpp"
#include "isoconn/topology.hpp"

namespace isoconn::json_io {

using Json = nlohmann::json;

/// Digits kept in emitted numbers: 4 decimals, or every digit needed to
/// round-trip the double.
enum class Precision { Display, Full };

struct PathSpec {
  std::string mobile;
  std::vector<Position> waypoints;
  std::size_t steps = 1;
};

Json parse_text(std::string_view text);

Matrix parse_matrix(const Json& j);
AgentConfiguration parse_configuration(const Json& j);
PathSpec parse_path(const Json& j);

double round_for(double v, Precision p) noexcept;

Json to_json(const Matrix& m, Precision p = Precision::Full);
Json to_json(const AgentConfiguration& c, Precision p = Precision::Full);
Json to_json(const SpectralDecomposition& d, Precision p);
Json to_json(const ConnectivityReport& r, Precision p);
Json to_json(const IsoTransformVerdict& v);
Json to_json(const LaplacianValidation& v, Precision p);
Json to_json(const IsoFamilyEntry& e, Precision p);
Json family_to_json(const std::vector<IsoFamilyEntry>& family, Precision p);
Json to_json(const NullSpaceCheck& c, Precision p);
Json to_json(const MoveSolution& s, const AgentConfiguration& c, Precision p);
Json to_json(const PathIntegral& r, Precision p);
Json to_json(const ZoneSample& z, Precision p);
Json to_json(const L4Validity& v, Precision p);

}  // namespace isoconn::json_io
