#pragma once

#include "json.hpp"

#include "vlink/diagram.hpp"
#include "vlink/linking.hpp"
#include "vlink/moves.hpp"
#include "vlink/presentations.hpp"
#include "vlink/surface.hpp"

namespace vlink {

using ordered_json = nlohmann::ordered_json;

ordered_json surface_json(const SurfaceReport& report);
ordered_json matrix_json(const LinkingMatrix& m);
ordered_json homology_json(const HomologyClass& h);
/// Witness components are 1-based in JSON output.
ordered_json certificate_json(const ClassicalityCertificate& cert);
ordered_json presentation_json(const Presentation& p);
ordered_json validation_json(const ValidationReport& report);

/// One witness step as a JSON-lines record:
/// {"kind":..., "site":..., "result":"<canonical gauss code>"}.
ordered_json move_json(const Move& move, const std::string& result_key);

/// The combined report emitted by the CLI: linking matrix, homology
/// class, surface report, certificate and presentations of one diagram.
ordered_json report_json(const LinkDiagram& d);

}  // namespace vlink
