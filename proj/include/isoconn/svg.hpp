#pragma once

#include <string>
#include <vector>

#include "isoconn/topology.hpp"

namespace isoconn {

struct SvgOptions {
  double width = 600.0;
  double height = 600.0;
  double margin = 40.0;
  /// Extra candidate positions (e.g. mirror moves), drawn as hollow markers.
  std::vector<Position> ghosts;
};

/// Agents as labelled dots, links as lines whose stroke opacity is the link
/// weight. Output depends only on the inputs.
std::string render_svg(const AgentConfiguration& config, const SvgOptions& options = {});

}  // namespace isoconn
