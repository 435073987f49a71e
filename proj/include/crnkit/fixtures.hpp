#pragma once

// The bundled Wnt signaling networks, addressable by name.

#include "crnkit/network.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace crnkit {

std::vector<std::string> fixture_names();
std::string_view fixture_text(std::string_view name);
Network fixture(std::string_view name);

}  // namespace crnkit
