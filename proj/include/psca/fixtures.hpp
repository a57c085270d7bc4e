#pragma once
// Golden data bundled with the repository.

#include <string>

#include "json.hpp"
#include "psca/automaton.hpp"
#include "psca/rigged.hpp"

namespace psca {

// Absolute path of a file in the fixtures directory.
std::string fixture_path(const std::string& name);
nlohmann::json load_fixture(const std::string& name);

SolitonContent content_from_json(const nlohmann::json& diagrams, int n,
                                 long L);

}  // namespace psca
