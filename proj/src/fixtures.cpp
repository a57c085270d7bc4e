#include "psca/fixtures.hpp"

#include <fstream>
#include <stdexcept>

#ifndef PSCA_FIXTURES_DIR
#define PSCA_FIXTURES_DIR "fixtures"
#endif

namespace psca {

std::string fixture_path(const std::string& name) {
  return std::string(PSCA_FIXTURES_DIR) + "/" + name;
}

nlohmann::json load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("cannot open fixture " + name);
  nlohmann::json j;
  in >> j;
  return j;
}

SolitonContent content_from_json(const nlohmann::json& diagrams, int n,
                                 long L) {
  SolitonContent mu;
  mu.n = n;
  mu.L = L;
  mu.diagrams.resize(n);
  for (int a = 1; a <= n && a <= (int)diagrams.size(); ++a)
    for (const auto& blk : diagrams[a - 1])
      mu.diagrams[a - 1].push_back({blk[0].get<int>(), blk[1].get<int>()});
  return mu;
}

}  // namespace psca
