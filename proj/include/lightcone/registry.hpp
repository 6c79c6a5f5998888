// Name-keyed model registry: "photon", "graviton", "spin:<2s>".
#pragma once

#include "lightcone/graviton.hpp"
#include "lightcone/spin_tower.hpp"

namespace lightcone {

inline PerceptionModel make_model(const std::string& name) {
  if (name == "photon") return build_photon_model();
  if (name == "graviton") return build_graviton_model();
  if (name.rfind("spin:", 0) == 0) {
    const int two_s = std::stoi(name.substr(5));
    return build_spin_model(two_s);
  }
  throw std::invalid_argument("unknown model '" + name +
                              "' (expected photon, graviton, or spin:<2s>)");
}

}  // namespace lightcone
