#pragma once

#include <string>

#include "json.hpp"
#include "unicover/group.hpp"

namespace unicov {

// file format: {"name": str, "order": n, "table": [[row 0], [row 1], ...]}
// with 0-based indices and identity 0
FiniteGroup group_from_json(const nlohmann::json& j);
FiniteGroup load_group_file(const std::string& path);
nlohmann::json group_to_json(const FiniteGroup& g);

// Accepts either a path to a group file or a constructor expression:
//   C12, C2xC4x C8, D6, Q8, G(3), Gamma1(2), Gamma2(3), B(2,3),
//   E(27,expP), E(27,expP2), Cov(2,4)
FiniteGroup parse_group_spec(const std::string& spec);

}  // namespace unicov
