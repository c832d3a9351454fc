#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ertbp/bifurcation.hpp"
#include "ertbp/lp_engine.hpp"
#include "ertbp/orbit.hpp"

namespace ertbp {

using Json = nlohmann::ordered_json;

Json context_json(const LibrationContext& ctx);

/// Header plus one coefficient record per (term, eta-degree):
/// {coord, i, j, k, m, s, t, u, r, parity, eta_deg, re, im}.
Json solution_json(const SolutionSet& sol);

SolutionSet solution_from_json(const Json& j);

Json bifurcation_form_json(const BifurcationForm& form);

/// CSV with header f,x,y,z,xp,yp,zp; 10 significant digits.
std::string trajectory_csv(const std::vector<StateVector>& traj);

/// CSV with header alpha1,alpha2,alpha3,surface_id,branch.
std::string mesh_csv(const SurfaceMesh& mesh);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace ertbp
