#pragma once

#include <json.hpp>

#include "typeiv/arrangement.hpp"
#include "typeiv/geomclass.hpp"
#include "typeiv/monodromy.hpp"
#include "typeiv/period.hpp"

// JSON schemas shared by all modules and the CLI.  Rationals travel as
// strings "p/q", matrices as row-major arrays of arrays, float complex
// numbers as [re, im], exact complex numbers as {"re": "p/q", "im": "p/q"}.
// Schema errors name the offending field.

namespace typeiv {

using Json = nlohmann::ordered_json;

// --- rationals and matrices ---
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j, const std::string& path);
Json rat_mat_to_json(const RatMat& m);
RatMat rat_mat_from_json(const Json& j, const std::string& path);
Json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j, const std::string& path);

// --- spaces and subspaces ---
Json space_to_json(const QuadraticSpace& sp);
SpacePtr space_from_json(const Json& j, const std::string& path);
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, const SpacePtr& space, const std::string& path);
Json signature_to_json(const Signature& s);

// --- complex vectors ---
Json cx_to_json(const Cx& z);
Cx cx_from_json(const Json& j, const std::string& path);
Json cx_vec_to_json(const CxVec& v);
CxVec cx_vec_from_json(const Json& j, const std::string& path);
Json gauss_to_json(const GaussQ& z);
GaussQ gauss_from_json(const Json& j, const std::string& path);
Json gauss_vec_to_json(const GaussVec& v);
GaussVec gauss_vec_from_json(const Json& j, const std::string& path);

// --- monodromy ---
MonodromyOperator monodromy_from_json(const Json& j, const std::string& path);
Json nilpotent_to_json(const NilpotentData& nd);
Json weight_filtration_to_json(const WeightFiltration& wf);

// --- period samples ---
PeriodSampleSet samples_from_json(const Json& j, const std::string& path);

// --- arrangement ---
Arrangement arrangement_from_json(const Json& j, const std::string& path);
std::vector<IsotropicDatum> isotropics_from_json(const Json& j, const SpacePtr& space,
                                                 const std::string& path);
Json cells_to_json(const ConeDecomposition& dec);
Json strata_poset_to_json(const StratumPoset& p);
Json ball_poset_to_json(const BallPoset& p);
Json codim2_to_json(const Codim2Report& r);
Json invar_to_json(const InvarReport& r);
ChiSubspaceData chi_subspace_from_json(const Json& j, const std::string& path);
Json chi_subspace_to_json(const ChiSubspaceData& s);

// --- geomclass ---
KulikovFiber kulikov_from_json(const Json& j, const std::string& path);
std::vector<SingularityLabel> singularities_from_json(const Json& j, const std::string& path);
Json gauss_report_to_json(const GaussLatticeReport& r);

// --- eigenspace ---
Json eigenspace_to_json(const EigenspaceData& e);

}  // namespace typeiv
