#include "commands.hpp"

#include <fstream>
#include <sstream>

namespace typeiv::cli {

namespace {

double tol_or(const Options& o, double dflt) { return o.tol >= 0 ? o.tol : dflt; }

NilpotentData nilpotent_from_input(const Json& in) {
  SpacePtr space = space_from_json(in.contains("space") ? in["space"] : Json(),
                                   "input.space");
  if (in.contains("N"))
    return classify_nilpotent(space, rat_mat_from_json(in["N"], "input.N"));
  if (in.contains("T")) {
    MonodromyOperator m(space, rat_mat_from_json(in["T"], "input.T"));
    return classify_monodromy(m);
  }
  fail(ErrorKind::Schema, "input: expected a field \"N\" or \"T\"");
}

HandlerResult cmd_signature(const Json& in, const Options&) {
  SpacePtr sp = space_from_json(in, "input");
  return {true, signature_to_json(sp->signature()), {}};
}

HandlerResult cmd_classify_subspace(const Json& in, const Options&) {
  SpacePtr sp = space_from_json(in.contains("space") ? in["space"] : Json(), "input.space");
  Subspace v = subspace_from_json(in.contains("subspace") ? in["subspace"] : Json(),
                                  sp, "input.subspace");
  SubspaceClassification c = classify_subspace(v);
  Json payload;
  payload["type"] = type_number(c.type);
  payload["nilspace"] = rat_mat_to_json(c.nilspace.basis());
  payload["complement"] = rat_mat_to_json(c.complement.basis());
  payload["restricted_signature"] = signature_to_json(c.restricted_signature);
  payload["complement_signature"] = signature_to_json(c.complement_signature);
  payload["side_condition"] = c.side_condition;
  payload["side_condition_holds"] = c.side_condition_holds;
  return {true, std::move(payload), {}};
}

HandlerResult cmd_eigenspace(const Json& in, const Options&) {
  SpacePtr sp = space_from_json(in.contains("space") ? in["space"] : Json(), "input.space");
  if (!in.contains("l") || !in["l"].is_number_integer())
    fail(ErrorKind::Schema, "input.l: expected an integer");
  RatMat rho = rat_mat_from_json(in.contains("rho") ? in["rho"] : Json(), "input.rho");
  EigenspaceData e = eigenspace_chi(sp, rho, in["l"].get<int>());
  return {true, eigenspace_to_json(e), {}};
}

HandlerResult cmd_monodromy_log(const Json& in, const Options& opts) {
  SpacePtr sp = space_from_json(in.contains("space") ? in["space"] : Json(), "input.space");
  RatMat t = rat_mat_from_json(in.contains("T") ? in["T"] : Json(), "input.T");
  auto k = unipotent_power(*sp, t, opts.max_order);
  if (!k)
    fail(ErrorKind::NeedsBaseChange,
         "no power T^k with (T^k-1)^3 = 0 found up to k = " + std::to_string(opts.max_order));
  RatMat power = RatMat::Identity(sp->dim(), sp->dim());
  for (int i = 0; i < *k; ++i) power = power * t;
  MonodromyOperator m(sp, power);
  Json payload;
  payload["unipotent_power"] = *k;
  payload["N"] = rat_mat_to_json(log_unipotent(m));
  payload["exp_log_verified"] = true;
  std::vector<std::string> diags;
  if (*k > 1) diags.push_back("T itself is not unipotent; used T^" + std::to_string(*k));
  return {true, std::move(payload), std::move(diags)};
}

HandlerResult cmd_classify_degeneration(const Json& in, const Options&) {
  return {true, nilpotent_to_json(nilpotent_from_input(in)), {}};
}

HandlerResult cmd_weight_filtration(const Json& in, const Options&) {
  return {true, weight_filtration_to_json(weight_filtration(nilpotent_from_input(in))), {}};
}

HandlerResult cmd_untwist(const Json& in, const Options&) {
  PeriodSampleSet ps = samples_from_json(in, "input");
  NilpotentData nd = classify_monodromy(ps.monodromy);
  Json points = Json::array();
  for (const auto& u : untwist(ps, nd)) {
    Json p;
    p["s"] = cx_to_json(u.s);
    p["phi"] = cx_vec_to_json(u.phi);
    points.push_back(std::move(p));
  }
  Json payload;
  payload["case"] = to_string(nd.kind);
  payload["points"] = std::move(points);
  return {true, std::move(payload), {}};
}

HandlerResult cmd_limit_period(const Json& in, const Options& opts) {
  PeriodSampleSet ps = samples_from_json(in, "input");
  NilpotentData nd = classify_monodromy(ps.monodromy);
  LimitLineOptions lo;
  lo.degree = opts.degree;
  lo.residual_tolerance = tol_or(opts, 1e-6);
  LimitLineResult r = limit_line(ps, nd, lo);
  Json payload;
  payload["f_lim"] = cx_vec_to_json(r.f_lim);
  payload["residual"] = r.residual;
  payload["degree"] = r.degree_used;
  return {true, std::move(payload), r.diagnostics};
}

HandlerResult cmd_check_orthogonality(const Json& in, const Options& opts) {
  SpacePtr sp = space_from_json(in.contains("space") ? in["space"] : Json(), "input.space");
  CxVec f = cx_vec_from_json(in.contains("F") ? in["F"] : Json(), "input.F");
  Subspace v = subspace_from_json(in.contains("V") ? in["V"] : Json(), sp, "input.V");
  OrthogonalityReport rep = check_limit_orthogonality(f, v, tol_or(opts, 1e-8));
  Json payload;
  payload["max_pairing"] = rep.max_pairing;
  payload["tolerance"] = rep.tolerance;
  payload["pass"] = rep.pass;
  return {rep.pass, std::move(payload), {}};
}

HandlerResult cmd_psi_verify(const Json& in, const Options&) {
  SpacePtr sp = space_from_json(in.contains("space") ? in["space"] : Json(), "input.space");
  if (!in.contains("kind") || !in["kind"].is_string())
    fail(ErrorKind::Schema, "input.kind: expected \"tau\" or \"ef\"");
  std::string kind = in["kind"].get<std::string>();
  GaussVec alpha = gauss_vec_from_json(in.contains("alpha") ? in["alpha"] : Json(),
                                       "input.alpha");
  GaussMat map;
  GaussQ lhs, rhs;
  if (kind == "tau") {
    RatVec e0 = rat_vec_from_json(in.contains("e0") ? in["e0"] : Json(), "input.e0");
    RatVec e1 = rat_vec_from_json(in.contains("e1") ? in["e1"] : Json(), "input.e1");
    GaussQ tau = gauss_from_json(in.contains("tau") ? in["tau"] : Json(), "input.tau");
    map = psi_tau<GaussQ>(*sp, e0, e1, tau);
    GaussVec image = map * alpha;
    lhs = herm_product_c<GaussQ>(*sp, image, image);
    Rational drop = 4 * tau.b * oriented_plane_pairing<GaussQ>(*sp, alpha, e0, e1);
    rhs = herm_product_c<GaussQ>(*sp, alpha, alpha) - GaussQ(drop);
  } else if (kind == "ef") {
    RatVec e = rat_vec_from_json(in.contains("e") ? in["e"] : Json(), "input.e");
    GaussVec f = gauss_vec_from_json(in.contains("f") ? in["f"] : Json(), "input.f");
    map = psi_ef<GaussQ>(*sp, e, f);
    GaussVec image = map * alpha;
    lhs = herm_product_c<GaussQ>(*sp, image, image);
    // alpha.conj(alpha) + 4|alpha.e|^2 (p_e(alpha).Im f + (1/2) Im f.Im f),
    // written without the chart so it also covers alpha.e = 0.
    RatVec im_f(f.size());
    for (Eigen::Index i = 0; i < f.size(); ++i) im_f(i) = f(i).b;
    GaussQ ae = form_product_c<GaussQ>(*sp, alpha, promote_vector<GaussQ>(e));
    GaussVec imf_c = promote_vector<GaussQ>(im_f);
    GaussQ cross = form_product_c<GaussQ>(*sp, alpha, imf_c);
    Rational lin = -4 * imag_part(ae * conj(cross));
    Rational quad = 2 * field_norm(ae) * form_product(*sp, im_f, im_f);
    rhs = herm_product_c<GaussQ>(*sp, alpha, alpha) + GaussQ(lin + quad);
  } else {
    fail(ErrorKind::Schema, "input.kind: expected \"tau\" or \"ef\"");
  }
  GaussMat g = promote_matrix<GaussQ>(sp->gram());
  bool form_ok = GaussMat(map.transpose() * g * map) == g;
  bool norm_ok = lhs == rhs;
  Json payload;
  payload["form_preserved"] = form_ok;
  payload["norm_identity_exact"] = norm_ok;
  payload["norm_lhs"] = gauss_to_json(lhs);
  payload["norm_rhs"] = gauss_to_json(rhs);
  return {form_ok && norm_ok, std::move(payload), {}};
}

HandlerResult cmd_arrangement_k1(const Json& in, const Options&) {
  Arrangement arr = arrangement_from_json(in, "input");
  Json k1 = Json::array();
  for (const auto& k : build_K1(arr)) k1.push_back(rat_mat_to_json(k.basis()));
  Json payload;
  payload["K1"] = std::move(k1);
  return {true, std::move(payload), {}};
}

HandlerResult cmd_cone_cells(const Json& in, const Options& opts) {
  Arrangement arr = arrangement_from_json(in, "input");
  RatVec e = rat_vec_from_json(in.contains("e") ? in["e"] : Json(), "input.e");
  ConeOptions co;
  co.seed = opts.seed;
  return {true, cells_to_json(cone_decomposition(arr, e, co)), {}};
}

HandlerResult cmd_strata_poset(const Json& in, const Options& opts) {
  Arrangement arr = arrangement_from_json(in, "input");
  auto isotropics = isotropics_from_json(
      in.contains("isotropics") ? in["isotropics"] : Json::array(), arr.space,
      "input.isotropics");
  ConeOptions co;
  co.seed = opts.seed;
  return {true, strata_poset_to_json(strata_poset(arr, isotropics, co)), {}};
}

HandlerResult cmd_codim2_check(const Json& in, const Options& opts) {
  Arrangement arr = arrangement_from_json(in, "input");
  auto isotropics = isotropics_from_json(
      in.contains("isotropics") ? in["isotropics"] : Json::array(), arr.space,
      "input.isotropics");
  ConeOptions co;
  co.seed = opts.seed;
  Codim2Report rep = codim2_criterion(arr, isotropics, co);
  return {rep.pass, codim2_to_json(rep), {}};
}

HandlerResult cmd_ball_strata(const Json& in, const Options&) {
  SpacePtr sp = space_from_json(in.contains("space") ? in["space"] : Json(), "input.space");
  if (!in.contains("l") || !in["l"].is_number_integer())
    fail(ErrorKind::Schema, "input.l: expected an integer");
  RatMat rho = rat_mat_from_json(in.contains("rho") ? in["rho"] : Json(), "input.rho");
  EigenspaceData chi = eigenspace_chi(sp, rho, in["l"].get<int>());
  std::vector<ChiSubspaceData> hyperplanes, lines;
  if (in.contains("hyperplanes_chi")) {
    const Json& hs = in["hyperplanes_chi"];
    if (!hs.is_array()) fail(ErrorKind::Schema, "input.hyperplanes_chi: expected an array");
    for (size_t i = 0; i < hs.size(); ++i)
      hyperplanes.push_back(chi_subspace_from_json(
          hs[i], "input.hyperplanes_chi[" + std::to_string(i) + "]"));
  }
  if (in.contains("lines_chi")) {
    const Json& ls = in["lines_chi"];
    if (!ls.is_array()) fail(ErrorKind::Schema, "input.lines_chi: expected an array");
    for (size_t i = 0; i < ls.size(); ++i)
      lines.push_back(
          chi_subspace_from_json(ls[i], "input.lines_chi[" + std::to_string(i) + "]"));
  }
  BallPoset p = ball_strata(chi, hyperplanes, lines);
  Json payload = ball_poset_to_json(p);
  payload["chi_dim"] = chi.chi_dim;
  payload["hermitian_signature"] =
      Json::array({chi.hermitian_signature.first, chi.hermitian_signature.second});
  return {true, std::move(payload), {}};
}

HandlerResult cmd_enumerate_isotropic(const Json& in, const Options& opts) {
  SpacePtr sp = space_from_json(in.contains("space") ? in["space"] : in, "input");
  IsotropicEnumeration e = enumerate_isotropic(sp, opts.height);
  Json lines = Json::array(), planes = Json::array();
  for (const auto& l : e.lines) lines.push_back(rat_mat_to_json(l.basis()));
  for (const auto& p : e.planes) planes.push_back(rat_mat_to_json(p.basis()));
  Json payload;
  payload["height"] = opts.height;
  payload["lines"] = std::move(lines);
  payload["planes"] = std::move(planes);
  return {true, std::move(payload), {}};
}

HandlerResult cmd_boundary_type(const Json& in, const Options&) {
  if (!in.contains("w") || !in["w"].is_number_integer())
    fail(ErrorKind::Schema, "input.w: expected an integer");
  Json payload;
  payload["type"] = boundary_pair_type(in["w"].get<int>());
  return {true, std::move(payload), {}};
}

HandlerResult cmd_k3_type(const Json& in, const Options&) {
  auto sings = singularities_from_json(
      in.contains("singularities") ? in["singularities"] : Json(), "input.singularities");
  Json payload;
  payload["class"] = to_string(k3_degeneration_type(sings));
  return {true, std::move(payload), {}};
}

HandlerResult cmd_kulikov(const Json& in, const Options&) {
  Json payload;
  payload["type"] = kulikov_classify(kulikov_from_json(in, "input"));
  return {true, std::move(payload), {}};
}

HandlerResult cmd_gauss_lattice(const Json&, const Options&) {
  return {true, gauss_report_to_json(gauss_lattice_report()), {}};
}

HandlerResult cmd_tube_integral(const Json&, const Options& opts) {
  TubeIntegralResult r = tube_integral_check(opts.epsilon, opts.points);
  Json payload;
  payload["value"] = cx_to_json(r.value);
  payload["magnitude_error"] = r.magnitude_error;
  payload["real_part"] = r.real_part;
  payload["points"] = r.points;
  return {true, std::move(payload), {}};
}

}  // namespace

const std::vector<CommandSpec>& dispatch_table() {
  static const std::vector<CommandSpec> table = {
      {"signature", "exact inertia of a quadratic space", true, cmd_signature},
      {"classify-subspace", "type 1/2/3 of a subspace with side conditions", true,
       cmd_classify_subspace},
      {"eigenspace", "chi eigenspace of a finite-order isometry", true, cmd_eigenspace},
      {"monodromy-log", "nilpotent logarithm of a (quasi-)unipotent operator", true,
       cmd_monodromy_log},
      {"classify-degeneration", "degeneration case I/II/III with (e,u)", true,
       cmd_classify_degeneration},
      {"weight-filtration", "limit weight filtration of a degeneration", true,
       cmd_weight_filtration},
      {"untwist", "single-valued untwisting of period samples", true, cmd_untwist},
      {"limit-period", "extrapolated limit line of period samples", true, cmd_limit_period},
      {"check-orthogonality", "pairing of a limit line against a subspace", true,
       cmd_check_orthogonality},
      {"psi-verify", "exact transvection identities at a sample point", true, cmd_psi_verify},
      {"arrangement-k1", "intersections with positive definite complement", true,
       cmd_arrangement_k1},
      {"cone-cells", "cone decomposition over an isotropic line", true, cmd_cone_cells},
      {"strata-poset", "stratum poset of the compactification", true, cmd_strata_poset},
      {"codim2-check", "boundary codimension criterion", true, cmd_codim2_check},
      {"ball-strata", "ball-quotient stratification K'1 u K'2", true, cmd_ball_strata},
      {"enumerate-isotropic", "bounded-height isotropic lines and planes", true,
       cmd_enumerate_isotropic},
      {"boundary-type", "type of a boundary pair from w(F)", true, cmd_boundary_type},
      {"k3-type", "degeneration type from singularity labels", true, cmd_k3_type},
      {"kulikov", "type of a Kulikov central fiber", true, cmd_kulikov},
      {"gauss-lattice", "rank-2 lattice facts of the worked example", false,
       cmd_gauss_lattice},
      {"tube-integral", "numerical tube contour integral", false, cmd_tube_integral},
  };
  return table;
}

Outcome run_command(const std::string& name, const Json& input, const Options& opts) {
  Json report;
  report["command"] = name;
  report["version"] = kVersion;
  const CommandSpec* spec = nullptr;
  for (const auto& s : dispatch_table())
    if (name == s.name) {
      spec = &s;
      break;
    }
  if (!spec) {
    report["status"] = "error";
    report["diagnostics"] = Json::array({"unknown command '" + name + "'"});
    return {2, std::move(report)};
  }
  try {
    HandlerResult r = spec->handler(input, opts);
    report["status"] = r.ok ? "ok" : "fail";
    report["payload"] = std::move(r.payload);
    report["diagnostics"] = r.diagnostics;
    return {r.ok ? 0 : 1, std::move(report)};
  } catch (const Error& e) {
    bool soft = e.kind() == ErrorKind::NoConvergence;
    report["status"] = soft ? "fail" : "error";
    report["diagnostics"] =
        Json::array({std::string(error_kind_name(e.kind())) + ": " + e.what()});
    return {soft ? 1 : 2, std::move(report)};
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["diagnostics"] = Json::array({std::string("internal: ") + e.what()});
    return {2, std::move(report)};
  }
}

Outcome run_batch(const Json& manifest, const Options& opts, const std::string& base_dir) {
  Json report;
  report["command"] = "batch";
  report["version"] = kVersion;
  Json entries = Json::array();
  bool any_fail = false, any_error = false;
  if (!manifest.is_array()) {
    report["status"] = "error";
    report["diagnostics"] = Json::array({"manifest: expected an array"});
    return {2, std::move(report)};
  }
  for (size_t i = 0; i < manifest.size(); ++i) {
    const Json& entry = manifest[i];
    Json result;
    if (!entry.is_object() || !entry.contains("command") || !entry["command"].is_string()) {
      result["status"] = "error";
      result["diagnostics"] =
          Json::array({"manifest[" + std::to_string(i) + "]: needs a \"command\" string"});
      any_error = true;
      entries.push_back(std::move(result));
      continue;
    }
    Json input;
    if (entry.contains("input")) {
      std::string path = entry["input"].get<std::string>();
      if (!path.empty() && path[0] != '/' && !base_dir.empty())
        path = base_dir + "/" + path;
      std::ifstream f(path);
      if (!f) {
        result["status"] = "error";
        result["command"] = entry["command"];
        result["diagnostics"] = Json::array({"cannot open input '" + path + "'"});
        any_error = true;
        entries.push_back(std::move(result));
        continue;
      }
      try {
        f >> input;
      } catch (const std::exception& e) {
        result["status"] = "error";
        result["command"] = entry["command"];
        result["diagnostics"] = Json::array({std::string("bad JSON: ") + e.what()});
        any_error = true;
        entries.push_back(std::move(result));
        continue;
      }
    }
    Outcome out = run_command(entry["command"].get<std::string>(), input, opts);
    if (out.exit_code == 1) any_fail = true;
    if (out.exit_code == 2) any_error = true;
    entries.push_back(std::move(out.report));
  }
  report["status"] = any_error ? "error" : any_fail ? "fail" : "ok";
  report["entries"] = std::move(entries);
  int code = any_error ? 2 : any_fail ? 1 : 0;
  return {code, std::move(report)};
}

namespace {

void render_value(const Json& v, const std::string& indent, std::ostream& os) {
  if (v.is_object()) {
    os << "\n";
    for (auto it = v.begin(); it != v.end(); ++it) {
      os << indent << "  " << it.key() << ":";
      render_value(it.value(), indent + "  ", os);
    }
  } else if (v.is_array()) {
    bool scalar_list = true;
    for (const auto& e : v)
      if (e.is_object() || e.is_array()) scalar_list = false;
    if (scalar_list) {
      os << " [";
      for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].dump();
      os << "]\n";
    } else {
      os << "\n";
      for (size_t i = 0; i < v.size(); ++i) {
        os << indent << "  - ";
        std::ostringstream sub;
        render_value(v[i], indent + "   ", sub);
        std::string s = sub.str();
        os << (s.empty() || s[0] != '\n' ? s : s.substr(1));
      }
    }
  } else {
    os << " " << v.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << report["command"].get<std::string>() << ": "
     << report["status"].get<std::string>() << "\n";
  if (report.contains("payload")) {
    os << "payload:";
    render_value(report["payload"], "", os);
  }
  if (report.contains("entries")) {
    os << "entries:";
    render_value(report["entries"], "", os);
  }
  if (report.contains("diagnostics") && !report["diagnostics"].empty()) {
    os << "diagnostics:";
    render_value(report["diagnostics"], "", os);
  }
  return os.str();
}

}  // namespace typeiv::cli
