#include "typeiv/json_io.hpp"

namespace typeiv {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(ErrorKind::Schema, path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::Schema, path + "." + key + ": missing");
  return *it;
}

void expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(ErrorKind::Schema, path + ": expected an array");
}

double number_from(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(ErrorKind::Schema, path + ": expected a number");
  return j.get<double>();
}

}  // namespace

Json rational_to_json(const Rational& x) { return x.get_str(); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(ErrorKind::Schema, path + ": expected \"p/q\" or an integer");
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const Error&) {
    fail(ErrorKind::Schema, path + ": bad rational '" + j.get<std::string>() + "'");
  }
}

Json rat_mat_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat rat_mat_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return RatMat(0, 0);
  expect_array(j[0], path + "[0]");
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  RatMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    expect_array(row, path + "[" + std::to_string(i) + "]");
    if (static_cast<Eigen::Index>(row.size()) != cols)
      fail(ErrorKind::Schema, path + "[" + std::to_string(i) + "]: ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = rational_from_json(row[static_cast<size_t>(c)],
                                   path + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
  }
  return m;
}

Json rat_vec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

RatVec rat_vec_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  RatVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

Json space_to_json(const QuadraticSpace& sp) {
  Json out;
  out["dim"] = sp.dim();
  out["gram"] = rat_mat_to_json(sp.gram());
  return out;
}

SpacePtr space_from_json(const Json& j, const std::string& path) {
  RatMat gram = rat_mat_from_json(field(j, "gram", path), path + ".gram");
  if (j.contains("dim") && j["dim"].is_number_integer() &&
      j["dim"].get<Eigen::Index>() != gram.rows())
    fail(ErrorKind::Schema, path + ".dim: does not match the gram matrix");
  try {
    return QuadraticSpace::create(std::move(gram));
  } catch (const Error& e) {
    fail(ErrorKind::Schema, path + ".gram: " + e.what());
  }
}

Json subspace_to_json(const Subspace& s) {
  Json out;
  out["basis"] = rat_mat_to_json(s.basis());
  return out;
}

Subspace subspace_from_json(const Json& j, const SpacePtr& space, const std::string& path) {
  RatMat basis = rat_mat_from_json(field(j, "basis", path), path + ".basis");
  if (basis.rows() == 0) return Subspace::zero(space);
  return Subspace(space, std::move(basis));
}

Json signature_to_json(const Signature& s) {
  Json out;
  out["p"] = s.positive;
  out["q"] = s.negative;
  out["r"] = s.zero;
  return out;
}

Json cx_to_json(const Cx& z) { return Json::array({z.real(), z.imag()}); }

Cx cx_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2)
    fail(ErrorKind::Schema, path + ": expected [re, im]");
  return Cx(number_from(j[0], path + "[0]"), number_from(j[1], path + "[1]"));
}

Json cx_vec_to_json(const CxVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(cx_to_json(v(i)));
  return out;
}

CxVec cx_vec_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  CxVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = cx_from_json(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

Json gauss_to_json(const GaussQ& z) {
  Json out;
  out["re"] = rational_to_json(z.a);
  out["im"] = rational_to_json(z.b);
  return out;
}

GaussQ gauss_from_json(const Json& j, const std::string& path) {
  return GaussQ(rational_from_json(field(j, "re", path), path + ".re"),
                rational_from_json(field(j, "im", path), path + ".im"));
}

Json gauss_vec_to_json(const GaussVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(gauss_to_json(v(i)));
  return out;
}

GaussVec gauss_vec_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  GaussVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = gauss_from_json(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

MonodromyOperator monodromy_from_json(const Json& j, const std::string& path) {
  SpacePtr space = space_from_json(field(j, "space", path), path + ".space");
  RatMat t = rat_mat_from_json(field(j, "T", path), path + ".T");
  return MonodromyOperator(std::move(space), std::move(t));
}

Json nilpotent_to_json(const NilpotentData& nd) {
  Json out;
  out["case"] = to_string(nd.kind);
  out["N"] = rat_mat_to_json(nd.n);
  if (nd.e) out["e"] = rat_vec_to_json(*nd.e);
  if (nd.u) out["u"] = rat_vec_to_json(*nd.u);
  if (nd.kind != DegenerationCase::I) out["uu"] = rational_to_json(nd.uu);
  out["J"] = subspace_to_json(nd.j);
  out["J0"] = subspace_to_json(nd.j0);
  return out;
}

Json weight_filtration_to_json(const WeightFiltration& wf) {
  Json steps = Json::array();
  for (const auto& [k, sub] : wf.steps) {
    Json step;
    step["k"] = k;
    step["basis"] = rat_mat_to_json(sub.basis());
    steps.push_back(std::move(step));
  }
  Json out;
  out["steps"] = std::move(steps);
  return out;
}

PeriodSampleSet samples_from_json(const Json& j, const std::string& path) {
  MonodromyOperator mono = monodromy_from_json(field(j, "monodromy", path), path + ".monodromy");
  const Json& arr = field(j, "samples", path);
  expect_array(arr, path + ".samples");
  std::vector<PeriodSample> samples;
  for (size_t i = 0; i < arr.size(); ++i) {
    std::string sp = path + ".samples[" + std::to_string(i) + "]";
    PeriodSample s;
    s.w = cx_from_json(field(arr[i], "w", sp), sp + ".w");
    s.alpha = cx_vec_from_json(field(arr[i], "alpha", sp), sp + ".alpha");
    samples.push_back(std::move(s));
  }
  return make_period_samples(std::move(mono), std::move(samples));
}

Arrangement arrangement_from_json(const Json& j, const std::string& path) {
  SpacePtr space = space_from_json(field(j, "space", path), path + ".space");
  const Json& arr = field(j, "hyperplanes", path);
  expect_array(arr, path + ".hyperplanes");
  std::vector<Subspace> hyperplanes;
  for (size_t i = 0; i < arr.size(); ++i)
    hyperplanes.push_back(subspace_from_json(
        arr[i], space, path + ".hyperplanes[" + std::to_string(i) + "]"));
  return make_arrangement(std::move(space), std::move(hyperplanes));
}

std::vector<IsotropicDatum> isotropics_from_json(const Json& j, const SpacePtr& space,
                                                 const std::string& path) {
  expect_array(j, path);
  std::vector<IsotropicDatum> out;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    const Json& kind = field(j[i], "kind", p);
    if (!kind.is_string()) fail(ErrorKind::Schema, p + ".kind: expected \"line\" or \"plane\"");
    std::string k = kind.get<std::string>();
    IsotropicKind ik;
    if (k == "line")
      ik = IsotropicKind::Line;
    else if (k == "plane")
      ik = IsotropicKind::Plane;
    else
      fail(ErrorKind::Schema, p + ".kind: expected \"line\" or \"plane\"");
    out.push_back(make_isotropic(ik, subspace_from_json(j[i], space, p)));
  }
  return out;
}

Json cells_to_json(const ConeDecomposition& dec) {
  Json out;
  out["e"] = rat_vec_to_json(dec.e);
  out["complement"] = rat_mat_to_json(dec.chart.complement);
  Json rel = Json::array();
  for (Eigen::Index i : dec.relevant) rel.push_back(i);
  out["relevant_hyperplanes"] = std::move(rel);
  Json cells = Json::array();
  int chambers = 0;
  for (const auto& c : dec.cells) {
    Json cell;
    Json signs = Json::array();
    for (int s : c.signs) signs.push_back(s);
    cell["signs"] = std::move(signs);
    cell["dim"] = c.dim;
    cell["witness"] = rat_vec_to_json(c.witness);
    cell["witness_norm"] = rational_to_json(c.witness_norm);
    cell["K_sigma"] = rat_mat_to_json(c.k_sigma.basis());
    cells.push_back(std::move(cell));
    if (c.dim == dec.chart.complement.rows()) ++chambers;
  }
  out["chamber_count"] = chambers;
  out["cells"] = std::move(cells);
  return out;
}

Json strata_poset_to_json(const StratumPoset& p) {
  Json nodes = Json::array();
  for (const auto& n : p.nodes) {
    Json node;
    node["tag"] = to_string(n.tag);
    if (n.source_index >= 0) node["source"] = n.source_index;
    if (n.tag == StratumTag::Sigma) {
      Json signs = Json::array();
      for (int s : n.signs) signs.push_back(s);
      node["signs"] = std::move(signs);
      node["cell_dim"] = n.cell_dim;
    }
    node["K"] = rat_mat_to_json(n.k_sigma.basis());
    nodes.push_back(std::move(node));
  }
  Json covers = Json::array();
  for (const auto& [a, b] : p.cover_relations) covers.push_back(Json::array({a, b}));
  Json out;
  out["nodes"] = std::move(nodes);
  out["cover_relations"] = std::move(covers);
  out["dot"] = poset_dot(p);
  return out;
}

Json ball_poset_to_json(const BallPoset& p) {
  Json nodes = Json::array();
  for (const auto& n : p.nodes) {
    Json node;
    node["tag"] = to_string(n.tag);
    if (n.source_index >= 0) node["source"] = n.source_index;
    node["K_c0"] = rat_mat_to_json(n.basis.c0);
    node["K_c1"] = rat_mat_to_json(n.basis.c1);
    node["hermitian_signature"] =
        Json::array({n.hermitian_signature.first, n.hermitian_signature.second});
    nodes.push_back(std::move(node));
  }
  Json covers = Json::array();
  for (const auto& [a, b] : p.cover_relations) covers.push_back(Json::array({a, b}));
  Json out;
  out["nodes"] = std::move(nodes);
  out["cover_relations"] = std::move(covers);
  return out;
}

Json codim2_to_json(const Codim2Report& r) {
  Json out;
  out["dim_H"] = r.dim_h;
  out["dim_ok"] = r.dim_ok;
  Json bad = Json::array();
  for (const auto& b : r.bad) {
    Json item;
    item["basis"] = rat_mat_to_json(b.w.basis());
    item["witness"] = rat_vec_to_json(b.witness);
    bad.push_back(std::move(item));
  }
  out["negative_semidefinite_intersections"] = std::move(bad);
  Json thin = Json::array();
  for (const auto& t : r.thin_cells) {
    Json item;
    item["line"] = t.line_index;
    Json signs = Json::array();
    for (int s : t.signs) signs.push_back(s);
    item["signs"] = std::move(signs);
    thin.push_back(std::move(item));
  }
  out["one_dimensional_span_cells"] = std::move(thin);
  out["pass"] = r.pass;
  return out;
}

Json invar_to_json(const InvarReport& r) {
  Json out;
  Json items = Json::array();
  for (const auto& it : r.intersections) {
    Json item;
    item["basis"] = rat_mat_to_json(it.w.basis());
    item["nonisotropic"] = it.nonisotropic;
    item["takes_positive"] = it.takes_positive;
    items.push_back(std::move(item));
  }
  out["two_dimensional_intersections"] = std::move(items);
  Json failing = Json::array();
  for (int i : r.failing) failing.push_back(i);
  out["failing"] = std::move(failing);
  out["pass"] = r.pass;
  return out;
}

ChiSubspaceData chi_subspace_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return ChiSubspaceData{RatMat(0, 0), RatMat(0, 0)};
  expect_array(j[0], path + "[0]");
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  ChiSubspaceData out{RatMat(rows, cols), RatMat(rows, cols)};
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    std::string rp = path + "[" + std::to_string(i) + "]";
    expect_array(row, rp);
    if (static_cast<Eigen::Index>(row.size()) != cols)
      fail(ErrorKind::Schema, rp + ": ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& cell = row[static_cast<size_t>(c)];
      std::string cp = rp + "[" + std::to_string(c) + "]";
      out.c0(i, c) = rational_from_json(field(cell, "c0", cp), cp + ".c0");
      out.c1(i, c) = rational_from_json(field(cell, "c1", cp), cp + ".c1");
    }
  }
  return out;
}

Json chi_subspace_to_json(const ChiSubspaceData& s) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < s.c0.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < s.c0.cols(); ++j) {
      Json cell;
      cell["c0"] = rational_to_json(s.c0(i, j));
      cell["c1"] = rational_to_json(s.c1(i, j));
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

KulikovFiber kulikov_from_json(const Json& j, const std::string& path) {
  KulikovFiber f;
  const Json& comps = field(j, "components", path);
  expect_array(comps, path + ".components");
  for (size_t i = 0; i < comps.size(); ++i) {
    std::string p = path + ".components[" + std::to_string(i) + "]";
    if (!comps[i].is_string()) fail(ErrorKind::Schema, p + ": expected a string");
    std::string k = comps[i].get<std::string>();
    if (k == "K3")
      f.components.push_back(ComponentKind::K3);
    else if (k == "Rational")
      f.components.push_back(ComponentKind::Rational);
    else if (k == "EllipticRuled")
      f.components.push_back(ComponentKind::EllipticRuled);
    else
      fail(ErrorKind::Schema, p + ": unknown component kind '" + k + "'");
  }
  const Json& dc = field(j, "dual_complex", path);
  std::string d = dc.is_string() ? dc.get<std::string>() : "";
  if (d == "Point")
    f.dual_complex = DualComplex::Point;
  else if (d == "Interval")
    f.dual_complex = DualComplex::Interval;
  else if (d == "TriangulatedTwoSphere")
    f.dual_complex = DualComplex::TriangulatedTwoSphere;
  else
    fail(ErrorKind::Schema, path + ".dual_complex: unknown value '" + d + "'");
  const Json& cur = field(j, "double_curves", path);
  std::string c = cur.is_string() ? cur.get<std::string>() : "";
  if (c == "None")
    f.double_curves = DoubleCurves::None;
  else if (c == "SmoothGenusOne")
    f.double_curves = DoubleCurves::SmoothGenusOne;
  else if (c == "RationalCycles")
    f.double_curves = DoubleCurves::RationalCycles;
  else
    fail(ErrorKind::Schema, path + ".double_curves: unknown value '" + c + "'");
  return f;
}

std::vector<SingularityLabel> singularities_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<SingularityLabel> out;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) fail(ErrorKind::Schema, p + ": expected a string label");
    try {
      out.push_back(parse_singularity(j[i].get<std::string>()));
    } catch (const Error& e) {
      fail(ErrorKind::Schema, p + ": " + e.what());
    }
  }
  return out;
}

Json gauss_report_to_json(const GaussLatticeReport& r) {
  Json out;
  out["signature"] = signature_to_json(r.signature);
  out["g_squared_is_minus_one"] = r.g_squared_is_minus_one;
  out["discriminant_order"] = r.discriminant_order;
  Json inv = Json::array();
  for (long f : r.invariant_factors) inv.push_back(f);
  out["invariant_factors"] = std::move(inv);
  Json q = Json::array();
  for (const auto& v : r.q_values) q.push_back(rational_to_json(v));
  out["q_values"] = std::move(q);
  Json iso = Json::array();
  for (int i : r.isotropic_classes) iso.push_back(i);
  out["isotropic_classes"] = std::move(iso);
  out["has_even_overlattice"] = r.has_even_overlattice;
  out["gamma_self_intersection"] = r.gamma_self_intersection;
  return out;
}

Json eigenspace_to_json(const EigenspaceData& e) {
  Json out;
  out["l"] = e.l;
  out["chi_dim"] = e.chi_dim;
  out["basis_c0"] = rat_mat_to_json(e.basis_c0);
  out["basis_c1"] = rat_mat_to_json(e.basis_c1);
  out["hermitian_signature"] =
      Json::array({e.hermitian_signature.first, e.hermitian_signature.second});
  out["herm_c0"] = rat_mat_to_json(e.herm_c0);
  out["herm_c1"] = rat_mat_to_json(e.herm_c1);
  out["bilinear_isotropic"] = e.bilinear_isotropic;
  return out;
}

}  // namespace typeiv
