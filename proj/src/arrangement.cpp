#include "typeiv/arrangement.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace typeiv {

namespace {

Rational qform(const RatMat& g, const RatVec& y) {
  return (y.transpose() * g * y)(0, 0);
}

Rational qpair(const RatMat& g, const RatVec& a, const RatVec& b) {
  return (a.transpose() * g * b)(0, 0);
}

class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

  Rational rat(int radius, int max_den) {
    std::uniform_int_distribution<long> num(-radius, radius);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng_), den(rng_));
  }

  RatVec vec(Eigen::Index n, int radius, int max_den) {
    RatVec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rat(radius, max_den);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

std::string basis_key(const RatMat& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols() << ":";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << m(i, j).get_str() << ",";
  return os.str();
}

}  // namespace

Arrangement make_arrangement(SpacePtr space, std::vector<Subspace> hyperplanes) {
  const Signature& sig = space->signature();
  if (sig.zero != 0 || sig.negative != 2 || sig.positive < 2)
    fail(ErrorKind::MalformedInput,
         "arrangement ambient must have signature (n,2), n >= 2; got " + to_string(sig));
  std::set<std::string> seen;
  for (const auto& h : hyperplanes) {
    if (!same_space(h.space(), space))
      fail(ErrorKind::AmbientMismatch, "hyperplane lives in a different space");
    if (h.dim() != space->dim() - 1)
      fail(ErrorKind::MalformedInput, "arrangement member is not of codimension one");
    Signature hs = h.restricted_signature();
    if (!(hs == Signature{sig.positive - 1, 2, 0}))
      fail(ErrorKind::MalformedInput,
           "arrangement member must have signature (n-1,2); got " + to_string(hs));
    if (!seen.insert(basis_key(h.basis())).second)
      fail(ErrorKind::MalformedInput, "duplicate arrangement member");
  }
  return Arrangement{std::move(space), std::move(hyperplanes)};
}

IsotropicDatum make_isotropic(IsotropicKind kind, Subspace s) {
  const Eigen::Index want = kind == IsotropicKind::Line ? 1 : 2;
  if (s.dim() != want)
    fail(ErrorKind::MalformedInput, "isotropic datum has the wrong dimension");
  if (!s.is_totally_isotropic())
    fail(ErrorKind::MalformedInput, "subspace is not totally isotropic");
  return IsotropicDatum{kind, std::move(s)};
}

std::vector<Subspace> intersection_closure(const Arrangement& arr) {
  std::vector<Subspace> out;
  std::set<std::string> seen;
  auto push = [&](const Subspace& s) {
    if (s.dim() == arr.space->dim()) return false;  // the whole space is excluded
    if (seen.insert(basis_key(s.basis())).second) {
      out.push_back(s);
      return true;
    }
    return false;
  };
  for (const auto& h : arr.hyperplanes) push(h);
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t n = out.size();
    for (size_t i = 0; i < n; ++i)
      for (const auto& h : arr.hyperplanes) {
        Subspace s = subspace_intersect(out[i], h);
        if (s.dim() == 0) continue;
        if (push(s)) grew = true;
      }
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return basis_key(a.basis()) < basis_key(b.basis());
  });
  return out;
}

std::vector<Subspace> build_K1(const Arrangement& arr) {
  std::vector<Subspace> out;
  for (const auto& k : intersection_closure(arr)) {
    Subspace comp = orthogonal_complement(k);
    Signature cs = comp.restricted_signature();
    if (cs == Signature{static_cast<int>(comp.dim()), 0, 0}) out.push_back(k);
  }
  return out;
}

Subspace K_J_plane(const Arrangement& arr, const IsotropicDatum& j) {
  if (j.kind != IsotropicKind::Plane)
    fail(ErrorKind::MalformedInput, "K_J needs an isotropic plane");
  if (!same_space(j.subspace.space(), arr.space))
    fail(ErrorKind::AmbientMismatch, "isotropic plane lives in a different space");
  Subspace k = orthogonal_complement(j.subspace);
  for (const auto& h : arr.hyperplanes)
    if (contains(h, j.subspace)) k = subspace_intersect(k, h);
  return k;
}

std::optional<RatVec> negative_vector(const RatMat& gram) {
  const Eigen::Index n = gram.rows();
  RatMat m = gram;
  RatMat basis = RatMat::Identity(n, n);  // rows express the running basis
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (sign_of(m(i, i)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      Eigen::Index oi = -1, oj = -1;
      for (Eigen::Index i = k; i < n && oi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n && oi < 0; ++j)
          if (sign_of(m(i, j)) != 0) {
            oi = i;
            oj = j;
          }
      if (oi < 0) return std::nullopt;
      m.row(oi) += m.row(oj);
      m.col(oi) += m.col(oj);
      basis.row(oi) += basis.row(oj);
      piv = oi;
    }
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      m.col(piv).swap(m.col(k));
      basis.row(piv).swap(basis.row(k));
    }
    if (sign_of(m(k, k)) < 0) return RatVec(basis.row(k).transpose());
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (sign_of(m(i, k)) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      m.row(i) -= f * m.row(k);
      m.col(i) -= f * m.col(k);
      basis.row(i) -= f * basis.row(k);
    }
  }
  return std::nullopt;
}

namespace {

struct ConeContext {
  const Arrangement* arr;
  TubeChart chart;
  std::vector<Eigen::Index> relevant;
  std::vector<RatVec> walls;  // primitive functionals in complement coordinates
  RatVec y0;                  // interior point fixing the component
  const RatMat* qgram;

  Eigen::Index qdim() const { return chart.complement.rows(); }

  std::vector<int> signs_at(const RatVec& y) const {
    std::vector<int> s(walls.size());
    for (size_t i = 0; i < walls.size(); ++i)
      s[i] = sign_of(Rational(walls[i].dot(y)));
    return s;
  }

  bool in_open_cone(const RatVec& y) const {
    return sign_of(qform(*qgram, y)) < 0 && sign_of(qpair(*qgram, y, y0)) < 0;
  }

  bool in_closed_cone(const RatVec& y) const {
    if (is_zero_matrix(RatMat(y.transpose()))) return false;
    return sign_of(qform(*qgram, y)) <= 0 && sign_of(qpair(*qgram, y, y0)) < 0;
  }
};

// Chamber discovery: seeded rational sampling in the cone component plus
// exact segment scans and wall reflections until no new sign vector shows up.
std::map<std::vector<int>, RatVec> find_chambers(const ConeContext& ctx,
                                                 const ConeOptions& opts) {
  std::map<std::vector<int>, RatVec> chambers;
  auto offer = [&](const RatVec& y) {
    if (!ctx.in_open_cone(y)) return;
    std::vector<int> s = ctx.signs_at(y);
    for (int v : s)
      if (v == 0) return;
    chambers.emplace(std::move(s), y);
  };
  offer(ctx.y0);
  RatSampler sampler(opts.seed);
  const int rounds = std::max(opts.sample_rounds, 8);
  for (int r = 0; r < rounds; ++r) {
    int radius = 1 + (r % 8);
    int max_den = 1 + (r / 8) % 2;
    for (int b = 0; b < 32; ++b) offer(sampler.vec(ctx.qdim(), radius, max_den));
  }
  for (int pass = 0; pass < 8; ++pass) {
    const size_t before = chambers.size();
    std::vector<RatVec> pts;
    pts.reserve(chambers.size());
    for (const auto& [s, y] : chambers) pts.push_back(y);
    // Reflections across each wall.
    for (const auto& y : pts)
      for (const auto& c : ctx.walls) {
        Rational cy = c.dot(y), cc = c.dot(c);
        offer(RatVec(y - (2 * cy / cc) * c));
      }
    // Exact crossing scan along segments between known chambers.
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        std::vector<Rational> ts{Rational(0), Rational(1)};
        for (const auto& c : ctx.walls) {
          Rational da = c.dot(pts[i]), db = c.dot(pts[j]);
          if (sign_of(da) * sign_of(db) < 0) ts.push_back(da / (da - db));
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (size_t k = 0; k + 1 < ts.size(); ++k) {
          Rational t = (ts[k] + ts[k + 1]) / 2;
          offer(RatVec(pts[i] + t * (pts[j] - pts[i])));
        }
      }
    if (chambers.size() == before) break;
  }
  return chambers;
}

}  // namespace

ConeDecomposition cone_decomposition(const Arrangement& arr, const RatVec& e,
                                     const ConeOptions& opts) {
  if (e.size() != arr.space->dim())
    fail(ErrorKind::MalformedInput, "generator dimension does not match the space");
  Subspace j(arr.space, RatMat(e.transpose()));
  if (j.dim() != 1 || sign_of(form_product(*arr.space, e, e)) != 0)
    fail(ErrorKind::MalformedInput, "e must span a rational isotropic line");

  ConeContext ctx{&arr, make_tube_chart(arr.space, e), {}, {}, RatVec(), nullptr};
  ctx.qgram = &ctx.chart.quotient_gram;
  const Eigen::Index qdim = ctx.qdim();
  Signature qs = signature_of(*ctx.qgram);
  if (!(qs.zero == 0 && qs.negative == 1))
    fail(ErrorKind::UnsupportedInput,
         "J^perp/J is not Lorentzian; got signature " + to_string(qs));

  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(arr.hyperplanes.size()); ++i)
    if (contains(arr.hyperplanes[i], j)) ctx.relevant.push_back(i);
  if (ctx.relevant.size() > 12)
    fail(ErrorKind::UnsupportedInput, "too many members through J for cell enumeration");
  for (Eigen::Index idx : ctx.relevant) {
    RatMat lam = kernel(arr.hyperplanes[idx].basis());  // 1 x d functional
    RatVec c = ctx.chart.complement * RatVec(lam.row(0).transpose());
    c = primitive_rescale(c);
    if (is_zero_matrix(RatMat(c.transpose())))
      throw std::logic_error("member through J descends to a zero functional");
    ctx.walls.push_back(std::move(c));
  }

  if (opts.component_witness) {
    ctx.y0 = *opts.component_witness;
    if (ctx.y0.size() != qdim || sign_of(qform(*ctx.qgram, ctx.y0)) >= 0)
      fail(ErrorKind::MalformedInput, "component witness is not inside the cone");
  } else {
    auto neg = negative_vector(*ctx.qgram);
    if (!neg) throw std::logic_error("Lorentzian quotient without negative vector");
    ctx.y0 = *neg;
  }

  auto chambers = find_chambers(ctx, opts);

  Subspace jperp = orthogonal_complement(j);
  const size_t m = ctx.walls.size();
  std::vector<ConeCell> cells;
  for (const auto& [signs, witness] : chambers)
    cells.push_back(ConeCell{signs, witness, qform(*ctx.qgram, witness),
                             static_cast<int>(qdim), jperp});

  // Faces: zero out subsets of walls and look for exact witnesses in the
  // closed cone.
  std::map<std::vector<int>, ConeCell> faces;
  RatSampler face_sampler(opts.seed + 1);
  for (std::uint32_t mask = 1; m > 0 && mask < (1u << m); ++mask) {
    RatMat wall_rows(static_cast<Eigen::Index>(__builtin_popcount(mask)), qdim);
    Eigen::Index r = 0;
    for (size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) wall_rows.row(r++) = ctx.walls[i].transpose();
    RatMat lz = kernel(wall_rows);  // rows span L_Z
    if (lz.rows() == 0) continue;
    RatMat gram_z = lz * (*ctx.qgram) * lz.transpose();
    Signature sz = signature_of(gram_z);
    if (sz.negative == 0 && sz.zero == 0) continue;  // positive definite: no cone points
    if (sz.zero >= 2) throw std::logic_error("isotropic subspace of dimension >= 2 in a Lorentzian form");

    std::vector<RatVec> candidates;
    if (sz.negative == 0) {
      // Positive semidefinite with a one-dimensional radical: the closed
      // cone touches L_Z only along the radical ray.
      RatMat rad = kernel(gram_z);
      RatVec ray = lz.transpose() * RatVec(rad.row(0).transpose());
      candidates.push_back(ray);
      candidates.push_back(RatVec(-ray));
    } else {
      if (auto neg = negative_vector(gram_z)) {
        RatVec y = lz.transpose() * (*neg);
        candidates.push_back(y);
        candidates.push_back(RatVec(-y));
      }
      // Projections of chamber witnesses onto L_Z.
      RatMat lzlzt = lz * lz.transpose();
      RatMat proj = lz.transpose() * inverse(lzlzt) * lz;
      for (const auto& [s, y] : chambers) candidates.push_back(RatVec(proj * y));
      for (int r2 = 0; r2 < 64; ++r2) {
        RatVec t = face_sampler.vec(lz.rows(), 1 + (r2 % 6), 1 + (r2 / 32));
        candidates.push_back(RatVec(lz.transpose() * t));
      }
    }
    for (const auto& y : candidates) {
      if (!ctx.in_closed_cone(y)) continue;
      std::vector<int> s = ctx.signs_at(y);
      std::uint32_t zmask = 0;
      for (size_t i = 0; i < m; ++i)
        if (s[i] == 0) zmask |= (1u << i);
      if (zmask != mask) continue;  // belongs to a different stratum
      auto it = faces.find(s);
      Rational norm = qform(*ctx.qgram, y);
      bool interior = sign_of(norm) < 0;
      if (it != faces.end()) {
        if (interior && sign_of(it->second.witness_norm) == 0) {
          it->second.witness = y;
          it->second.witness_norm = norm;
        }
        continue;
      }
      int dim;
      Subspace k = jperp;
      if (sz.negative == 0) {
        // the stratum is a single isotropic ray; its span lifts to an
        // isotropic plane through J
        dim = 1;
        RatMat rows(2, arr.space->dim());
        rows.row(0) = e.transpose();
        rows.row(1) = (ctx.chart.complement.transpose() * y).transpose();
        k = Subspace(arr.space, std::move(rows));
      } else {
        dim = static_cast<int>(lz.rows());
        for (size_t i = 0; i < m; ++i)
          if (mask & (1u << i)) k = subspace_intersect(k, arr.hyperplanes[ctx.relevant[i]]);
      }
      faces.emplace(s, ConeCell{s, y, std::move(norm), dim, std::move(k)});
    }
  }
  for (auto& [s, cell] : faces) cells.push_back(std::move(cell));
  std::sort(cells.begin(), cells.end(), [](const ConeCell& a, const ConeCell& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.signs < b.signs;
  });
  return ConeDecomposition{e, std::move(ctx.chart), std::move(ctx.relevant),
                           std::move(cells)};
}

namespace {

bool sigma_face_le(const StratumIndex& a, const StratumIndex& b) {
  if (a.signs.size() != b.signs.size()) return false;
  bool strict = false;
  for (size_t i = 0; i < a.signs.size(); ++i) {
    if (a.signs[i] == b.signs[i]) continue;
    if (a.signs[i] != 0) return false;
    strict = true;
  }
  return strict;
}

bool stratum_less(const StratumPoset& p, int ia, int ib) {
  const StratumIndex& a = p.nodes[static_cast<size_t>(ia)];
  const StratumIndex& b = p.nodes[static_cast<size_t>(ib)];
  if (ia == ib) return false;
  if (a.tag == StratumTag::Sigma && b.tag == StratumTag::Sigma &&
      a.source_index == b.source_index)
    return sigma_face_le(a, b);
  if (a.k_sigma.dim() >= b.k_sigma.dim()) return false;
  return contains(b.k_sigma, a.k_sigma);
}

}  // namespace

bool poset_less(const StratumPoset& p, int a, int b) { return stratum_less(p, a, b); }

StratumPoset strata_poset(const Arrangement& arr,
                          const std::vector<IsotropicDatum>& isotropics,
                          const ConeOptions& opts) {
  StratumPoset poset;
  poset.nodes.push_back(StratumIndex{StratumTag::Interior,
                                     Subspace::zero(arr.space), -1, -1, {}, -1});
  std::vector<Subspace> k1 = build_K1(arr);
  for (size_t i = 0; i < k1.size(); ++i)
    poset.nodes.push_back(StratumIndex{StratumTag::K1, k1[i],
                                       static_cast<int>(i), -1, {}, -1});
  int plane_index = 0, line_index = 0;
  for (const auto& iso : isotropics) {
    // revalidate: callers may hand-build the data
    make_isotropic(iso.kind, iso.subspace);
    if (!same_space(iso.subspace.space(), arr.space))
      fail(ErrorKind::AmbientMismatch, "isotropic datum lives in a different space");
    if (iso.kind == IsotropicKind::Plane) {
      poset.nodes.push_back(StratumIndex{StratumTag::K2, K_J_plane(arr, iso),
                                         plane_index++, -1, {}, -1});
    } else {
      RatVec e = primitive_rescale(RatVec(iso.subspace.basis().row(0).transpose()));
      ConeDecomposition dec = cone_decomposition(arr, e, opts);
      for (size_t c = 0; c < dec.cells.size(); ++c)
        poset.nodes.push_back(StratumIndex{StratumTag::Sigma, dec.cells[c].k_sigma,
                                           line_index, static_cast<int>(c),
                                           dec.cells[c].signs, dec.cells[c].dim});
      poset.line_decompositions.push_back(std::move(dec));
      ++line_index;
    }
  }
  const int n = static_cast<int>(poset.nodes.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!stratum_less(poset, a, b)) continue;
      bool covered = true;
      for (int c = 0; c < n && covered; ++c)
        if (c != a && c != b && stratum_less(poset, a, c) && stratum_less(poset, c, b))
          covered = false;
      if (covered) poset.cover_relations.emplace_back(a, b);
    }
  return poset;
}

std::string poset_dot(const StratumPoset& p) {
  std::ostringstream os;
  os << "digraph strata {\n  rankdir=BT;\n";
  for (size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& n = p.nodes[i];
    os << "  n" << i << " [label=\"" << to_string(n.tag);
    if (n.source_index >= 0) os << " " << n.source_index;
    if (n.tag == StratumTag::Sigma) {
      os << " [";
      for (size_t k = 0; k < n.signs.size(); ++k)
        os << (n.signs[k] > 0 ? "+" : n.signs[k] < 0 ? "-" : "0");
      os << "] dim " << n.cell_dim;
    }
    os << " | K dim " << n.k_sigma.dim() << "\"];\n";
  }
  for (const auto& [a, b] : p.cover_relations)
    os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

Codim2Report codim2_criterion(const Arrangement& arr,
                              const std::vector<IsotropicDatum>& isotropics,
                              const ConeOptions& opts) {
  Codim2Report rep;
  rep.dim_h = static_cast<int>(arr.space->dim());
  rep.dim_ok = rep.dim_h >= 5;
  for (const auto& w : intersection_closure(arr)) {
    if (w.dim() != 2) continue;
    Signature s = w.restricted_signature();
    if (s.positive > 0) continue;  // the form takes a positive value
    RatVec witness = w.basis().row(0).transpose();
    for (Eigen::Index i = 0; i < w.dim(); ++i) {
      RatVec v = w.basis().row(i).transpose();
      if (sign_of(form_product(*arr.space, v, v)) < 0) {
        witness = v;
        break;
      }
    }
    rep.bad.push_back(Codim2Report::BadIntersection{w, std::move(witness)});
  }
  int line_index = 0;
  for (const auto& iso : isotropics) {
    if (iso.kind != IsotropicKind::Line) continue;
    RatVec e = primitive_rescale(RatVec(iso.subspace.basis().row(0).transpose()));
    ConeDecomposition dec = cone_decomposition(arr, e, opts);
    for (const auto& cell : dec.cells)
      if (cell.k_sigma.dim() == 2)
        rep.thin_cells.push_back(Codim2Report::ThinCell{line_index, cell.signs});
    ++line_index;
  }
  rep.pass = rep.dim_ok && rep.bad.empty();
  return rep;
}

InvarReport invar_hypothesis(const Arrangement& arr) {
  InvarReport rep;
  for (const auto& w : intersection_closure(arr)) {
    if (w.dim() != 2) continue;
    bool nonisotropic = !w.is_totally_isotropic();
    bool takes_positive = w.restricted_signature().positive > 0;
    if (nonisotropic && !takes_positive)
      rep.failing.push_back(static_cast<int>(rep.intersections.size()));
    rep.intersections.push_back(InvarReport::Item{w, nonisotropic, takes_positive});
  }
  rep.pass = rep.failing.empty();
  return rep;
}

// --- ball quotient variant --------------------------------------------------

namespace {

template <int L>
CycMat<L> chi_to_cyc(const ChiSubspaceData& s) {
  if (s.c0.rows() != s.c1.rows() || s.c0.cols() != s.c1.cols())
    fail(ErrorKind::MalformedInput, "chi subspace parts have mismatched shapes");
  CycMat<L> out(s.c0.rows(), s.c0.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      out(i, j) = Cyclo<L>(s.c0(i, j), s.c1(i, j));
  return out;
}

template <int L>
ChiSubspaceData cyc_to_chi(const CycMat<L>& m) {
  ChiSubspaceData out;
  out.c0.resize(m.rows(), m.cols());
  out.c1.resize(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out.c0(i, j) = m(i, j).a;
      out.c1(i, j) = m(i, j).b;
    }
  return out;
}

template <int L>
std::string cyc_key(const CycMat<L>& m) {
  std::ostringstream os;
  os << m.rows() << ":";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << m(i, j).a.get_str() << "," << m(i, j).b.get_str() << ";";
  return os.str();
}

template <int L>
bool rows_contain(const DenseMat<Cyclo<L>>& outer, const DenseMat<Cyclo<L>>& inner) {
  if (inner.rows() == 0) return true;
  DenseMat<Cyclo<L>> stacked(outer.rows() + inner.rows(), outer.cols());
  stacked.topRows(outer.rows()) = outer;
  stacked.bottomRows(inner.rows()) = inner;
  return rank_of(std::move(stacked)) == outer.rows();
}

template <int L>
DenseMat<Cyclo<L>> rows_intersect(const DenseMat<Cyclo<L>>& a, const DenseMat<Cyclo<L>>& b) {
  if (a.rows() == 0 || b.rows() == 0) return DenseMat<Cyclo<L>>(0, a.cols());
  DenseMat<Cyclo<L>> sys(a.cols(), a.rows() + b.rows());
  sys.leftCols(a.rows()) = a.transpose();
  sys.rightCols(b.rows()) = -b.transpose();
  DenseMat<Cyclo<L>> coeffs = kernel(sys);
  return row_space(DenseMat<Cyclo<L>>(coeffs.leftCols(a.rows()) * a));
}

template <int L>
BallPoset ball_strata_impl(const EigenspaceData& chi,
                           const std::vector<ChiSubspaceData>& hyperplanes,
                           const std::vector<ChiSubspaceData>& lines) {
  const Eigen::Index m = chi.chi_dim;
  CycMat<L> herm(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      herm(i, j) = Cyclo<L>(chi.herm_c0(i, j), chi.herm_c1(i, j));
  auto herm_sig = [&](const CycMat<L>& rows) {
    CycMat<L> sub = rows * herm * conj_elementwise<L>(rows).transpose();
    Signature s = hermitian_inertia<L>(sub);
    return s;
  };

  std::vector<CycMat<L>> members;
  for (const auto& h : hyperplanes) {
    CycMat<L> rows = row_space(chi_to_cyc<L>(h));
    if (rows.cols() != m || rows.rows() != m - 1)
      fail(ErrorKind::MalformedInput, "chi hyperplane must have codimension one");
    Signature s = herm_sig(rows);
    if (!(s.positive == static_cast<int>(m) - 2 && s.negative == 1 && s.zero == 0))
      fail(ErrorKind::MalformedInput,
           "chi hyperplane must be of hyperbolic hermitian signature; got " + to_string(s));
    members.push_back(std::move(rows));
  }

  BallPoset poset;
  poset.nodes.push_back(BallNode{StratumTag::Interior,
                                 cyc_to_chi<L>(CycMat<L>(0, m)), -1, {0, 0}});
  // K'1: hyperbolic intersections of members.
  {
    std::vector<CycMat<L>> closure;
    std::set<std::string> seen;
    auto push = [&](const CycMat<L>& s) {
      if (s.rows() == m) return false;
      if (seen.insert(cyc_key<L>(s)).second) {
        closure.push_back(s);
        return true;
      }
      return false;
    };
    for (const auto& h : members) push(h);
    bool grew = true;
    while (grew) {
      grew = false;
      const size_t n0 = closure.size();
      for (size_t i = 0; i < n0; ++i)
        for (const auto& h : members) {
          CycMat<L> s = rows_intersect<L>(closure[i], h);
          if (s.rows() == 0) continue;
          if (push(s)) grew = true;
        }
    }
    std::sort(closure.begin(), closure.end(),
              [](const CycMat<L>& a, const CycMat<L>& b) {
                if (a.rows() != b.rows()) return a.rows() > b.rows();
                return cyc_key<L>(a) < cyc_key<L>(b);
              });
    int idx = 0;
    for (const auto& k : closure) {
      Signature s = herm_sig(k);
      if (s.positive == static_cast<int>(k.rows()) - 1 && s.negative == 1 && s.zero == 0)
        poset.nodes.push_back(
            BallNode{StratumTag::K1, cyc_to_chi<L>(k), idx++, {s.positive, s.negative}});
    }
  }
  // K'2: one node per isotropic chi line with rational closure.
  int line_idx = 0;
  for (const auto& ln : lines) {
    CycMat<L> rows = row_space(chi_to_cyc<L>(ln));
    if (rows.rows() != 1 || rows.cols() != m)
      fail(ErrorKind::MalformedInput, "chi line must be one-dimensional");
    CycVec<L> v = rows.row(0).transpose();
    CycVec<L> pairings = herm * conj_elementwise<L>(CycMat<L>(rows)).transpose();
    Cyclo<L> vv = (rows * pairings)(0, 0);
    if (!vv.is_zero())
      fail(ErrorKind::MalformedInput, "chi line is not isotropic for the hermitian form");
    // J = J' + conj(J') must be a rational plane in the ambient space.
    {
      CycMat<L> basis(chi.basis_c0.rows(), chi.basis_c0.cols());
      for (Eigen::Index i = 0; i < basis.rows(); ++i)
        for (Eigen::Index j = 0; j < basis.cols(); ++j)
          basis(i, j) = Cyclo<L>(chi.basis_c0(i, j), chi.basis_c1(i, j));
      CycVec<L> amb = basis.transpose() * v;
      RatMat xy(2, basis.cols());
      for (Eigen::Index j = 0; j < basis.cols(); ++j) {
        xy(0, j) = amb(j).a;
        xy(1, j) = amb(j).b;
      }
      if (rank_of(std::move(xy)) != 2)
        fail(ErrorKind::MalformedInput,
             "J' + conj(J') is not a rational isotropic plane");
    }
    // hermitian-orthogonal complement of the line, cut by members through it
    CycMat<L> functional(1, m);
    for (Eigen::Index i = 0; i < m; ++i) functional(0, i) = pairings(i);
    CycMat<L> k = kernel(functional);
    for (const auto& h : members)
      if (rows_contain<L>(h, rows)) k = rows_intersect<L>(k, h);
    Signature s = herm_sig(k);
    poset.nodes.push_back(
        BallNode{StratumTag::K2, cyc_to_chi<L>(k), line_idx++, {s.positive, s.negative}});
  }
  // order by strict inclusion of the chi subspaces
  auto less = [&](const BallNode& a, const BallNode& b) {
    CycMat<L> ka = chi_to_cyc<L>(a.basis), kb = chi_to_cyc<L>(b.basis);
    if (ka.rows() >= kb.rows()) return false;
    return rows_contain<L>(kb, ka);
  };
  const int n = static_cast<int>(poset.nodes.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !less(poset.nodes[a], poset.nodes[b])) continue;
      bool covered = true;
      for (int c = 0; c < n && covered; ++c)
        if (c != a && c != b && less(poset.nodes[a], poset.nodes[c]) &&
            less(poset.nodes[c], poset.nodes[b]))
          covered = false;
      if (covered) poset.cover_relations.emplace_back(a, b);
    }
  return poset;
}

}  // namespace

BallPoset ball_strata(const EigenspaceData& chi,
                      const std::vector<ChiSubspaceData>& hyperplanes,
                      const std::vector<ChiSubspaceData>& lines) {
  switch (chi.l) {
    case 3: return ball_strata_impl<3>(chi, hyperplanes, lines);
    case 4: return ball_strata_impl<4>(chi, hyperplanes, lines);
    case 6: return ball_strata_impl<6>(chi, hyperplanes, lines);
    default:
      fail(ErrorKind::UnsupportedInput, "ball stratification needs l in {3,4,6}");
  }
}

IsotropicEnumeration enumerate_isotropic(const SpacePtr& space, int height_bound) {
  if (height_bound < 1) fail(ErrorKind::MalformedInput, "height bound must be >= 1");
  const Eigen::Index d = space->dim();
  double total = std::pow(2.0 * height_bound + 1.0, static_cast<double>(d));
  if (total > 2e6)
    fail(ErrorKind::UnsupportedInput, "isotropic enumeration box is too large");

  IsotropicEnumeration out;
  std::vector<RatVec> generators;
  std::vector<long> coords(static_cast<size_t>(d), -height_bound);
  bool done = false;
  while (!done) {
    bool nonzero = false, leading_positive = false;
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) {
        nonzero = true;
        leading_positive = coords[i] > 0;
        break;
      }
    if (nonzero && leading_positive) {
      Integer g(0);
      for (long c : coords) g = gcd(g, Integer(std::abs(c)));
      if (g == 1) {
        RatVec v(d);
        for (Eigen::Index i = 0; i < d; ++i) v(i) = Rational(coords[static_cast<size_t>(i)]);
        if (sign_of(form_product(*space, v, v)) == 0) generators.push_back(std::move(v));
      }
    }
    done = true;
    for (size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] < height_bound) {
        ++coords[i];
        std::fill(coords.begin(), coords.begin() + static_cast<long>(i), -height_bound);
        done = false;
        break;
      }
    }
  }
  for (const auto& v : generators) out.lines.emplace_back(space, RatMat(v.transpose()));
  std::set<std::string> plane_seen;
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j) {
      if (sign_of(form_product(*space, generators[i], generators[j])) != 0) continue;
      RatMat rows(2, d);
      rows.row(0) = generators[i].transpose();
      rows.row(1) = generators[j].transpose();
      Subspace plane(space, std::move(rows));
      if (plane.dim() != 2) continue;
      if (plane_seen.insert(basis_key(plane.basis())).second)
        out.planes.push_back(std::move(plane));
    }
  return out;
}

}  // namespace typeiv
