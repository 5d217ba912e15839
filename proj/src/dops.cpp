#include "sgdops/dops.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace sgdops {

std::string piece_kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::D: return "D";
    case PieceKind::IDEALIZER: return "II";
    case PieceKind::DRJ: return "DRJ";
    case PieceKind::JD: return "JD";
  }
  return "?";
}

namespace {

bool in_set(const SemigroupData& sg, const RadicalMonomialIdeal* j, SetKind kind, const Vec& m) {
  if (kind == SetKind::SEMIGROUP) return sg.member(m);
  return j->member(m);
}

}  // namespace

bool in_vanishing_set(const SemigroupData& sg, const RadicalMonomialIdeal* j,
                      const VanishingSpec& spec, const Vec& m) {
  // membership in D(R_A) itself
  if (sg.member(m) && !sg.member(m + spec.d)) return true;
  return in_set(sg, j, spec.in_set, m) && !in_set(sg, j, spec.out_set, m + spec.d);
}

std::vector<Vec> required_vanishing(const SemigroupData& sg, const RadicalMonomialIdeal* j,
                                    const VanishingSpec& spec, const Box& window) {
  if ((spec.in_set == SetKind::IDEAL_J || spec.out_set == SetKind::IDEAL_J) && !j)
    throw ComputationError("vanishing spec references an ideal but none was supplied");
  std::vector<Vec> out;
  window.for_each([&](const Vec& m) {
    if (!sg.saturation_member(m)) return;
    if (in_vanishing_set(sg, j, spec, m)) out.push_back(m);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// All index subsets of {0..m-1} of size 1..maxsize with independent normals.
std::vector<std::vector<int>> facet_subsets(const ConeData& cone, int maxsize) {
  std::vector<std::vector<int>> out;
  const int m = cone.num_facets();
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    if (static_cast<int>(idx.size()) > maxsize) continue;
    std::vector<Vec> normals;
    for (int i : idx) normals.push_back(cone.facet(i).normal);
    if (rank(normals) != static_cast<int>(idx.size())) continue;
    out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

int affine_rank(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  std::vector<Vec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return rank(diffs);
}

}  // namespace

std::vector<Stratum> stratify(const std::vector<Vec>& points, const SemigroupData& sg,
                              const RadicalMonomialIdeal* j, const VanishingSpec& spec,
                              long long probe_depth) {
  std::vector<Stratum> strata;
  if (points.empty()) return strata;
  const ConeData& cone = sg.cone();
  const int k = cone.dim();

  struct FlatKey {
    std::vector<int> facets;
    std::vector<long long> values;
    bool operator<(const FlatKey& o) const {
      if (facets != o.facets) return facets < o.facets;
      return values < o.values;
    }
  };

  std::map<FlatKey, std::vector<Vec>> candidates;
  std::vector<std::vector<int>> subsets = facet_subsets(cone, k - 1);
  for (const auto& idx : subsets) {
    std::map<std::vector<long long>, std::vector<Vec>> by_values;
    for (const Vec& p : points) {
      std::vector<long long> vals;
      for (int i : idx) vals.push_back(cone.facet(i).eval(p));
      by_values[vals].push_back(p);
    }
    for (auto& [vals, pts] : by_values) candidates[FlatKey{idx, vals}] = std::move(pts);
  }

  std::vector<Stratum> accepted;
  for (const auto& [key, pts] : candidates) {
    int dim = k - static_cast<int>(key.facets.size());
    if (dim < 1) continue;
    // The flat is parallel to the cone face cut out by the same facets; it
    // carries a genuine stratum iff the vanishing set persists arbitrarily
    // deep along that face. Beyond the certified transient region the
    // membership pattern is constant, so two probe depths decide exactly.
    std::set<int> fs(key.facets.begin(), key.facets.end());
    Face face = cone.face_from_facets(fs);
    if (face.dim != dim) continue;  // the flat meets the cone in a bounded set
    Vec deep(k, 0);
    for (const Vec& r : cone.extreme_rays()) {
      bool on_face = true;
      for (int i : face.facet_set)
        if (cone.facet(i).eval(r) != 0) on_face = false;
      if (on_face) deep = deep + r;
    }
    if (is_zero(deep)) continue;
    bool genuine = true;
    for (long long mult : {probe_depth, 2 * probe_depth}) {
      Vec q = pts.front();
      for (int i = 0; i < k; ++i) q[i] += mult * deep[i];
      if (!in_vanishing_set(sg, j, spec, q)) genuine = false;
    }
    if (!genuine) continue;

    Stratum s;
    s.dim = dim;
    s.base = pts.front();
    std::vector<Vec> normals;
    for (int i : key.facets) normals.push_back(cone.facet(i).normal);
    s.dirs = integer_kernel_basis(normals, k);
    s.forms = stratum_linear_forms(s.base, s.dirs);
    for (size_t i = 0; i < key.facets.size(); ++i)
      s.constraints.emplace_back(key.facets[i], key.values[i]);
    s.point_count = pts.size();
    accepted.push_back(std::move(s));
  }

  // Preference: maximal flats first, then point count, then facet indices.
  std::sort(accepted.begin(), accepted.end(), [](const Stratum& a, const Stratum& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    if (a.point_count != b.point_count) return a.point_count > b.point_count;
    return a.constraints < b.constraints;
  });

  std::unordered_set<Vec, VecHash> covered;
  auto on_stratum = [&](const Stratum& s, const Vec& p) {
    for (const LinearForm& f : s.forms)
      if (f.eval(p) != 0) return false;
    return true;
  };
  for (Stratum& s : accepted) {
    bool adds = false;
    for (const Vec& p : points)
      if (on_stratum(s, p) && !covered.count(p)) {
        adds = true;
        break;
      }
    if (!adds) continue;
    for (const Vec& p : points)
      if (on_stratum(s, p)) covered.insert(p);
    strata.push_back(std::move(s));
  }

  for (const Vec& p : points) {
    if (covered.count(p)) continue;
    Stratum s;
    s.dim = 0;
    s.base = p;
    s.forms = stratum_linear_forms(p, {});
    s.point_count = 1;
    strata.push_back(std::move(s));
  }
  return strata;
}

ThetaIdeal intersect_strata(const std::vector<Stratum>& strata, int nvars) {
  if (strata.empty()) return ThetaIdeal::unit(nvars);

  // Hyperplane strata are pairwise distinct irreducible principal ideals:
  // their intersection is the product of the forms.
  std::vector<LinearForm> content;
  std::vector<const Stratum*> deeper;
  for (const Stratum& s : strata) {
    if (s.forms.size() == 1)
      content.push_back(s.forms.front());
    else
      deeper.push_back(&s);
  }
  std::sort(content.begin(), content.end());

  // Cofactor ideal, initially <1>.
  std::vector<FactoredGenerator> cofactors;
  cofactors.push_back(FactoredGenerator{});
  bool factored_ok = true;
  ThetaIdeal general(nvars);  // used once the factored shape is lost

  auto form_vanishes_on = [&](const LinearForm& f, const Stratum& s) {
    if (f.eval(s.base) != 0) return false;
    for (const Vec& dir : s.dirs)
      if (dot(f.coeffs, dir) != 0) return false;
    return true;
  };

  for (const Stratum* sp : deeper) {
    const Stratum& s = *sp;
    bool absorbed = false;
    for (const LinearForm& f : content)
      if (form_vanishes_on(f, s)) {
        absorbed = true;  // the content already vanishes on this flat
        break;
      }
    if (absorbed) continue;

    if (factored_ok && cofactors.size() == 1 && cofactors.front().factors.empty()) {
      // principal so far: <C> cap Q = C * Q for a prime flat ideal Q
      // not containing C
      cofactors.clear();
      for (const LinearForm& f : s.forms) {
        FactoredGenerator g;
        g.push(f);
        g.canonicalize();
        cofactors.push_back(std::move(g));
      }
      continue;
    }

    // Rare general case: intersect the cofactor ideal with the flat ideal by
    // elimination (the common content stays factored out).
    ThetaIdeal u(nvars);
    if (factored_ok) {
      for (const FactoredGenerator& g : cofactors) u.add_generator(g);
    } else {
      u = general;
    }
    ThetaIdeal q(nvars);
    for (const LinearForm& f : s.forms) {
      FactoredGenerator g;
      g.push(f);
      q.add_generator(std::move(g));
    }
    general = ideal_intersection(u, q);
    factored_ok = false;
  }

  ThetaIdeal out(nvars);
  if (factored_ok) {
    for (const FactoredGenerator& cof : cofactors) {
      FactoredGenerator g;
      g.scalar = cof.scalar;
      g.factors = content;
      g.factors.insert(g.factors.end(), cof.factors.begin(), cof.factors.end());
      std::sort(g.factors.begin(), g.factors.end());
      out.add_generator(std::move(g));
    }
  } else {
    FactoredGenerator cpoly;
    cpoly.factors = content;
    ThetaPoly c = cpoly.expand(nvars);
    for (const IdealGen& g : general.generators()) out.add_generator(c * g.poly);
  }
  return out;
}

long long far_radius_for(const SemigroupData& sg, const Vec& d) {
  return sg.isolated_irregularity_radius() + linf_norm(d) + 2;
}

Box base_window_for(const SemigroupData& sg, const Vec& d) {
  long long maxh = 0;
  for (const auto& h : sg.cone().facets()) {
    long long v = h.eval(d);
    maxh = std::max(maxh, v < 0 ? -v : v);
  }
  long long T = far_radius_for(sg, d) + maxh + 6;
  return sg.ray_window(T);
}

GradedPiece graded_piece(const SemigroupData& sg, const RadicalMonomialIdeal* j,
                         const VanishingSpec& spec, PieceKind which) {
  const long long far = far_radius_for(sg, spec.d);
  const Box w1 = base_window_for(sg, spec.d);
  const Box w2 = w1.scaled(2);
  const Box w4 = w1.scaled(4);

  std::vector<Vec> p1 = required_vanishing(sg, j, spec, w1);
  std::vector<Vec> p2 = required_vanishing(sg, j, spec, w2);
  std::vector<Vec> p4 = required_vanishing(sg, j, spec, w4);

  std::vector<Stratum> sa = stratify(p1, p2, sg.cone(), far);
  std::vector<Stratum> sb = stratify(p2, p4, sg.cone(), far);

  auto flat_sets_match = [&]() {
    if (sa.size() != sb.size()) return false;
    for (size_t i = 0; i < sa.size(); ++i) {
      bool found = false;
      for (size_t jdx = 0; jdx < sb.size(); ++jdx)
        if (sa[i].same_flat(sb[jdx])) found = true;
      if (!found) return false;
    }
    return true;
  };
  if (!flat_sets_match())
    throw ComputationError("UnstableStratification: window doubling changed the strata at degree");

  GradedPiece piece;
  piece.degree = spec.d;
  piece.which = which;
  piece.strata = sa;
  piece.ideal = intersect_strata(sa, sg.dim());
  return piece;
}

GradedPiece graded_D_pipeline(const SemigroupData& sg, const Vec& d) {
  return graded_piece(sg, nullptr, VanishingSpec{SetKind::SEMIGROUP, SetKind::SEMIGROUP, d},
                      PieceKind::D);
}

GradedPiece graded_D(const SemigroupData& sg, const Vec& d) {
  if (!sg.is_normal()) return graded_D_pipeline(sg, d);
  // Normal rings have the closed-form generator prod_{h_i(d)<0} (h_i, h_i(-d)-1)!.
  FactoredGenerator gen;
  for (const auto& h : sg.cone().facets()) {
    if (h.eval(d) >= 0) continue;
    gen = gen.times(descending_factorial(LinearForm(h.normal, 0), h.eval(-d) - 1));
  }
  GradedPiece piece;
  piece.degree = d;
  piece.which = PieceKind::D;
  piece.ideal = ThetaIdeal::principal(sg.dim(), std::move(gen));
  return piece;
}

GradedPiece graded_idealizer(const RadicalMonomialIdeal& j, const Vec& d) {
  return graded_piece(j.semigroup(), &j, VanishingSpec{SetKind::IDEAL_J, SetKind::IDEAL_J, d},
                      PieceKind::IDEALIZER);
}

GradedPiece graded_DRJ(const RadicalMonomialIdeal& j, const Vec& d) {
  return graded_piece(j.semigroup(), &j, VanishingSpec{SetKind::SEMIGROUP, SetKind::IDEAL_J, d},
                      PieceKind::DRJ);
}

GradedPiece graded_JD(const RadicalMonomialIdeal& j, const Vec& d) {
  GradedPiece piece;
  piece.degree = d;
  piece.which = PieceKind::JD;
  piece.ideal = ThetaIdeal::zero(j.semigroup().dim());
  for (const Vec& g : j.minimal_generators())
    piece.ideal = ideal_sum(piece.ideal, graded_D(j.semigroup(), d - g).ideal);
  return piece;
}

QuotientPiece quotient_piece(const RadicalMonomialIdeal& j, const Vec& d) {
  QuotientPiece q;
  q.degree = d;
  q.numerator = graded_idealizer(j, d).ideal;
  q.denominator = graded_DRJ(j, d).ideal;
  if (!q.numerator.contains(q.denominator))
    throw ComputationError("ContainmentViolation: D(R,J) piece not inside the idealizer piece");
  q.is_zero = ideal_equal(q.numerator, q.denominator);
  return q;
}

CompareReport compare_JD_DRJ(const RadicalMonomialIdeal& j, const Box& window) {
  CompareReport report;
  std::vector<Vec> degrees;
  window.for_each([&](const Vec& d) { degrees.push_back(d); });
  std::sort(degrees.begin(), degrees.end());
  for (const Vec& d : degrees) {
    DegreeComparison c;
    c.degree = d;
    c.jd = graded_JD(j, d).ideal;
    c.drj = graded_DRJ(j, d).ideal;
    c.equal = ideal_equal(c.jd, c.drj);
    if (!c.equal) {
      report.all_equal = false;
      report.differing.push_back(d);
    }
    report.entries.push_back(std::move(c));
  }
  return report;
}

GorensteinProbe gorenstein_probe(const SemigroupData& sg, const Box& window) {
  GorensteinProbe probe{};
  RadicalMonomialIdeal omega = interior_ideal(sg);
  probe.omega_principal = omega.minimal_generators().size() == 1;
  probe.jd_equals_drj_on_window = compare_JD_DRJ(omega, window).all_equal;
  return probe;
}

}  // namespace sgdops
