#include "sgdops/semigroup.hpp"

#include <algorithm>

namespace sgdops {

Box Box::cube(int dim, long long radius) {
  Box b;
  b.lo.assign(dim, -radius);
  b.hi.assign(dim, radius);
  return b;
}

bool Box::contains(const Vec& p) const {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

Box Box::scaled(long long num, long long den) const {
  Box b;
  b.lo.resize(lo.size());
  b.hi.resize(hi.size());
  for (size_t i = 0; i < lo.size(); ++i) {
    b.lo[i] = lo[i] * num / den;
    b.hi[i] = hi[i] * num / den;
  }
  return b;
}

long long Box::min_radius() const {
  long long r = hi[0] - lo[0];
  for (size_t i = 0; i < lo.size(); ++i) r = std::min(r, hi[i] - lo[i]);
  return r / 2;
}

SemigroupData::SemigroupData(ConeData cone) : cone_(std::move(cone)) {
  gens_ = cone_.matrix().columns();

  // Sum of all facet normals is strictly positive on every nonzero cone
  // point of a pointed cone; it drives the membership recursion downhill.
  wfun_.assign(dim(), 0);
  for (const auto& h : cone_.facets())
    for (int i = 0; i < dim(); ++i) wfun_[i] += h.normal[i];
  for (const Vec& g : gens_)
    if (dot(wfun_, g) <= 0) throw ComputationError("positive functional failed on a generator");

  // Membership must run the exact search until the hole analysis is done.
  normal_ = false;
  scored_ = false;

  // Certify the hole structure: it must be stable under doubling the probe.
  long long T = 4;
  HoleStructure cur = analyze_holes(T);
  while (true) {
    HoleStructure next = analyze_holes(2 * T);
    if (cur == next) break;
    T *= 2;
    cur = std::move(next);
    if (T > 32)
      throw ComputationError(
          "cannot certify semigroup hole structure within the probe doubling limit");
  }
  probe_T_ = T;
  hole_sections_ = cur.sections;
  isolated_holes_ = cur.isolated;
  normal_ = hole_sections_.empty() && isolated_holes_.empty();
  scored_ = isolated_holes_.empty();
  for (const Vec& p : isolated_holes_) iso_radius_ = std::max(iso_radius_, linf_norm(p));
}

bool SemigroupData::member(const Vec& m) const {
  for (const auto& h : cone_.facets())
    if (h.eval(m) < 0) return false;
  if (is_zero(m)) return true;
  if (normal_) return true;
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  memo_.emplace(m, false);  // cycle guard; w-descent makes real cycles impossible
  bool ok = false;
  for (const Vec& g : gens_) {
    if (member(m - g)) {
      ok = true;
      break;
    }
  }
  memo_[m] = ok;
  return ok;
}

bool SemigroupData::interior_member(const Vec& m) const {
  if (!member(m)) return false;
  for (const auto& h : cone_.facets())
    if (h.eval(m) == 0) return false;
  return true;
}

Box SemigroupData::ray_window(long long T) const {
  Box b;
  b.lo.assign(dim(), 0);
  b.hi.assign(dim(), 0);
  for (int i = 0; i < dim(); ++i) {
    long long mx = 1, mn = 0;
    for (const Vec& r : cone_.extreme_rays()) {
      mx = std::max(mx, r[i]);
      mn = std::min(mn, r[i]);
    }
    b.hi[i] = T * mx;
    b.lo[i] = T * mn;
  }
  return b;
}

SemigroupData::HoleStructure SemigroupData::analyze_holes(long long T) const {
  Box box = ray_window(T);
  std::vector<Vec> sat, holes;
  box.for_each([&](const Vec& p) {
    if (!saturation_member(p)) return;
    sat.push_back(p);
    if (!member(p)) holes.push_back(p);
  });

  HoleStructure hs;
  const int m = cone_.num_facets();
  for (int i = 0; i < m; ++i) {
    std::vector<long long> values;
    for (const Vec& h : holes) values.push_back(cone_.facet(i).eval(h));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (long long c : values) {
      bool all_holes = true;
      size_t count = 0;
      for (const Vec& p : sat)
        if (cone_.facet(i).eval(p) == c) {
          ++count;
          if (member(p)) all_holes = false;
        }
      if (count > 0 && all_holes) hs.sections.emplace_back(i, c);
    }
  }
  std::sort(hs.sections.begin(), hs.sections.end());
  for (const Vec& p : holes) {
    bool covered = false;
    for (const auto& [i, c] : hs.sections)
      if (cone_.facet(i).eval(p) == c) covered = true;
    if (!covered) hs.isolated.push_back(p);
  }
  std::sort(hs.isolated.begin(), hs.isolated.end());
  return hs;
}

std::vector<Vec> SemigroupData::holes(const Box& window) const {
  std::vector<Vec> out;
  window.for_each([&](const Vec& p) {
    if (saturation_member(p) && !member(p)) out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

SemigroupData::Classification SemigroupData::classify(const Box& window) const {
  Box probe = ray_window(probe_T_);
  for (int i = 0; i < dim(); ++i)
    if (window.lo[i] > probe.lo[i] || window.hi[i] < probe.hi[i])
      throw ComputationError("WindowTooSmall: window does not cover the certified probe region");
  std::vector<Vec> hs = holes(window);
  bool normal = hs.empty();
  bool scored = true;
  for (const Vec& p : hs) {
    bool covered = false;
    for (const auto& [i, c] : hole_sections_)
      if (cone_.facet(i).eval(p) == c) covered = true;
    if (!covered) scored = false;
  }
  return Classification{normal, scored};
}

RadicalMonomialIdeal::RadicalMonomialIdeal(const SemigroupData* sg, std::vector<Face> faces,
                                           std::string name)
    : sg_(sg), name_(std::move(name)) {
  if (faces.empty()) throw InputError("radical monomial ideal needs at least one face");
  const int k = sg_->dim();
  for (const Face& f : faces)
    if (f.dim >= k) throw InputError("FullConeFace: the full cone does not define a prime");
  // Antichain reduction: drop faces contained in another listed face.
  std::vector<Face> keep;
  for (size_t i = 0; i < faces.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < faces.size() && !redundant; ++j) {
      if (i == j) continue;
      // tau_i inside tau_j iff tau_i's facet set contains tau_j's
      bool inside = std::includes(faces[i].facet_set.begin(), faces[i].facet_set.end(),
                                  faces[j].facet_set.begin(), faces[j].facet_set.end()) &&
                    faces[i].facet_set != faces[j].facet_set;
      if (inside) redundant = true;
      if (faces[i].facet_set == faces[j].facet_set && j < i) redundant = true;
    }
    if (!redundant) keep.push_back(faces[i]);
  }
  std::sort(keep.begin(), keep.end());
  faces_ = std::move(keep);
}

bool RadicalMonomialIdeal::face_contains(const Face& tau, const Vec& m) const {
  if (!sg_->member(m)) return false;
  for (int i : tau.facet_set)
    if (sg_->cone().facet(i).eval(m) != 0) return false;
  return true;
}

bool RadicalMonomialIdeal::member(const Vec& m) const {
  if (!sg_->member(m)) return false;
  for (const Face& tau : faces_)
    if (face_contains(tau, m)) return false;
  return true;
}

const std::vector<Vec>& RadicalMonomialIdeal::minimal_generators() const {
  if (!min_gens_)
    min_gens_ = std::make_shared<std::vector<Vec>>(minimal_monomial_generators(*this));
  return *min_gens_;
}

RadicalMonomialIdeal face_prime(const SemigroupData& sg, const Face& tau) {
  if (tau.dim >= sg.dim()) throw InputError("FullConeFace: P_tau undefined for the full cone");
  return RadicalMonomialIdeal(&sg, {tau}, "P_tau");
}

RadicalMonomialIdeal interior_ideal(const SemigroupData& sg) {
  std::vector<Face> faces;
  for (const Face& f : sg.cone().face_lattice())
    if (f.dim == sg.dim() - 1) faces.push_back(f);
  return RadicalMonomialIdeal(&sg, std::move(faces), "interior");
}

std::vector<Vec> minimal_monomial_generators(const RadicalMonomialIdeal& j, const Box& window) {
  const SemigroupData& sg = j.semigroup();
  std::vector<Vec> minimal;
  window.for_each([&](const Vec& m) {
    if (!j.member(m)) return;
    for (const Vec& g : sg.generators())
      if (j.member(m - g)) return;
    minimal.push_back(m);
  });
  std::sort(minimal.begin(), minimal.end());
  // A minimal generator in the outer half of the window leaves the
  // generating set uncertified.
  for (const Vec& m : minimal)
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > window.lo[i] + (window.hi[i] - window.lo[i]) / 2)
        throw ComputationError("WindowTooSmall: minimal generator near the window boundary");
  return minimal;
}

std::vector<Vec> minimal_monomial_generators(const RadicalMonomialIdeal& j) {
  const SemigroupData& sg = j.semigroup();
  long long T = std::max<long long>(4, 2 * sg.probe_scale());
  return minimal_monomial_generators(j, sg.ray_window(2 * T));
}

bool omega_principal(const SemigroupData& sg) {
  RadicalMonomialIdeal w = interior_ideal(sg);
  return minimal_monomial_generators(w).size() == 1;
}

}  // namespace sgdops
