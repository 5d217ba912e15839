#include "sgdops/cone.hpp"

#include <algorithm>

namespace sgdops {

std::string ChamberSignature::str() const {
  std::string s;
  for (Sign x : signs) s += (x == Sign::NEG ? '-' : x == Sign::ZERO ? '0' : '+');
  return s;
}

namespace {

// Enumerate all subsets of {0..n-1} of the given size.
void subsets_of_size(int n, int size, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

Vec primitive(Vec v) {
  long long g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace

ConeData::ConeData(IntMatrix a) : a_(std::move(a)) {
  const int k = a_.rows();
  const std::vector<Vec> cols = a_.columns();

  if (rank(cols) < k)
    throw ComputationError("NotFullDimensional: cone does not span the ambient space");
  LatticePointedness lp = check_lattice_and_pointed(a_);
  if (!lp.pointed) throw ComputationError("cone is not pointed");
  if (!lp.zza_full) throw ComputationError("columns do not generate the full lattice Z^k");

  // Candidate facet normals from (k-1)-subsets of columns.
  std::vector<std::vector<int>> subs;
  subsets_of_size(a_.cols(), k - 1, subs);
  std::vector<Vec> normals;
  for (const auto& s : subs) {
    std::vector<Vec> span;
    for (int j : s) span.push_back(cols[j]);
    if (rank(span) != k - 1) continue;
    std::vector<Vec> ker = integer_kernel_basis(span, k);
    if (ker.size() != 1) continue;
    Vec w = primitive(ker[0]);
    bool nonneg = true, nonpos = true;
    for (const Vec& c : cols) {
      long long v = dot(w, c);
      if (v < 0) nonneg = false;
      if (v > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) continue;
    if (!nonneg) w = -w;
    std::vector<Vec> tight;
    for (const Vec& c : cols)
      if (dot(w, c) == 0) tight.push_back(c);
    if (rank(tight) != k - 1) continue;
    if (std::find(normals.begin(), normals.end(), w) == normals.end()) normals.push_back(w);
  }
  std::sort(normals.begin(), normals.end());
  for (size_t i = 0; i < normals.size(); ++i)
    facets_.push_back(SupportFunction{normals[i], static_cast<int>(i)});

  // Face lattice from facet subsets, canonically completed.
  const int m = num_facets();
  std::vector<Face> found;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<Vec> tight_cols;
    for (const Vec& c : cols) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i)
        if (mask & (1 << i)) ok = facets_[i].eval(c) == 0;
      if (ok) tight_cols.push_back(c);
    }
    Face f;
    if (tight_cols.empty()) {
      for (int i = 0; i < m; ++i) f.facet_set.insert(i);
      f.dim = 0;
    } else {
      for (int i = 0; i < m; ++i) {
        bool all = true;
        for (const Vec& c : tight_cols)
          if (facets_[i].eval(c) != 0) all = false;
        if (all) f.facet_set.insert(i);
      }
      f.dim = rank(tight_cols);
    }
    if (std::find(found.begin(), found.end(), f) == found.end()) found.push_back(f);
  }
  std::sort(found.begin(), found.end());
  faces_ = std::move(found);

  for (const Face& f : faces_) {
    if (f.dim != 1) continue;
    for (const Vec& c : cols) {
      bool on = true;
      for (int i : f.facet_set)
        if (facets_[i].eval(c) != 0) on = false;
      if (on) {
        Vec r = primitive(c);
        if (std::find(rays_.begin(), rays_.end(), r) == rays_.end()) rays_.push_back(r);
        break;
      }
    }
  }
  std::sort(rays_.begin(), rays_.end());
}

ChamberSignature ConeData::chamber_signature(const Vec& d) const {
  ChamberSignature sig;
  for (const auto& h : facets_) {
    long long v = h.eval(d);
    sig.signs.push_back(v < 0 ? Sign::NEG : v == 0 ? Sign::ZERO : Sign::POS);
  }
  return sig;
}

bool ConeData::in_cone(const Vec& p) const {
  for (const auto& h : facets_)
    if (h.eval(p) < 0) return false;
  return true;
}

int ConeData::facet_index_of(const Vec& normal) const {
  for (const auto& h : facets_)
    if (h.normal == normal) return h.facet_index;
  return -1;
}

Face ConeData::face_from_facets(const std::set<int>& facets) const {
  for (int i : facets)
    if (i < 0 || i >= num_facets()) throw InputError("facet index out of range");
  std::vector<Vec> tight_cols;
  for (const Vec& c : a_.columns()) {
    bool ok = true;
    for (int i : facets)
      if (facets_[i].eval(c) != 0) ok = false;
    if (ok) tight_cols.push_back(c);
  }
  Face f;
  if (tight_cols.empty()) {
    for (int i = 0; i < num_facets(); ++i) f.facet_set.insert(i);
    f.dim = 0;
  } else {
    for (int i = 0; i < num_facets(); ++i) {
      bool all = true;
      for (const Vec& c : tight_cols)
        if (facets_[i].eval(c) != 0) all = false;
      if (all) f.facet_set.insert(i);
    }
    f.dim = rank(tight_cols);
  }
  return f;
}

}  // namespace sgdops
