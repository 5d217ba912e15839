#ifndef SGDOPS_CONE_HPP
#define SGDOPS_CONE_HPP

#include <set>
#include <string>
#include <vector>

#include "sgdops/intmat.hpp"
#include "sgdops/numeric.hpp"

namespace sgdops {

// Primitive integral support function of a facet: nonnegative on the cone,
// zero on the facet, surjective onto Z.
struct SupportFunction {
  Vec normal;
  int facet_index = -1;  // position in the deterministic facet order

  long long eval(const Vec& p) const { return dot(normal, p); }
};

// A face of the cone, identified by the set of all facets containing it.
// The full cone is the face with empty facet_set.
struct Face {
  std::set<int> facet_set;
  int dim = -1;

  bool operator==(const Face& o) const { return facet_set == o.facet_set; }
  bool operator<(const Face& o) const {
    if (facet_set.size() != o.facet_set.size()) return facet_set.size() < o.facet_set.size();
    return facet_set < o.facet_set;
  }
};

enum class Sign { NEG, ZERO, POS };

struct ChamberSignature {
  std::vector<Sign> signs;  // one per facet, sign of h_i(d)

  bool operator==(const ChamberSignature& o) const { return signs == o.signs; }
  std::string str() const;
};

// Facets, faces and support functions of the pointed rational cone spanned by
// the columns of A. Requires ZA = Z^k and a pointed, full-dimensional cone.
class ConeData {
 public:
  explicit ConeData(IntMatrix a);

  const IntMatrix& matrix() const { return a_; }
  int dim() const { return a_.rows(); }
  int num_facets() const { return static_cast<int>(facets_.size()); }
  const std::vector<SupportFunction>& facets() const { return facets_; }
  const SupportFunction& facet(int i) const { return facets_[i]; }
  const std::vector<Face>& face_lattice() const { return faces_; }
  const std::vector<Vec>& extreme_rays() const { return rays_; }

  ChamberSignature chamber_signature(const Vec& d) const;

  // True iff all support functions are nonnegative at p (saturation test).
  bool in_cone(const Vec& p) const;

  // Index of the facet with the given primitive normal, -1 when absent.
  int facet_index_of(const Vec& normal) const;

  // The face with exactly this facet set, after canonical completion.
  Face face_from_facets(const std::set<int>& facets) const;

 private:
  IntMatrix a_;
  std::vector<SupportFunction> facets_;
  std::vector<Face> faces_;
  std::vector<Vec> rays_;  // primitive generators of the 1-dimensional faces
};

}  // namespace sgdops

#endif
