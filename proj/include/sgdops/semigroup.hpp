#ifndef SGDOPS_SEMIGROUP_HPP
#define SGDOPS_SEMIGROUP_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgdops/cone.hpp"

namespace sgdops {

// Finite coordinate box window.
struct Box {
  Vec lo, hi;

  static Box cube(int dim, long long radius);
  bool contains(const Vec& p) const;
  Box scaled(long long num, long long den = 1) const;
  long long min_radius() const;
  // Visit every lattice point of the box.
  template <typename F>
  void for_each(F&& f) const {
    Vec p = lo;
    const int k = static_cast<int>(lo.size());
    while (true) {
      f(const_cast<const Vec&>(p));
      int i = 0;
      while (i < k) {
        if (++p[i] <= hi[i]) break;
        p[i] = lo[i];
        ++i;
      }
      if (i == k) return;
    }
  }
};

// The affine semigroup NA generated by the columns of A, with certified hole
// structure. Built once, then immutable; queries are read-only.
class SemigroupData {
 public:
  explicit SemigroupData(ConeData cone);

  const ConeData& cone() const { return cone_; }
  int dim() const { return cone_.dim(); }
  const std::vector<Vec>& generators() const { return gens_; }

  bool member(const Vec& m) const;
  bool saturation_member(const Vec& m) const { return cone_.in_cone(m); }
  bool interior_member(const Vec& m) const;

  bool is_normal() const { return normal_; }
  bool is_scored() const { return scored_; }

  // Full facet-parallel sections {h_i = c} made entirely of holes.
  const std::vector<std::pair<int, long long>>& hole_sections() const { return hole_sections_; }
  // Holes not lying on a full hole section.
  const std::vector<Vec>& isolated_holes() const { return isolated_holes_; }
  // Certified bound: every isolated hole p has |p|_inf <= this radius.
  long long isolated_irregularity_radius() const { return iso_radius_; }
  long long probe_scale() const { return probe_T_; }

  // Saturation points of the window that are not members.
  std::vector<Vec> holes(const Box& window) const;

  struct Classification {
    bool normal;
    bool scored;
  };
  // Error WindowTooSmall when the window does not cover the certified probe.
  Classification classify(const Box& window) const;

  // Box covering all lattice directions of the cone out to parameter T.
  Box ray_window(long long T) const;

 private:
  ConeData cone_;
  std::vector<Vec> gens_;
  Vec wfun_;  // strictly positive integer functional on the generators
  long long probe_T_ = 0;
  bool normal_ = true, scored_ = true;
  std::vector<std::pair<int, long long>> hole_sections_;
  std::vector<Vec> isolated_holes_;
  long long iso_radius_ = 0;
  mutable std::unordered_map<Vec, bool, VecHash> memo_;

  struct HoleStructure {
    std::vector<std::pair<int, long long>> sections;
    std::vector<Vec> isolated;
    bool operator==(const HoleStructure& o) const {
      return sections == o.sections && isolated == o.isolated;
    }
  };
  HoleStructure analyze_holes(long long T) const;
};

// Radical monomial ideal J = intersection of face primes P_tau. Faces are
// reduced to an antichain; exponents are the members avoiding every face.
class RadicalMonomialIdeal {
 public:
  RadicalMonomialIdeal(const SemigroupData* sg, std::vector<Face> faces,
                       std::string name = "");

  const SemigroupData& semigroup() const { return *sg_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::string& name() const { return name_; }

  bool member(const Vec& m) const;
  bool face_contains(const Face& tau, const Vec& m) const;

  // Minimal monomial generators, computed once on a certified window.
  const std::vector<Vec>& minimal_generators() const;

 private:
  const SemigroupData* sg_;
  std::vector<Face> faces_;
  std::string name_;
  mutable std::shared_ptr<std::vector<Vec>> min_gens_;
};

// Exponent predicate of the face prime P_tau; errors on the full cone.
RadicalMonomialIdeal face_prime(const SemigroupData& sg, const Face& tau);

// J = intersection of all facet primes; exponents are the cone interior.
RadicalMonomialIdeal interior_ideal(const SemigroupData& sg);

// Unique minimal monomial generating set of J under NA-translation,
// sorted lexicographically. Errors WindowTooSmall when not certifiable.
std::vector<Vec> minimal_monomial_generators(const RadicalMonomialIdeal& j, const Box& window);
std::vector<Vec> minimal_monomial_generators(const RadicalMonomialIdeal& j);

bool omega_principal(const SemigroupData& sg);

}  // namespace sgdops

#endif
