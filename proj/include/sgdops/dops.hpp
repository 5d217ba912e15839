#ifndef SGDOPS_DOPS_HPP
#define SGDOPS_DOPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "sgdops/ideal.hpp"
#include "sgdops/semigroup.hpp"

namespace sgdops {

enum class SetKind { SEMIGROUP, IDEAL_J };
enum class PieceKind { D, IDEALIZER, DRJ, JD };

std::string piece_kind_name(PieceKind k);

// B(d) = {m in in_set : m + d not in out_set}. Operators of degree d must in
// addition lie in D(R_A), so the effective vanishing set always includes the
// obstruction set Omega(d) = {m in NA : m + d not in NA}.
struct VanishingSpec {
  SetKind in_set;
  SetKind out_set;
  Vec d;
};

// An affine stratum of the vanishing set: dim 0 is an isolated point,
// higher dimensions are facet-parallel flats. `forms` generate its ideal.
struct Stratum {
  int dim = 0;
  Vec base;
  std::vector<Vec> dirs;
  std::vector<LinearForm> forms;
  std::vector<std::pair<int, long long>> constraints;  // (facet index, h value)
  size_t point_count = 0;

  bool same_flat(const Stratum& o) const { return forms == o.forms; }
};

struct GradedPiece {
  Vec degree;
  PieceKind which;
  ThetaIdeal ideal;
  std::vector<Stratum> strata;
};

struct QuotientPiece {
  Vec degree;
  ThetaIdeal numerator;    // idealizer piece
  ThetaIdeal denominator;  // D(R_A, J) piece
  bool is_zero = false;
};

struct DegreeComparison {
  Vec degree;
  bool equal;
  ThetaIdeal jd;
  ThetaIdeal drj;
};

struct CompareReport {
  bool all_equal = true;
  std::vector<DegreeComparison> entries;  // every degree, sorted lexicographically
  std::vector<Vec> differing;
};

struct GorensteinProbe {
  bool omega_principal;
  bool jd_equals_drj_on_window;
};

// --- vanishing-set machinery ------------------------------------------------

std::vector<Vec> required_vanishing(const SemigroupData& sg, const RadicalMonomialIdeal* j,
                                    const VanishingSpec& spec, const Box& window);

// Pointwise test m in B(d); usable at arbitrary lattice points.
bool in_vanishing_set(const SemigroupData& sg, const RadicalMonomialIdeal* j,
                      const VanishingSpec& spec, const Vec& m);

// Cover the sampled points by facet-parallel flats and isolated points. A
// flat is genuine iff the vanishing set stays nonempty arbitrarily deep
// along the parallel cone face (deep membership is eventually constant for
// certified hole structures, so two deep probes decide it exactly).
std::vector<Stratum> stratify(const std::vector<Vec>& points, const SemigroupData& sg,
                              const RadicalMonomialIdeal* j, const VanishingSpec& spec,
                              long long probe_depth);

// Intersection of the stratum vanishing ideals, maximal flats first.
ThetaIdeal intersect_strata(const std::vector<Stratum>& strata, int nvars);

// --- graded pieces ----------------------------------------------------------

GradedPiece graded_piece(const SemigroupData& sg, const RadicalMonomialIdeal* j,
                         const VanishingSpec& spec, PieceKind which);

// D(R_A)_d. Normal rings use the closed-form product of descending
// factorials; otherwise the vanishing pipeline.
GradedPiece graded_D(const SemigroupData& sg, const Vec& d);
GradedPiece graded_D_pipeline(const SemigroupData& sg, const Vec& d);

GradedPiece graded_idealizer(const RadicalMonomialIdeal& j, const Vec& d);
GradedPiece graded_DRJ(const RadicalMonomialIdeal& j, const Vec& d);

// JD(R_A)_d = sum over minimal monomial generators g of J of D(R_A)_{d-g}.
GradedPiece graded_JD(const RadicalMonomialIdeal& j, const Vec& d);

QuotientPiece quotient_piece(const RadicalMonomialIdeal& j, const Vec& d);

CompareReport compare_JD_DRJ(const RadicalMonomialIdeal& j, const Box& window);

GorensteinProbe gorenstein_probe(const SemigroupData& sg, const Box& window);

// Window policy for a degree: every genuine stratum must reach the far zone.
long long far_radius_for(const SemigroupData& sg, const Vec& d);
Box base_window_for(const SemigroupData& sg, const Vec& d);

}  // namespace sgdops

#endif
