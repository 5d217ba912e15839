#ifndef SGDOPS_ORACLE_HPP
#define SGDOPS_ORACLE_HPP

#include <string>

#include "sgdops/dops.hpp"

namespace sgdops {

// Independent verification path: candidate affine spans are generated
// exhaustively from point pairs and triples (never from facet normals), kept
// when they persist under window doubling, and intersected through the
// general elimination route.
ThetaIdeal brute_vanishing_ideal(const SemigroupData& sg, const RadicalMonomialIdeal* j,
                                 const VanishingSpec& spec, long long window_scale = 1);

struct VerifyReport {
  bool pass = false;
  std::string detail;
};

VerifyReport verify_piece(const GradedPiece& piece, const SemigroupData& sg,
                          const RadicalMonomialIdeal* j, const VanishingSpec& spec);

}  // namespace sgdops

#endif
