#ifndef SGDOPS_CONFIG_HPP
#define SGDOPS_CONFIG_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgdops/semigroup.hpp"

namespace sgdops {

// Ring description from the line-oriented config format. Grammar (one
// key per line, '#' comments):
//   name = A2
//   matrix = [[1,1,1],[0,1,2]]
//   ideal = interior            | ideal = faces [[1],[2],[3,4]]
//   window = 5                  | window = [[-3,3],[-21,21]]
//   variables = s,t
struct RingConfig {
  std::string name;
  IntMatrix matrix;
  bool interior = true;
  std::vector<std::vector<int>> ideal_faces;  // 1-based facet index lists
  std::optional<Box> window;
  std::vector<std::string> variable_names;
};

RingConfig parse_ring_config(const std::string& text);
RingConfig load_ring_config(const std::string& path);

// Assembled ring: semigroup data plus the configured radical monomial ideal.
struct RingSession {
  RingConfig config;
  std::unique_ptr<SemigroupData> sg;
  std::unique_ptr<RadicalMonomialIdeal> ideal;

  Box default_window() const;
};

RingSession make_session(RingConfig config);

}  // namespace sgdops

#endif
