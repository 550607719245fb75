#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rrs/channel/cascade.hpp"
#include "rrs/ris/optimizers.hpp"

namespace rrs::ris {

inline constexpr int kCodebookFormatVersion = 1;

struct CodebookEntry {
  Vec3 reference_point;
  RisConfig codeword;  // restricted to the part's elements

  friend bool operator==(const CodebookEntry&, const CodebookEntry&) = default;
};

struct CodebookMetadata {
  int format_version = kCodebookFormatVersion;
  std::string grid;
  std::string build_date;
  // FNV-1a of the model inputs; a mismatch marks the codebook stale.
  std::string evaluator_hash;

  friend bool operator==(const CodebookMetadata&, const CodebookMetadata&) = default;
};

struct Codebook {
  std::uint32_t panel_id = 0;
  std::size_t part = 0;
  std::vector<std::size_t> elements;
  std::vector<CodebookEntry> entries;
  CodebookMetadata metadata;

  // Distinct reference points, codewords sized to the part.
  void validate() const;
  friend bool operator==(const Codebook&, const Codebook&) = default;
};

// Everything the model-based evaluator needs besides the receiver position.
struct CodebookContext {
  Vec3 tx;
  double tx_power_dbm = 0.0;
  channel::LinkModel model;
  std::vector<Box> obstacles;
  // States of the elements outside the part while it is optimised; empty = zeros.
  RisConfig frozen;
  IterativeOptions options;
  std::string grid_description;
  std::string build_date;
};

std::string evaluator_hash(const channel::RisPanel& panel, std::size_t part,
                           std::span<const Vec3> grid, const CodebookContext& context);

// One iterative solve per reference point with the receiver placed there.
// Reference points are processed in parallel; output order follows `grid`.
Codebook build_codebook(const channel::RisPanel& panel, std::size_t part,
                        std::span<const Vec3> grid, const CodebookContext& context);

struct CodewordSelection {
  std::size_t entry = 0;
  RisConfig codeword;
  std::size_t feedback_messages = 0;
};

// Euclidean-nearest reference point, ties to the lowest entry index. Uses no
// receiver feedback. Throws EmptyCodebook.
CodewordSelection select_codeword(const Codebook& codebook, Vec3 ue_location_estimate);

// Points at `radius` from `center`, angle measured from `normal` towards
// cross(up, normal) in the plane orthogonal to `up`.
std::vector<Vec3> angular_grid(Vec3 center, Vec3 normal, Vec3 up, double radius_m,
                               std::span<const double> angles_deg);

nlohmann::json to_json(const Codebook& codebook);
// Throws ParseError on a malformed document or unsupported version.
Codebook codebook_from_json(const nlohmann::json& doc);

}  // namespace rrs::ris
