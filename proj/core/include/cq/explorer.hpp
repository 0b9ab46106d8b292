#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cq/radiators.hpp"
#include "cq/relations.hpp"

namespace cq {

struct SweepConfig {
  std::vector<ShapeClass> shapes;
  std::vector<RadiatorKind> radiators;
  std::vector<int> centers;
  int samples_per_shape = 5;  // >= 3
  std::uint64_t base_seed = 1;
  RecognitionMode mode = RecognitionMode::RationalOnly;
  double relation_tol = 1e-7;
  bool parallel = true;
};

struct RelationFinding {
  ShapeClass shape;
  RadiatorKind radiator;
  int center = 0;
  Relation relation;
  int confirmations = 0;
  std::string suppressed_by;  // empty = not suppressed

  bool suppressed() const { return !suppressed_by.empty(); }
};

// Run the sweep: a finding is kept only when every sample exhibits the
// relation with a consistent constant. Cells where any sample evaluates to
// the line at infinity are skipped entirely. Throws on centers missing from
// the registry.
std::vector<RelationFinding> run_sweep(const SweepConfig& cfg,
                                       const CenterRegistry& reg);

// Mark findings implied by an ancestor-shape finding with the same radiator,
// by an arbitrary-point finding, or by a proved radiator coincidence.
// Precondition: every ancestor of every finding's shape was swept too.
void suppress_inherited(std::vector<RelationFinding>& findings);

// Full pipeline: sweep the ancestor closure of cfg.shapes (suppression needs
// the ancestor runs), suppress, and keep only rows for the requested shapes.
std::vector<RelationFinding> sweep_and_suppress(const SweepConfig& cfg,
                                                const CenterRegistry& reg);

struct SquareTableEntry {
  int center = 0;
  RecognizedConstant ratio;
};

// [ABCD]/[FGHI] for a square with its diagonal point, computed through the
// isosceles-right radial triangle: ratio = 2 / (EF/EM)^2. Centers landing on
// the apex (EF/EM == 0) or failing to evaluate are omitted.
std::vector<SquareTableEntry> square_ratio_table(const CenterRegistry& reg,
                                                 const std::vector<int>& indices);

enum class ReportFormat { Markdown, Csv, Json };

std::string emit_report(const std::vector<RelationFinding>& findings,
                        ReportFormat format, bool include_suppressed = false);

std::vector<RelationFinding> findings_from_json(std::string_view text);

// Abbreviate sorted center indices, collapsing runs of consecutive integers
// of length >= 3 ("122-125").
std::string format_center_list(std::vector<int> centers);

}  // namespace cq
