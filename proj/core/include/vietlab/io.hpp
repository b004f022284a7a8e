#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vietlab/audits.hpp"
#include "vietlab/complex.hpp"
#include "vietlab/cover.hpp"
#include "vietlab/metric_space.hpp"
#include "vietlab/persistence.hpp"
#include "vietlab/thickening.hpp"

namespace vietlab::io {

/// CSV, one point per row, D decimal columns, no header.
PointCloud load_point_cloud_csv(const std::filesystem::path& path);

/// CSV, n rows by n columns; symmetry within 1e-9 and zero diagonal enforced.
FiniteMetricSpace load_distance_matrix_csv(const std::filesystem::path& path,
                                           FiniteMetricSpace::TriangleCheck check =
                                               FiniteMetricSpace::TriangleCheck::Skip);
void save_distance_matrix_csv(const std::filesystem::path& path, const FiniteMetricSpace& space);

/// JSON array of arrays of 0-based point indices.
ExplicitCover load_explicit_cover_json(const std::filesystem::path& path);

/// {"max_dim": k, "simplices": [[indices...], ...]} sorted by
/// (dimension, lexicographic).
void save_complex_json(const std::filesystem::path& path, const SimplicialComplex& complex);

/// {"dims": {"0": [[b, d], ...], ...}, "r_max": v}; infinite deaths are the
/// string "inf". Bars are sorted by (birth, death).
void save_diagram_json(const std::filesystem::path& path, const PersistenceDiagram& diagram);
PersistenceDiagram load_diagram_json(const std::filesystem::path& path);

/// CSV rows "point_index,weight".
DiscreteMeasure load_measure_csv(const std::filesystem::path& path);
void save_measure_csv(const std::filesystem::path& path, const DiscreteMeasure& measure);

/// One measure per row, "idx:weight;idx:weight;...".
void save_measures_csv(const std::filesystem::path& path,
                       const std::vector<DiscreteMeasure>& measures);

std::string audit_report_json(const std::vector<AuditResult>& results);

/// Shortest round-trip decimal formatting (deterministic output files).
std::string format_double(double value);

}  // namespace vietlab::io
