#pragma once

#include <string>
#include <vector>

#include "rdad/bootstrap.hpp"
#include "rdad/diagram.hpp"
#include "rdad/filtration.hpp"
#include "rdad/point_cloud.hpp"

namespace rdad {

// Points CSV: header `x,y[,label]`, label in {signal, outlier}.
void write_points_csv(const std::string& path, const PointCloud& cloud);
PointCloud read_points_csv(const std::string& path);

// Scalar field: JSON header {dim, lower, delta_x, counts, kind} with the
// row-major value array embedded.
void write_field_json(const std::string& path, const ScalarField& field);
ScalarField read_field_json(const std::string& path);

// Plain plotting export: x,y,value per row (cell centers).
void write_field_csv(const std::string& path, const ScalarField& field);

// Diagram CSV: dim,birth,death,death_x,death_y with death `inf` for
// essential classes and empty death columns for dimension 0. Death cells are
// reported at cell-center data coordinates; with_indices appends the integer
// pixel indices as death_i,death_j.
void write_diagram_csv(const std::string& path, const PersistenceDiagram& diagram,
                       const GridSpec& grid, bool with_indices = false);

// Significant-loop report: dim,birth,death,persistence,death_x,death_y.
void write_significant_csv(const std::string& path,
                           const std::vector<PersistencePoint>& points, const GridSpec& grid);

void write_bootstrap_json(const std::string& path, const BootstrapResult& result);

// Generic delimited table for ingestion of foreign point files.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const;  // -1 if absent
};
CsvTable read_csv_table(const std::string& path);

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace rdad
