#include "rdad/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rdad/errors.hpp"

namespace rdad {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open for reading: " + path);
    return in;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DataError("cannot parse number '" + s + "' in " + context);
    }
}

json kind_to_json(const FiltrationSpec& spec) {
    json j;
    j["kind"] = filtration_kind_name(spec.kind);
    if (spec.k_den > 0) j["k_den"] = spec.k_den;
    if (spec.k_dtm > 0) j["k_dtm"] = spec.k_dtm;
    j["m_dtm"] = spec.m_dtm;
    return j;
}

FiltrationSpec kind_from_json(const json& j) {
    FiltrationSpec spec;
    spec.kind = parse_filtration_kind(j.at("kind").get<std::string>());
    spec.k_den = j.value("k_den", 0);
    spec.k_dtm = j.value("k_dtm", 0);
    spec.m_dtm = j.value("m_dtm", 0.002);
    return spec;
}

}  // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    // shortest decimal that round-trips
    char best[32];
    std::snprintf(best, sizeof best, "%.17g", v);
    for (int prec = 1; prec <= 17; ++prec) {
        char probe[32];
        std::snprintf(probe, sizeof probe, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(probe, "%lf", &back);
        if (back == v && std::strlen(probe) < std::strlen(best)) std::strcpy(best, probe);
    }
    return best;
}

void write_points_csv(const std::string& path, const PointCloud& cloud) {
    if (cloud.dim != 2) throw ConfigError("write_points_csv: only 2-D clouds are serialized");
    auto out = open_out(path);
    const bool labeled = !cloud.labels.empty();
    out << (labeled ? "x,y,label\n" : "x,y\n");
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto p = cloud.point(i);
        out << format_double(p[0]) << ',' << format_double(p[1]);
        if (labeled) out << ',' << label_name(cloud.labels[i]);
        out << '\n';
    }
}

PointCloud read_points_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty points file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv_line(line);
    if (header.size() < 2 || header[0] != "x" || header[1] != "y")
        throw DataError("points file must start with header x,y[,label]: " + path);
    const bool labeled = header.size() > 2 && header[2] == "label";

    PointCloud cloud;
    cloud.dim = 2;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() < 2)
            throw DataError("short row at line " + std::to_string(line_no) + " in " + path);
        const std::string ctx = path + ":" + std::to_string(line_no);
        cloud.coords.push_back(parse_double(fields[0], ctx));
        cloud.coords.push_back(parse_double(fields[1], ctx));
        if (labeled) {
            cloud.labels.resize(cloud.size() - 1, Label::Signal);
            cloud.labels.push_back(parse_label(fields.size() > 2 ? fields[2] : ""));
        }
    }
    if (cloud.coords.empty()) throw DataError("points file has no rows: " + path);
    return cloud;
}

void write_field_json(const std::string& path, const ScalarField& field) {
    json j;
    j["dim"] = field.grid.dim();
    j["lower"] = field.grid.lower;
    j["delta_x"] = field.grid.delta_x;
    j["counts"] = field.grid.counts;
    j["kind"] = kind_to_json(field.spec);
    j["values"] = field.values;
    auto out = open_out(path);
    out << j.dump() << '\n';
}

ScalarField read_field_json(const std::string& path) {
    auto in = open_in(path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError("cannot parse field file " + path + ": " + e.what());
    }
    try {
        ScalarField field;
        field.grid.lower = j.at("lower").get<std::vector<double>>();
        field.grid.delta_x = j.at("delta_x").get<double>();
        field.grid.counts = j.at("counts").get<std::vector<std::int64_t>>();
        field.spec = kind_from_json(j.at("kind"));
        field.values = j.at("values").get<std::vector<double>>();
        field.grid.validate();
        if (static_cast<std::int64_t>(field.values.size()) != field.grid.cell_count())
            throw DataError("field value count does not match the grid in " + path);
        return field;
    } catch (const json::exception& e) {
        throw DataError("malformed field file " + path + ": " + e.what());
    }
}

void write_field_csv(const std::string& path, const ScalarField& field) {
    if (field.grid.dim() != 2) throw ConfigError("write_field_csv: only 2-D fields");
    auto out = open_out(path);
    out << "x,y,value\n";
    for (std::int64_t j = 0; j < field.grid.counts[1]; ++j)
        for (std::int64_t i = 0; i < field.grid.counts[0]; ++i)
            out << format_double(field.grid.center_coord(0, i)) << ','
                << format_double(field.grid.center_coord(1, j)) << ','
                << format_double(field.at(i, j)) << '\n';
}

namespace {

void write_death_cell(std::ofstream& out, const PersistencePoint& pt, const GridSpec& grid) {
    if (pt.death_cell) {
        out << format_double(grid.center_coord(0, pt.death_cell->first)) << ','
            << format_double(grid.center_coord(1, pt.death_cell->second));
    } else {
        out << ',';
    }
}

}  // namespace

void write_diagram_csv(const std::string& path, const PersistenceDiagram& diagram,
                       const GridSpec& grid, bool with_indices) {
    auto out = open_out(path);
    out << "dim,birth,death,death_x,death_y";
    if (with_indices) out << ",death_i,death_j";
    out << '\n';
    for (const auto& pt : diagram.points) {
        out << pt.dim << ',' << format_double(pt.birth) << ',' << format_double(pt.death) << ',';
        write_death_cell(out, pt, grid);
        if (with_indices) {
            if (pt.death_cell)
                out << ',' << pt.death_cell->first << ',' << pt.death_cell->second;
            else
                out << ",,";
        }
        out << '\n';
    }
}

void write_significant_csv(const std::string& path,
                           const std::vector<PersistencePoint>& points, const GridSpec& grid) {
    auto out = open_out(path);
    out << "dim,birth,death,persistence,death_x,death_y\n";
    for (const auto& pt : points) {
        out << pt.dim << ',' << format_double(pt.birth) << ',' << format_double(pt.death) << ','
            << format_double(pt.death - pt.birth) << ',';
        write_death_cell(out, pt, grid);
        out << '\n';
    }
}

void write_bootstrap_json(const std::string& path, const BootstrapResult& result) {
    json j;
    j["radius"] = result.radius;
    j["alpha"] = result.config.alpha;
    j["B"] = result.config.B;
    j["dim"] = result.config.dim;
    j["mode"] = result.config.mode == BootstrapMode::Oracle ? "oracle" : "subsample";
    j["seed"] = result.config.seed;
    j["distances"] = result.distances;
    j["reseeded_replicates"] = result.reseeded_replicates;
    auto out = open_out(path);
    out << j.dump() << '\n';
}

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

CsvTable read_csv_table(const std::string& path) {
    auto in = open_in(path);
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty csv file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    table.header = split_csv_line(line);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        table.rows.push_back(split_csv_line(line));
    }
    return table;
}

}  // namespace rdad
