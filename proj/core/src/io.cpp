#include "vietlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vietlab::io {

namespace {

std::vector<std::vector<double>> load_csv_rows(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        std::stringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            try {
                row.push_back(std::stod(field));
            } catch (const std::exception&) {
                throw std::runtime_error("bad numeric field in " + path.string() + ": " + field);
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty input file " + path.string());
    return rows;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

PointCloud load_point_cloud_csv(const std::filesystem::path& path) {
    return PointCloud::from_rows(load_csv_rows(path));
}

FiniteMetricSpace load_distance_matrix_csv(const std::filesystem::path& path,
                                           FiniteMetricSpace::TriangleCheck check) {
    return FiniteMetricSpace::from_matrix(load_csv_rows(path), check);
}

void save_distance_matrix_csv(const std::filesystem::path& path, const FiniteMetricSpace& space) {
    auto out = open_out(path);
    for (int i = 0; i < space.size(); ++i) {
        for (int j = 0; j < space.size(); ++j) {
            if (j) out << ',';
            out << format_double(space.dist(i, j));
        }
        out << '\n';
    }
}

ExplicitCover load_explicit_cover_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json doc;
    in >> doc;
    if (!doc.is_array()) throw std::runtime_error("cover file must be a JSON array of arrays");
    ExplicitCover cover;
    for (const auto& element : doc) {
        if (!element.is_array()) throw std::runtime_error("cover element must be an array");
        std::vector<int> indices;
        for (const auto& v : element) indices.push_back(v.get<int>());
        cover.elements.push_back(Subset::of(std::move(indices)));
    }
    return cover;
}

void save_complex_json(const std::filesystem::path& path, const SimplicialComplex& complex) {
    nlohmann::ordered_json doc;
    doc["max_dim"] = complex.max_dim();
    auto& simplices = doc["simplices"] = nlohmann::ordered_json::array();
    for (int dim = 0; dim <= complex.max_dim(); ++dim)
        for (const auto& simplex : complex.simplices(dim))
            simplices.push_back(simplex.indices());
    auto out = open_out(path);
    out << doc.dump(2) << '\n';
}

void save_diagram_json(const std::filesystem::path& path, const PersistenceDiagram& diagram) {
    nlohmann::ordered_json doc;
    auto& dims = doc["dims"];
    for (int dim = 0; dim <= diagram.max_dim(); ++dim) {
        auto& bars = dims[std::to_string(dim)] = nlohmann::ordered_json::array();
        for (const auto& bar : diagram.bars(dim)) {
            nlohmann::ordered_json pair = nlohmann::ordered_json::array();
            pair.push_back(bar.birth);
            if (bar.essential())
                pair.push_back("inf");
            else
                pair.push_back(bar.death);
            bars.push_back(std::move(pair));
        }
    }
    doc["r_max"] = diagram.r_max;
    auto out = open_out(path);
    out << doc.dump(2) << '\n';
}

PersistenceDiagram load_diagram_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json doc;
    in >> doc;
    PersistenceDiagram diagram;
    diagram.r_max = doc.at("r_max").get<double>();
    const auto& dims = doc.at("dims");
    int max_dim = -1;
    for (const auto& [key, value] : dims.items()) max_dim = std::max(max_dim, std::stoi(key));
    diagram.dims.resize(static_cast<std::size_t>(max_dim) + 1);
    for (const auto& [key, value] : dims.items()) {
        auto& bars = diagram.dims[static_cast<std::size_t>(std::stoi(key))];
        for (const auto& pair : value) {
            PersistenceBar bar{};
            bar.birth = pair.at(0).get<double>();
            if (pair.at(1).is_string())
                bar.death = std::numeric_limits<double>::infinity();
            else
                bar.death = pair.at(1).get<double>();
            bars.push_back(bar);
        }
    }
    return diagram;
}

DiscreteMeasure load_measure_csv(const std::filesystem::path& path) {
    std::vector<DiscreteMeasure::Atom> atoms;
    for (const auto& row : load_csv_rows(path)) {
        if (row.size() != 2) throw std::runtime_error("measure rows must be point_index,weight");
        atoms.push_back({static_cast<int>(row[0]), row[1]});
    }
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

void save_measure_csv(const std::filesystem::path& path, const DiscreteMeasure& measure) {
    auto out = open_out(path);
    for (const auto& atom : measure.atoms())
        out << atom.point << ',' << format_double(atom.weight) << '\n';
}

void save_measures_csv(const std::filesystem::path& path,
                       const std::vector<DiscreteMeasure>& measures) {
    auto out = open_out(path);
    for (const auto& measure : measures) {
        bool first = true;
        for (const auto& atom : measure.atoms()) {
            if (!first) out << ';';
            out << atom.point << ':' << format_double(atom.weight);
            first = false;
        }
        out << '\n';
    }
}

std::string audit_report_json(const std::vector<AuditResult>& results) {
    nlohmann::ordered_json doc;
    auto& items = doc["audits"] = nlohmann::ordered_json::array();
    for (const auto& result : results) {
        nlohmann::ordered_json item;
        item["audit"] = result.name;
        item["pass"] = result.passed();
        item["instances"] = result.instances;
        item["trials"] = result.trials;
        if (!result.passed()) item["counterexample"] = result.counterexample;
        items.push_back(std::move(item));
    }
    doc["pass"] = all_passed(results);
    return doc.dump(2);
}

}  // namespace vietlab::io
