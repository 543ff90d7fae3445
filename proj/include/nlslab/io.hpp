#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlslab/errors.hpp"
#include "nlslab/field.hpp"

namespace nlslab {

using json = nlohmann::json;

inline std::string format_full(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << text;
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_json(const std::filesystem::path& path, const json& j) {
    write_text(path, j.dump(2) + "\n");
}

inline json read_json(const std::filesystem::path& path) {
    return json::parse(read_text(path));
}

/// Field on disk: <stem>.csv with columns r, Re u, Im u at 17 significant
/// digits, plus <stem>.json describing (N, p, grid mode, r_max, M).
inline void save_field(const RadialField& u, const std::filesystem::path& stem) {
    std::ostringstream csv;
    csv.precision(17);
    csv << "r,re,im\n";
    const auto& r = u.grid().radii();
    for (std::size_t j = 0; j < u.size(); ++j)
        csv << r[j] << ',' << u.values()[j].real() << ',' << u.values()[j].imag() << '\n';
    write_text(stem.string() + ".csv", csv.str());

    json header = {
        {"N", u.params().N},
        {"p", u.params().p},
        {"grid_mode", to_string(u.grid().mode())},
        {"r_max", u.grid().r_max()},
        {"M", u.size()},
        {"first_interior", u.grid().first_interior()},
        {"stretch_ratio", u.grid().stretch_ratio()},
    };
    write_json(stem.string() + ".json", header);
}

inline RadialField load_field(const std::filesystem::path& stem) {
    const json header = read_json(stem.string() + ".json");
    const Params params = derive_params(header.at("N").get<int>(), header.at("p").get<double>());
    const GridMode mode = grid_mode_from_string(header.at("grid_mode").get<std::string>());

    std::ifstream in(stem.string() + ".csv");
    if (!in) throw IoError("cannot open field csv: " + stem.string() + ".csv");
    std::string line;
    std::getline(in, line);  // header row
    std::vector<double> radii;
    std::vector<cdouble> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        double col[3] = {0, 0, 0};
        for (int k = 0; k < 3 && std::getline(row, cell, ','); ++k) col[k] = std::stod(cell);
        radii.push_back(col[0]);
        values.emplace_back(col[1], col[2]);
    }
    if (radii.size() != header.at("M").get<std::size_t>())
        throw IoError("field csv row count disagrees with header");
    auto grid = RadialGrid::from_radii(std::move(radii), mode,
                                       header.value("first_interior", 0.0),
                                       header.value("stretch_ratio", 0.0));
    return RadialField(std::move(grid), std::move(values), params);
}

}  // namespace nlslab
