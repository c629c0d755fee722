#pragma once

// Helpers shared by the test files: reading the committed fixture CSVs.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int col(const std::string& name) const {
        for (size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        throw std::runtime_error("csv: no column " + name);
    }

    double num(size_t row, const std::string& name) const {
        return std::stod(rows.at(row).at(col(name)));
    }

    const std::string& str(size_t row, const std::string& name) const {
        return rows.at(row).at(col(name));
    }
};

inline std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

// '#' lines are comments; the first data line is the header.
inline CsvTable read_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    CsvTable t;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (t.header.empty())
            t.header = split_commas(line);
        else
            t.rows.push_back(split_commas(line));
    }
    return t;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(DWELL_FIXTURE_DIR) + "/" + name;
}

}  // namespace testsupport
