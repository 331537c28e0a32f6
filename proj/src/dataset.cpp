#include "hybridcd/dataset.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "hybridcd/error.hpp"

namespace hcd {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        std::size_t start = cell.find_first_not_of(' ');
        cells.push_back(start == std::string::npos ? std::string() : cell.substr(start));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string strip_quotes(std::string s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

}  // namespace

void Dataset::validate() const {
    if (static_cast<std::size_t>(values.cols()) != names.size()) {
        throw InvalidArgument("dataset has " + std::to_string(values.cols()) + " columns but " +
                              std::to_string(names.size()) + " names");
    }
    std::unordered_set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second) throw InvalidArgument("duplicate series name: " + n);
    if (!values.allFinite()) throw InvalidArgument("dataset contains non-finite values");
}

Dataset standardize(const Dataset& data) {
    Dataset out = data;
    const double n = static_cast<double>(data.T());
    for (int j = 0; j < data.d(); ++j) {
        auto col = out.values.col(j);
        double mean = col.mean();
        col.array() -= mean;
        double sd = std::sqrt(col.squaredNorm() / n);
        if (!(sd > 1e-12 * (1.0 + std::abs(mean)))) throw DegenerateSeries(data.names[j]);
        col /= sd;
    }
    return out;
}

Dataset parse_csv(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 0;
    Dataset ds;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \r\t") != std::string::npos) break;
    }
    if (line_no == 0 || line.find_first_not_of(" \r\t") == std::string::npos)
        throw DataError(source + ": empty file");
    for (auto& h : split_row(line)) ds.names.push_back(strip_quotes(h));
    const std::size_t d = ds.names.size();
    for (std::size_t j = 0; j < d; ++j)
        if (ds.names[j].empty()) throw DataError(source + ": line 1, column " + std::to_string(j + 1) + ": empty header");

    std::vector<double> cells;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
        auto row = split_row(line);
        if (row.size() != d) {
            throw DataError(source + ": line " + std::to_string(line_no) + ": expected " + std::to_string(d) +
                            " cells, found " + std::to_string(row.size()));
        }
        for (std::size_t j = 0; j < d; ++j) {
            const std::string& c = row[j];
            char* end = nullptr;
            errno = 0;
            double v = std::strtod(c.c_str(), &end);
            if (c.empty() || end != c.c_str() + c.size() || errno == ERANGE || !std::isfinite(v)) {
                throw DataError(source + ": line " + std::to_string(line_no) + ", column " +
                                std::to_string(j + 1) + ": non-numeric cell '" + c + "'");
            }
            cells.push_back(v);
        }
        ++rows;
    }
    if (rows == 0) throw DataError(source + ": no data rows");
    ds.values.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < d; ++j) ds.values(i, j) = cells[i * d + j];
    try {
        ds.validate();
    } catch (const InvalidArgument& e) {
        throw DataError(source + ": " + e.what());
    }
    return ds;
}

Dataset read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return parse_csv(in, path);
}

void write_csv(const Dataset& data, std::ostream& out) {
    for (int j = 0; j < data.d(); ++j) out << (j ? "," : "") << data.names[j];
    out << '\n';
    char buf[32];
    for (int i = 0; i < data.T(); ++i) {
        for (int j = 0; j < data.d(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", data.values(i, j));
            out << (j ? "," : "") << buf;
        }
        out << '\n';
    }
}

void write_csv(const Dataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    write_csv(data, out);
    if (!out) throw DataError("write failed: " + path);
}

}  // namespace hcd
