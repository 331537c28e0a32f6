#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hcd {

/// Observed multivariate series: T rows, one column per variable. Column
/// order matches variable indices.
struct Dataset {
    Eigen::MatrixXd values;
    std::vector<std::string> names;

    int T() const { return static_cast<int>(values.rows()); }
    int d() const { return static_cast<int>(values.cols()); }

    // Throws InvalidArgument on a shape/name mismatch or non-finite cells.
    void validate() const;
};

// Zero mean, unit (population) variance per column. Throws DegenerateSeries
// naming the first constant column.
Dataset standardize(const Dataset& data);

// Header row of names, one row per timestamp, no index column. Errors carry
// the 1-based line and column of the offending cell.
Dataset parse_csv(std::istream& in, const std::string& source = "<stream>");
Dataset read_csv(const std::string& path);
void write_csv(const Dataset& data, std::ostream& out);
void write_csv(const Dataset& data, const std::string& path);

}  // namespace hcd
