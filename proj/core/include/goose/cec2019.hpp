#pragma once

#include <string>
#include <vector>

#include "goose/problem.hpp"

namespace goose::benchmarks {

/// Shift vector and rotation matrix applied to CEC04..CEC10 inputs.
struct CecTransform {
    std::vector<double> shift;                 ///< empty -> identity
    std::vector<std::vector<double>> rotation; ///< empty -> identity
};

/// Builds CEC 2019 function `index` (1..10). Functions 4..10 look for
/// "<data_dir>/cec0<index>.txt" holding the shift vector on the first line
/// and the rotation matrix on the next dim lines, whitespace-separated;
/// when the directory is empty or the file is absent they fall back to the
/// identity transform and carry an "unofficial" note.
Problem cec2019_problem(int index, const std::string& data_dir = "");

/// Parses a shift/rotation file; throws std::runtime_error on malformed or
/// non-finite data.
CecTransform load_cec_transform(const std::string& path, int dim);

} // namespace goose::benchmarks
