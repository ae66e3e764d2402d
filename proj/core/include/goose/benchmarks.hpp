#pragma once

#include <string>
#include <vector>

#include "goose/problem.hpp"

namespace goose::benchmarks {

/// Builds a registered problem by id: the classical functions F1..F19 at
/// their standard dimensions/ranges, or the CEC 2019 "100-digit challenge"
/// functions CEC01..CEC10. Unknown ids raise std::invalid_argument with the
/// list of valid ids.
Problem make_problem(const std::string& id);

/// Same, overriding the dimension. Only the scalable functions F1..F13
/// accept an override; fixed-dimension and CEC functions reject it.
Problem make_problem(const std::string& id, int dim);

/// All registered ids, sorted.
std::vector<std::string> registered_ids();

enum class SuiteId { classical19, five_classical30, cec2019 };

struct SuiteOptions {
    /// Directory with CEC 2019 shift/rotation data files (cec04.txt ..
    /// cec10.txt). When empty or a file is missing, the identity transform
    /// is used and the problem is flagged unofficial.
    std::string cec_data_dir;
    /// Replication variant of the five-function 30-dimensional suite with
    /// every box forced to [-5.12, 5.12].
    bool uniform_range_512 = false;
};

/// Problems of one experiment suite: the 19-function classical set, the
/// five classical functions at dimension 30, or the ten CEC 2019 functions.
std::vector<Problem> suite_problems(SuiteId suite, const SuiteOptions& options = {});

SuiteId parse_suite_id(const std::string& name); ///< throws on unknown name
std::string suite_name(SuiteId suite);

} // namespace goose::benchmarks
