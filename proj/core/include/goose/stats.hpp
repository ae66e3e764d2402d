#pragma once

#include <map>
#include <string>
#include <vector>

namespace goose::stats {

/// Best-fitness samples of one algorithm on one problem, one value per
/// independent run. Values must be finite and non-empty.
struct SampleSet {
    std::string algorithm_id;
    std::string problem_id;
    std::vector<double> values;
};

struct Summary {
    double mean = 0.0;
    double stddev = 0.0; ///< sample standard deviation (n-1); 0 for n == 1
};

Summary summarize(const std::vector<double>& values); ///< throws on empty/non-finite
Summary summarize(const SampleSet& samples);

enum class WilcoxonMethod { exact, normal_approximation };

struct WilcoxonResult {
    double rank_sum_statistic = 0.0; ///< midrank sum of the first sample
    double p_value = 1.0;            ///< two-sided
    WilcoxonMethod method = WilcoxonMethod::exact;
};

/// Two-sided Wilcoxon rank-sum test of identical distributions. Exact
/// (count of rank-sum outcomes over all group assignments, midranks for
/// ties) when both samples have at most 12 elements; tie-corrected normal
/// approximation with continuity correction otherwise.
WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b);
WilcoxonResult wilcoxon_rank_sum(const SampleSet& a, const SampleSet& b);

/// One mean per (problem, algorithm) pair feeding the ranking.
struct MeanEntry {
    std::string problem_id;
    std::string algorithm_id;
    double mean = 0.0;
};

struct RankCell {
    std::string algorithm_id;
    double mean = 0.0;
    int rank = 0; ///< 1 = lowest mean; ties share the lower rank
    bool tied = false;
};

struct RankRow {
    std::string problem_id;
    std::vector<RankCell> cells; ///< sorted by rank
};

/// Named problem group for per-group average ranks (e.g. unimodal F1-F7).
struct GroupSpec {
    std::string name;
    std::vector<std::string> problem_ids;
};

struct RankTable {
    std::vector<RankRow> rows;
    std::vector<std::string> algorithms;
    std::map<std::string, int> total_rank;       ///< per algorithm, sum over rows
    std::map<std::string, double> overall_average;
    /// group name -> algorithm -> (rank sum, average)
    std::map<std::string, std::map<std::string, int>> group_total;
    std::map<std::string, std::map<std::string, double>> group_average;
    /// algorithm -> how often it took each place (index 0 = first)
    std::map<std::string, std::vector<int>> place_counts;

    int first_place_count(const std::string& algorithm) const;
};

/// Ranks algorithms by mean per problem (minimization: rank 1 = lowest).
/// Requires at least two algorithms per problem; NaN means mark missing
/// entries and are excluded from that row.
RankTable rank_by_mean(const std::vector<MeanEntry>& means,
                       const std::vector<GroupSpec>& groups = {});

/// Convenience wrapper: summarize each sample set, then rank the means.
RankTable rank_table(const std::vector<SampleSet>& samples,
                     const std::vector<GroupSpec>& groups = {});

} // namespace goose::stats
