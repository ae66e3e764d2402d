#include "goose/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace goose::stats {

namespace {

// P(Z <= z) for a standard normal.
double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Midranks of the pooled sample, returned per element of the pool.
std::vector<double> midranks(const std::vector<double>& pooled) {
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

// Exact two-sided p: distribution of the group-A rank sum over all
// C(n1+n2, n1) assignments, counted with a subset-sum table over doubled
// (integer) midranks.
double exact_two_sided_p(const std::vector<double>& ranks, std::size_t n1, double w_obs) {
    const std::size_t n = ranks.size();
    std::vector<long long> ranks2(n);
    long long total2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ranks2[i] = std::llround(2.0 * ranks[i]);
        total2 += ranks2[i];
    }
    // count[k][s] = number of k-subsets with doubled-rank sum s
    std::vector<std::vector<double>> count(n1 + 1,
                                           std::vector<double>(static_cast<std::size_t>(total2) + 1,
                                                               0.0));
    count[0][0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const long long r = ranks2[i];
        for (std::size_t k = std::min(n1, i + 1); k >= 1; --k) {
            for (long long s = total2; s >= r; --s) {
                count[k][s] += count[k - 1][s - r];
            }
        }
    }
    const long long w2 = std::llround(2.0 * w_obs);
    double below = 0.0, above = 0.0, all = 0.0;
    for (long long s = 0; s <= total2; ++s) {
        const double c = count[n1][s];
        all += c;
        if (s <= w2) below += c;
        if (s >= w2) above += c;
    }
    return std::min(1.0, 2.0 * std::min(below / all, above / all));
}

double approx_two_sided_p(const std::vector<double>& pooled, const std::vector<double>& ranks,
                          std::size_t n1, double w_obs) {
    const double n = static_cast<double>(pooled.size());
    const double n2 = n - static_cast<double>(n1);
    const double mean = static_cast<double>(n1) * (n + 1.0) / 2.0;
    // tie correction: sum t^3 - t over tie groups
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double var =
        static_cast<double>(n1) * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (var <= 0.0) return 1.0; // all pooled values identical
    const double diff = w_obs - mean;
    const double cc = diff > 0.0 ? -0.5 : (diff < 0.0 ? 0.5 : 0.0);
    const double z = (diff + cc) / std::sqrt(var);
    return std::min(1.0, 2.0 * normal_cdf(-std::fabs(z)));
}

} // namespace

Summary summarize(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty sample");
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("summarize: non-finite sample value");
    }
    Summary s;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

Summary summarize(const SampleSet& samples) { return summarize(samples.values); }

WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("wilcoxon_rank_sum: both samples must be non-empty");
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(pooled);
    double w = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) w += ranks[i];

    WilcoxonResult result;
    result.rank_sum_statistic = w;
    if (a.size() <= 12 && b.size() <= 12) {
        result.method = WilcoxonMethod::exact;
        result.p_value = exact_two_sided_p(ranks, a.size(), w);
    } else {
        result.method = WilcoxonMethod::normal_approximation;
        result.p_value = approx_two_sided_p(pooled, ranks, a.size(), w);
    }
    return result;
}

WilcoxonResult wilcoxon_rank_sum(const SampleSet& a, const SampleSet& b) {
    return wilcoxon_rank_sum(a.values, b.values);
}

int RankTable::first_place_count(const std::string& algorithm) const {
    const auto it = place_counts.find(algorithm);
    if (it == place_counts.end() || it->second.empty()) return 0;
    return it->second[0];
}

RankTable rank_by_mean(const std::vector<MeanEntry>& means, const std::vector<GroupSpec>& groups) {
    // problem -> (algorithm, mean), preserving first-seen problem order
    std::vector<std::string> problem_order;
    std::map<std::string, std::vector<std::pair<std::string, double>>> by_problem;
    std::set<std::string> algorithm_set;
    for (const MeanEntry& e : means) {
        if (by_problem.find(e.problem_id) == by_problem.end()) problem_order.push_back(e.problem_id);
        by_problem[e.problem_id].emplace_back(e.algorithm_id, e.mean);
        algorithm_set.insert(e.algorithm_id);
    }
    if (by_problem.empty()) throw std::invalid_argument("rank_by_mean: no entries");

    RankTable table;
    table.algorithms.assign(algorithm_set.begin(), algorithm_set.end());
    std::map<std::string, int> row_counts;

    for (const std::string& pid : problem_order) {
        auto cells_src = by_problem[pid];
        // drop missing (NaN) entries
        std::erase_if(cells_src, [](const auto& p) { return std::isnan(p.second); });
        if (cells_src.size() < 2)
            throw std::invalid_argument("rank_by_mean: problem " + pid +
                                        " needs at least two algorithms");
        std::stable_sort(cells_src.begin(), cells_src.end(),
                         [](const auto& l, const auto& r) { return l.second < r.second; });
        RankRow row;
        row.problem_id = pid;
        int rank = 0;
        for (std::size_t i = 0; i < cells_src.size(); ++i) {
            const bool tie_with_prev = i > 0 && cells_src[i].second == cells_src[i - 1].second;
            if (!tie_with_prev) rank = static_cast<int>(i) + 1; // competition ranking
            RankCell cell;
            cell.algorithm_id = cells_src[i].first;
            cell.mean = cells_src[i].second;
            cell.rank = rank;
            cell.tied = tie_with_prev ||
                        (i + 1 < cells_src.size() && cells_src[i + 1].second == cells_src[i].second);
            row.cells.push_back(cell);

            table.total_rank[cell.algorithm_id] += rank;
            ++row_counts[cell.algorithm_id];
            auto& places = table.place_counts[cell.algorithm_id];
            if (places.size() < static_cast<std::size_t>(rank)) places.resize(rank, 0);
            ++places[rank - 1];
        }
        table.rows.push_back(std::move(row));
    }

    for (const std::string& alg : table.algorithms) {
        if (row_counts[alg] > 0)
            table.overall_average[alg] =
                static_cast<double>(table.total_rank[alg]) / row_counts[alg];
    }

    for (const GroupSpec& group : groups) {
        std::map<std::string, int> sums;
        std::map<std::string, int> counts;
        for (const RankRow& row : table.rows) {
            if (std::find(group.problem_ids.begin(), group.problem_ids.end(), row.problem_id) ==
                group.problem_ids.end())
                continue;
            for (const RankCell& cell : row.cells) {
                sums[cell.algorithm_id] += cell.rank;
                ++counts[cell.algorithm_id];
            }
        }
        table.group_total[group.name] = sums;
        for (const auto& [alg, sum] : sums) {
            table.group_average[group.name][alg] =
                static_cast<double>(sum) / std::max(1, counts[alg]);
        }
    }
    return table;
}

RankTable rank_table(const std::vector<SampleSet>& samples, const std::vector<GroupSpec>& groups) {
    std::vector<MeanEntry> means;
    means.reserve(samples.size());
    for (const SampleSet& s : samples) {
        means.push_back({s.problem_id, s.algorithm_id, summarize(s).mean});
    }
    return rank_by_mean(means, groups);
}

} // namespace goose::stats
