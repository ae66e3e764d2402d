#include "goose/cec2019.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace goose::benchmarks {

namespace {

constexpr double kPi = std::numbers::pi;

// The basic functions below follow the CEC 2019 reference implementation,
// including its quirks (the Chebyshev border check evaluates the polynomial
// at +1.2 twice, Lennard-Jones carries the cluster-energy offset so the
// global optimum lands at 1.0).

double storn_chebyshev(const std::vector<double>& x) {
    const int nx = static_cast<int>(x.size());
    double a = 1.0, b = 1.2, dx = 0.0;
    for (int j = 0; j < nx - 2; ++j) {
        dx = 2.4 * b - a;
        a = b;
        b = dx;
    }
    const int sample = 32 * nx;
    const double dy = 2.0 / sample;
    double y = -1.0, sum = 0.0;
    for (int i = 0; i <= sample; ++i) {
        double px = x[0];
        for (int j = 1; j < nx; ++j) px = y * px + x[j];
        if (px < -1.0 || px > 1.0) sum += (1.0 - std::fabs(px)) * (1.0 - std::fabs(px));
        y += dy;
    }
    for (int i = -1; i <= 1; i += 2) {
        double px = x[0];
        for (int j = 1; j < nx; ++j) px = 1.2 * px + x[j];
        if (px < dx) sum += px * px;
    }
    return sum;
}

double inverse_hilbert(const std::vector<double>& x) {
    const int b = static_cast<int>(std::lround(std::sqrt(static_cast<double>(x.size()))));
    double sum = 0.0;
    for (int i = 0; i < b; ++i) {
        for (int k = 0; k < b; ++k) {
            double y = 0.0;
            for (int j = 0; j < b; ++j) y += x[k + b * j] / (i + j + 1.0);
            sum += std::fabs(y - (i == k ? 1.0 : 0.0));
        }
    }
    return sum;
}

constexpr double kLennardJonesOffset = 12.7120622568; // 6-atom minimum energy

double lennard_jones(const std::vector<double>& x) {
    const int atoms = static_cast<int>(x.size()) / 3;
    double sum = 0.0;
    for (int i = 0; i + 1 < atoms; ++i) {
        for (int j = i + 1; j < atoms; ++j) {
            const int a = 3 * i, b = 3 * j;
            const double xd = x[a] - x[b];
            const double yd = x[a + 1] - x[b + 1];
            const double zd = x[a + 2] - x[b + 2];
            const double ed = xd * xd + yd * yd + zd * zd;
            const double ud = ed * ed * ed;
            if (ud > 1.0e-10) {
                sum += (1.0 / ud - 2.0) / ud;
            } else {
                sum += 1.0e20;
            }
        }
    }
    return sum + kLennardJonesOffset;
}

double rastrigin_basic(const std::vector<double>& z) {
    double s = 0.0;
    for (double v : z) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    return s;
}

double griewank_basic(const std::vector<double>& z) {
    double sum = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        sum += z[i] * z[i];
        prod *= std::cos(z[i] / std::sqrt(1.0 + static_cast<double>(i)));
    }
    return 1.0 + sum / 4000.0 - prod;
}

double weierstrass_basic(const std::vector<double>& z) {
    constexpr double a = 0.5, b = 3.0;
    constexpr int k_max = 20;
    double ak[k_max + 1], bk[k_max + 1];
    for (int k = 0; k <= k_max; ++k) {
        ak[k] = std::pow(a, k);
        bk[k] = std::pow(b, k);
    }
    double f = 0.0, base = 0.0;
    for (int k = 0; k <= k_max; ++k) base += ak[k] * std::cos(2.0 * kPi * bk[k] * 0.5);
    for (double v : z) {
        double s = 0.0;
        for (int k = 0; k <= k_max; ++k) s += ak[k] * std::cos(2.0 * kPi * bk[k] * (v + 0.5));
        f += s;
    }
    return f - static_cast<double>(z.size()) * base;
}

double modified_schwefel_basic(const std::vector<double>& z) {
    const double n = static_cast<double>(z.size());
    double f = 0.0;
    for (double v : z) {
        v += 4.209687462275036e+002;
        if (v > 500.0) {
            f -= (500.0 - std::fmod(v, 500.0)) * std::sin(std::sqrt(500.0 - std::fmod(v, 500.0)));
            const double t = (v - 500.0) / 100.0;
            f += t * t / n;
        } else if (v < -500.0) {
            f -= (-500.0 + std::fmod(std::fabs(v), 500.0)) *
                 std::sin(std::sqrt(500.0 - std::fmod(std::fabs(v), 500.0)));
            const double t = (v + 500.0) / 100.0;
            f += t * t / n;
        } else {
            f -= v * std::sin(std::sqrt(std::fabs(v)));
        }
    }
    return f + 4.189828872724338e+002 * n;
}

double expanded_schaffer6(const std::vector<double>& z) {
    const std::size_t n = z.size();
    auto pair_term = [](double u, double v) {
        const double ss = u * u + v * v;
        const double s = std::sin(std::sqrt(ss));
        const double d = 1.0 + 0.001 * ss;
        return 0.5 + (s * s - 0.5) / (d * d);
    };
    double f = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) f += pair_term(z[i], z[i + 1]);
    f += pair_term(z[n - 1], z[0]);
    return f;
}

double happy_cat(const std::vector<double>& z) {
    const double n = static_cast<double>(z.size());
    double r2 = 0.0, sum = 0.0;
    for (double v : z) {
        const double t = v - 1.0;
        r2 += t * t;
        sum += t;
    }
    return std::pow(std::fabs(r2 - n), 0.25) + (0.5 * r2 + sum) / n + 0.5;
}

double ackley_basic(const std::vector<double>& z) {
    const double n = static_cast<double>(z.size());
    double sq = 0.0, cs = 0.0;
    for (double v : z) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    return std::numbers::e - 20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0;
}

struct CecSpec {
    const char* name;
    int dim;
    double range;
    double shrink; // input scale into the basic function's natural domain
    double (*basic)(const std::vector<double>&);
    bool transformable;
};

const CecSpec& cec_spec(int index) {
    static const CecSpec table[10] = {
        {"storn_chebyshev", 9, 8192.0, 1.0, storn_chebyshev, false},
        {"inverse_hilbert", 16, 16384.0, 1.0, inverse_hilbert, false},
        {"lennard_jones", 18, 4.0, 1.0, lennard_jones, false},
        {"rastrigin", 10, 100.0, 5.12 / 100.0, rastrigin_basic, true},
        {"griewank", 10, 100.0, 600.0 / 100.0, griewank_basic, true},
        {"weierstrass", 10, 100.0, 0.5 / 100.0, weierstrass_basic, true},
        {"modified_schwefel", 10, 100.0, 1000.0 / 100.0, modified_schwefel_basic, true},
        {"expanded_schaffer6", 10, 100.0, 1.0, expanded_schaffer6, true},
        {"happy_cat", 10, 100.0, 5.0 / 100.0, happy_cat, true},
        {"ackley", 10, 100.0, 1.0, ackley_basic, true},
    };
    return table[index - 1];
}

std::vector<double> apply_transform(const std::vector<double>& x, double shrink,
                                    const CecTransform& tr) {
    std::vector<double> z(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double shifted = tr.shift.empty() ? x[j] : x[j] - tr.shift[j];
        z[j] = shrink * shifted;
    }
    if (tr.rotation.empty()) return z;
    std::vector<double> r(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += tr.rotation[i][j] * z[j];
    }
    return r;
}

// Frozen optimum locations of the untransformed functions; validated by the
// optimum-consistency tests at 1e-6.
std::optional<std::vector<double>> base_optimum_location(int index) {
    switch (index) {
    case 1: // coefficients of the degree-8 Chebyshev polynomial
        return std::vector<double>{128, 0, -256, 0, 160, 0, -32, 0, 1};
    case 2: { // flattened inverse of the 4x4 Hilbert matrix
        return std::vector<double>{16,   -120, 240,   -140, -120, 1200, -2700, 1680,
                                   240,  -2700, 6480, -4200, -140, 1680, -4200, 2800};
    }
    case 3: { // regular octahedron at the pair-potential equilibrium scale
        const double t = 24.75 / (2.0 * 12.046875);
        const double a = std::pow(t, -1.0 / 6.0) / std::sqrt(2.0);
        return std::vector<double>{a, 0, 0, -a, 0, 0, 0, a, 0, 0, -a, 0, 0, 0, a, 0, 0, -a};
    }
    default:
        return std::vector<double>(cec_spec(index).dim, 0.0);
    }
}

} // namespace

CecTransform load_cec_transform(const std::string& path, int dim) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CEC data file: " + path);
    CecTransform tr;
    tr.shift.resize(dim);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": missing shift line");
    {
        std::istringstream ss(line);
        for (int j = 0; j < dim; ++j) {
            if (!(ss >> tr.shift[j]))
                throw std::runtime_error(path + ": shift line needs " + std::to_string(dim) +
                                         " values");
        }
    }
    tr.rotation.assign(dim, std::vector<double>(dim));
    for (int i = 0; i < dim; ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error(path + ": rotation matrix needs " + std::to_string(dim) +
                                     " rows");
        std::istringstream ss(line);
        for (int j = 0; j < dim; ++j) {
            if (!(ss >> tr.rotation[i][j]))
                throw std::runtime_error(path + ": rotation row " + std::to_string(i) +
                                         " needs " + std::to_string(dim) + " values");
        }
    }
    for (double v : tr.shift)
        if (!std::isfinite(v)) throw std::runtime_error(path + ": non-finite shift value");
    for (const auto& row : tr.rotation)
        for (double v : row)
            if (!std::isfinite(v)) throw std::runtime_error(path + ": non-finite rotation value");
    return tr;
}

Problem cec2019_problem(int index, const std::string& data_dir) {
    if (index < 1 || index > 10)
        throw std::invalid_argument("cec2019_problem: index must be in [1, 10]");
    const CecSpec& spec = cec_spec(index);

    Problem p;
    {
        char buf[8];
        std::snprintf(buf, sizeof buf, "CEC%02d", index);
        p.id = buf;
    }
    p.dim = spec.dim;
    p.bounds = Bounds::uniform(spec.dim, -spec.range, spec.range);
    p.known_optimum = 1.0;

    CecTransform tr;
    bool official = false;
    if (spec.transformable && !data_dir.empty()) {
        char name[16];
        std::snprintf(name, sizeof name, "cec%02d.txt", index);
        const auto path = std::filesystem::path(data_dir) / name;
        if (std::filesystem::exists(path)) {
            tr = load_cec_transform(path.string(), spec.dim);
            official = true;
        }
    }
    if (spec.transformable && !official) p.note = "unofficial: identity shift/rotation";

    if (spec.transformable) {
        // optimum sits at the shift point (z = 0 there)
        p.optimum_location =
            official ? tr.shift : std::vector<double>(spec.dim, 0.0);
    } else {
        p.optimum_location = base_optimum_location(index);
    }

    auto basic = spec.basic;
    const double shrink = spec.shrink;
    if (spec.transformable) {
        p.objective = [basic, shrink, tr](const std::vector<double>& x, RandomSource*) {
            return basic(apply_transform(x, shrink, tr)) + 1.0;
        };
    } else {
        p.objective = [basic](const std::vector<double>& x, RandomSource*) {
            return basic(x) + 1.0;
        };
    }
    return p;
}

} // namespace goose::benchmarks
