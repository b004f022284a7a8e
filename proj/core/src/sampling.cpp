#include "vietlab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vietlab {

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::truncated_normal(double sigma, double cut) {
    while (true) {
        const double z = normal();
        if (std::abs(z) <= cut) return sigma * z;
    }
}

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(gen_() % span);
}

std::vector<double> Rng::simplex_point(int k) {
    std::vector<double> weights(static_cast<std::size_t>(k));
    double total = 0.0;
    for (double& w : weights) {
        double u = uniform();
        while (u == 0.0) u = uniform();
        w = -std::log(u);
        total += w;
    }
    for (double& w : weights) w /= total;
    return weights;
}

PointCloud circle_cloud(int n, double noise, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("circle sample needs at least one point");
    if (noise < 0.0) throw std::invalid_argument("noise must be non-negative");
    Rng rng(seed);
    PointCloud cloud(2);
    for (int i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / n;
        const double radius = 1.0 + (noise > 0.0 ? rng.truncated_normal(noise) : 0.0);
        const double point[2] = {radius * std::cos(angle), radius * std::sin(angle)};
        cloud.add(point);
    }
    return cloud;
}

PointCloud torus_grid_cloud(int major_steps, int minor_steps) {
    if (major_steps < 3 || minor_steps < 3)
        throw std::invalid_argument("torus grid needs at least 3 steps per circle");
    constexpr double kMajor = 2.0, kMinor = 1.0;
    PointCloud cloud(3);
    for (int a = 0; a < major_steps; ++a)
        for (int b = 0; b < minor_steps; ++b) {
            const double phi = 2.0 * std::numbers::pi * a / major_steps;
            const double psi = 2.0 * std::numbers::pi * b / minor_steps;
            const double ring = kMajor + kMinor * std::cos(psi);
            const double point[3] = {ring * std::cos(phi), ring * std::sin(phi),
                                     kMinor * std::sin(psi)};
            cloud.add(point);
        }
    return cloud;
}

PointCloud random_point_cloud(int n, int dim, double scale, Rng& rng) {
    PointCloud cloud(dim);
    std::vector<double> point(static_cast<std::size_t>(dim));
    for (int i = 0; i < n; ++i) {
        for (double& c : point) c = rng.uniform(0.0, scale);
        cloud.add(point);
    }
    return cloud;
}

std::vector<Subset> random_covering_family(int point_count, Rng& rng) {
    const int elements = rng.uniform_int(2, 5);
    std::vector<std::vector<int>> raw(static_cast<std::size_t>(elements));
    for (auto& element : raw) {
        for (int p = 0; p < point_count; ++p)
            if (rng.uniform() < 0.45) element.push_back(p);
    }
    // patch: every point must land somewhere, empty elements get one point
    for (int p = 0; p < point_count; ++p) {
        bool covered = false;
        for (const auto& element : raw)
            covered = covered || std::find(element.begin(), element.end(), p) != element.end();
        if (!covered) raw[static_cast<std::size_t>(rng.uniform_int(0, elements - 1))].push_back(p);
    }
    std::vector<Subset> family;
    for (auto& element : raw) {
        if (element.empty()) element.push_back(rng.uniform_int(0, point_count - 1));
        family.push_back(Subset::of(std::move(element)));
    }
    return family;
}

DiscreteMeasure random_measure(const Subset& pool, int max_support, Rng& rng) {
    if (pool.empty()) throw std::invalid_argument("empty support pool");
    const int k = rng.uniform_int(1, std::min(max_support, pool.size()));
    std::vector<int> chosen(pool.begin(), pool.end());
    for (int i = 0; i < k; ++i) {
        const int j = rng.uniform_int(i, static_cast<int>(chosen.size()) - 1);
        std::swap(chosen[static_cast<std::size_t>(i)], chosen[static_cast<std::size_t>(j)]);
    }
    chosen.resize(static_cast<std::size_t>(k));
    const auto weights = rng.simplex_point(k);
    std::vector<DiscreteMeasure::Atom> atoms;
    for (int i = 0; i < k; ++i) atoms.push_back({chosen[static_cast<std::size_t>(i)], weights[static_cast<std::size_t>(i)]});
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

}  // namespace vietlab
