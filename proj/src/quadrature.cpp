#include "degen/quadrature.hpp"

#include <array>
#include <cmath>

namespace degen {

namespace {

constexpr int kNodes = 64;
constexpr int kPanels = 8;

struct Rule {
    std::array<double, kNodes> x; // nodes on (-1, 1)
    std::array<double, kNodes> w;
};

// Newton iteration on the Legendre recurrence (classic gauleg).
Rule make_rule() {
    Rule r{};
    const int m = (kNodes + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (kNodes + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < kNodes; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = kNodes * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        r.x[i] = -z;
        r.x[kNodes - 1 - i] = z;
        r.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.w[kNodes - 1 - i] = r.w[i];
    }
    return r;
}

const Rule& rule() {
    static const Rule r = make_rule();
    return r;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b) {
    const Rule& r = rule();
    const double panel_width = (b - a) / kPanels;
    double total = 0.0;
    for (int p = 0; p < kPanels; ++p) {
        const double lo = a + p * panel_width;
        const double mid = lo + 0.5 * panel_width;
        const double half = 0.5 * panel_width;
        double acc = 0.0;
        for (int i = 0; i < kNodes; ++i) acc += r.w[i] * f(mid + half * r.x[i]);
        total += acc * half;
    }
    return total;
}

} // namespace degen
