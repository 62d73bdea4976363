#include "chainrad/quadrature.hpp"

#include "chainrad/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace chainrad {

GaussLegendreRule gauss_legendre(int points) {
    if (points < 1) throw ContractViolation("points", "Gauss-Legendre rule needs at least one node");
    GaussLegendreRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    const int half = (points + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // three-term recurrence for P_n(x) and P_{n-1}(x)
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= points; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            derivative = points * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / derivative;
            x -= step;
            if (std::abs(step) < 1e-15) break;
            if (iter == 99)
                throw ConvergenceError("Gauss-Legendre node " + std::to_string(i) + " of " + std::to_string(points) +
                                       " did not converge");
        }
        // recompute P_n' at the converged node for the weight
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= points; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        derivative = points * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
        rule.nodes[i] = -x;
        rule.nodes[points - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[points - 1 - i] = w;
    }
    if (points % 2 == 1) rule.nodes[points / 2] = 0.0;
    return rule;
}

}  // namespace chainrad
