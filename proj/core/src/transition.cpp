#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "admd/multiscale.hpp"

namespace admd {

TransitionPotential TransitionPotential::tabulated(std::vector<double> lambdas,
                                                   std::vector<double> energies) {
    if (lambdas.size() != energies.size() || lambdas.size() < 2)
        throw std::invalid_argument("transition table needs at least two (lambda, energy) rows");
    for (std::size_t i = 1; i < lambdas.size(); ++i)
        if (!(lambdas[i] > lambdas[i - 1]))
            throw std::invalid_argument("transition table lambdas must be strictly increasing");
    if (lambdas.front() > 0.0 || lambdas.back() < 1.0)
        throw std::invalid_argument("transition table must cover the whole hybrid zone [0, 1]");
    for (double e : energies)
        if (!std::isfinite(e)) throw std::invalid_argument("transition table energy not finite");

    TransitionPotential vt;
    vt.knots_ = std::move(lambdas);
    vt.values_ = std::move(energies);

    // Natural cubic spline: tridiagonal solve for the second derivatives.
    const std::size_t n = vt.knots_.size();
    vt.second_.assign(n, 0.0);
    if (n > 2) {
        std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double h0 = vt.knots_[i] - vt.knots_[i - 1];
            const double h1 = vt.knots_[i + 1] - vt.knots_[i];
            diag[i] = 2.0 * (h0 + h1);
            upper[i] = h1;
            rhs[i] = 6.0 * ((vt.values_[i + 1] - vt.values_[i]) / h1 -
                            (vt.values_[i] - vt.values_[i - 1]) / h0);
        }
        // Forward elimination (lower diagonal equals previous h).
        for (std::size_t i = 2; i + 1 < n; ++i) {
            const double h0 = vt.knots_[i] - vt.knots_[i - 1];
            const double w = h0 / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            vt.second_[i] = (rhs[i] - upper[i] * vt.second_[i + 1]) / diag[i];
            if (i == 1) break;
        }
    }
    return vt;
}

std::size_t TransitionPotential::segment(double lam) const {
    if (lam < knots_.front() || lam > knots_.back())
        throw std::out_of_range("lambda outside transition table range");
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), lam);
    std::size_t hi = std::size_t(it - knots_.begin());
    if (hi == knots_.size()) --hi;
    if (hi == 0) ++hi;
    return hi;
}

double TransitionPotential::value(double lam) const {
    if (is_zero()) return 0.0;
    const std::size_t hi = segment(lam);
    const std::size_t lo = hi - 1;
    const double h = knots_[hi] - knots_[lo];
    const double a = (knots_[hi] - lam) / h;
    const double b = (lam - knots_[lo]) / h;
    return a * values_[lo] + b * values_[hi] +
           ((a * a * a - a) * second_[lo] + (b * b * b - b) * second_[hi]) * h * h / 6.0;
}

double TransitionPotential::derivative(double lam) const {
    if (is_zero()) return 0.0;
    const std::size_t hi = segment(lam);
    const std::size_t lo = hi - 1;
    const double h = knots_[hi] - knots_[lo];
    const double a = (knots_[hi] - lam) / h;
    const double b = (lam - knots_[lo]) / h;
    return (values_[hi] - values_[lo]) / h +
           ((3.0 * b * b - 1.0) * second_[hi] - (3.0 * a * a - 1.0) * second_[lo]) * h / 6.0;
}

TransitionPotential TransitionPotential::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open transition table: " + path.string());

    std::string line;
    bool mode_seen = false;
    bool zero_mode = false;
    std::vector<double> lambdas, energies;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string first;
        if (!(row >> first)) continue;
        if (!mode_seen) {
            std::string mode;
            if (first != "mode" || !(row >> mode) || (mode != "zero" && mode != "tabulated"))
                throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                         ": expected header 'mode zero|tabulated'");
            mode_seen = true;
            zero_mode = (mode == "zero");
            continue;
        }
        double lam, e;
        try {
            lam = std::stod(first);
        } catch (const std::exception&) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": malformed table row");
        }
        if (!(row >> e))
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": malformed table row");
        lambdas.push_back(lam);
        energies.push_back(e);
    }
    if (!mode_seen) throw std::runtime_error(path.string() + ": missing 'mode' header");
    if (zero_mode) return zero();
    try {
        return tabulated(std::move(lambdas), std::move(energies));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

Vec3 transition_force(double mass_fraction, double lam, double lam_prime,
                      const TransitionPotential& vt) {
    if (vt.is_zero() || lam_prime == 0.0) return {};
    return {-vt.derivative(lam) * lam_prime * mass_fraction, 0.0, 0.0};
}

} // namespace admd
