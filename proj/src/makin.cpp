#include "crnkit/makin.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace crnkit {

int rate_index(const Reaction& reaction, std::size_t position) {
    const std::string& label = reaction.label;
    if (label.size() > 1 && label[0] == 'R') {
        int value = 0;
        auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), value);
        if (ec == std::errc() && ptr == label.data() + label.size() && value > 0) {
            return value;
        }
    }
    return static_cast<int>(position) + 1;
}

std::vector<double> rates_for(const Network& net, const RateAssignment& k) {
    std::vector<double> out;
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
        const int i = rate_index(net.reactions()[j], j);
        auto it = k.find(i);
        if (it == k.end()) {
            throw std::invalid_argument("missing rate constant k" + std::to_string(i));
        }
        out.push_back(it->second);
    }
    return out;
}

namespace {

void check_inputs(const Network& net, const std::vector<double>& k, const Concentrations& x) {
    if (k.size() != net.reaction_count()) {
        throw std::invalid_argument("one rate constant per reaction required");
    }
    for (double v : k) {
        if (!(v > 0.0)) {
            throw std::invalid_argument("rate constants must be positive");
        }
    }
    for (const auto& s : net.species()) {
        auto it = x.find(s);
        if (it == x.end()) {
            throw std::invalid_argument("missing concentration of " + s);
        }
        if (!(it->second > 0.0)) {
            throw std::invalid_argument("concentration of " + s + " must be positive");
        }
    }
}

double reaction_rate(const Reaction& r, double k, const Concentrations& x) {
    double rate = k;
    for (const auto& [name, coef] : r.reactant.terms()) {
        rate *= std::pow(x.at(name), static_cast<double>(coef));
    }
    return rate;
}

}  // namespace

Concentrations mass_action_rhs(const Network& net, const std::vector<double>& k, const Concentrations& x) {
    check_inputs(net, k, x);
    Concentrations f;
    for (const auto& s : net.species()) {
        f[s] = 0.0;
    }
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
        const Reaction& r = net.reactions()[j];
        const double rate = reaction_rate(r, k[j], x);
        for (const auto& [name, v] : r.reaction_vector()) {
            f[name] += rate * static_cast<double>(v);
        }
    }
    return f;
}

Concentrations mass_action_rhs(const Network& net, const RateAssignment& k, const Concentrations& x) {
    return mass_action_rhs(net, rates_for(net, k), x);
}

double equilibrium_residual(const Network& net, const std::vector<double>& k, const Concentrations& x) {
    check_inputs(net, k, x);
    Concentrations f;
    Concentrations gross;
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
        const Reaction& r = net.reactions()[j];
        const double rate = reaction_rate(r, k[j], x);
        for (const auto& [name, v] : r.reaction_vector()) {
            f[name] += rate * static_cast<double>(v);
            if (v > 0) {
                gross[name] += rate * static_cast<double>(v);
            }
        }
    }
    double worst = 0.0;
    for (const auto& [name, value] : f) {
        worst = std::max(worst, std::abs(value) / std::max(1.0, gross[name]));
    }
    return worst;
}

double equilibrium_residual(const Network& net, const RateAssignment& k, const Concentrations& x) {
    return equilibrium_residual(net, rates_for(net, k), x);
}

namespace {

class Inputs {
public:
    Inputs(const RateAssignment& k, const FreeParameters& free) : k_(k), free_(free) {}

    double k(int i) const {
        auto it = k_.find(i);
        if (it == k_.end()) {
            throw std::invalid_argument("missing rate constant k" + std::to_string(i));
        }
        return it->second;
    }

    double p(const std::string& name) const {
        auto it = free_.find(name);
        if (it == free_.end()) {
            throw std::invalid_argument("missing free parameter " + name);
        }
        if (!(it->second > 0.0)) {
            throw std::invalid_argument("free parameter " + name + " must be positive");
        }
        return it->second;
    }

private:
    const RateAssignment& k_;
    const FreeParameters& free_;
};

Concentrations schmitz(const RateAssignment& rates, const FreeParameters& free) {
    const Inputs in(rates, free);
    auto k = [&](int i) { return in.k(i); };
    const double s1 = in.p("sigma1");
    const double t2 = in.p("tau2");
    const double s2 = k(16) * k(6) * k(11) * (k(5) + k(10)) * s1 / (k(17) * k(4) * k(10) * (k(7) + k(11)));
    const double den = k(2) * s2 + k(3) * s1 + s1 * s2;
    Concentrations a;
    a["A1"] = s1 * (k(5) + k(10)) / (k(4) * k(10));
    a["A2"] = k(14) * s1 * (k(5) + k(10)) / (k(4) * k(10) * k(15));
    a["A3"] = s2 * (k(7) + k(11)) / (k(6) * k(11));
    a["A4"] = k(1) * (k(3) + s2) / den;
    a["A5"] = k(1) * k(2) / den;
    a["A6"] = t2;
    a["A7"] = k(1) * k(2) * k(8) * t2 / (k(9) * den);
    a["A8"] = k(1) * s1 * (k(3) + s2) / (k(10) * den);
    a["A9"] = k(1) * k(2) * s2 / (k(11) * den);
    a["A10"] = k(1) * s1 * (k(3) + s2) / (k(12) * den);
    a["A11"] = k(1) * k(2) * s2 / (k(13) * den);
    return a;
}

Concentrations fal(const RateAssignment& rates, const FreeParameters& free) {
    const Inputs in(rates, free);
    auto k = [&](int i) { return in.k(i); };
    const double s2 = in.p("sigma2");
    const double a7 = in.p("a7");
    const double a23 = in.p("a23");
    Concentrations a;
    a["A2"] = k(55) * s2 * a23 / (k(54) * (k(53) + s2));
    const double a2 = a["A2"];
    const double d = k(38) * k(5) * k(14) + k(38) * k(14) * k(45) + a2 * k(4) * k(15) * k(45);
    a["A1"] = a2 * k(15) / k(14);
    a["A4"] = k(1) * k(14) * (k(5) + k(45)) / d;
    a["A6"] = a7 * k(50) * d / (k(1) * k(14) * k(49) * (k(5) + k(45)));
    a["A7"] = a7;
    a["A8"] = a2 * k(1) * k(4) * k(15) / d;
    a["A10"] = a2 * k(1) * k(4) * k(15) * k(45) / (k(12) * d);
    a["A13"] = k(54) / s2;
    a["A12"] = a["A13"] * k(19) / k(18);
    a["A23"] = a23;
    a["A27"] = a23 * k(1) * k(14) * k(44) * k(48) * k(51) * (k(5) + k(45)) / (k(43) * k(47) * k(52) * d);
    a["A24"] = a["A27"] * k(52) * d / (k(1) * k(14) * k(51) * (k(5) + k(45)));
    a["A25"] = a2 * k(1) * k(4) * k(15) * k(45) / (k(46) * d);
    a["A26"] = k(47) / k(48);
    a["A28"] = a23 * k(53) * k(55) / (k(56) * (k(53) + s2));
    return a;
}

Concentrations maclean(const RateAssignment& rates, const FreeParameters& free) {
    const Inputs in(rates, free);
    auto k = [&](int i) { return in.k(i); };
    const double s1 = in.p("sigma1");
    const double s2 = in.p("sigma2");
    const double d12 = in.p("d12");
    const double t12 = in.p("tau12");
    const double t13 = in.p("tau13");

    const double inner = k(2) * k(7) + k(2) * k(37) + s2 * k(37) + k(39) * k(37) + k(3) * k(7) + k(39) * k(7);
    const double K1 = (k(5) + k(36)) * s1 * k(6) * k(1) * inner;
    const double K2 = k(4) * k(6) * k(1) * (k(5) + k(36)) * (k(37) * s2 + (k(3) + k(39)) * (k(7) + k(37)));
    const double K3 = k(4) * k(6) * k(2) * k(1) * (k(5) + k(36)) * (k(7) + k(37));
    const double K4 = k(4) * k(2) * s2 * k(1) * (k(5) + k(36)) * (k(7) + k(37));
    const double K5 = k(4) * s1 * k(6) * k(1) * inner;
    const double K6 =
        k(4) * k(6) *
        (k(36) * s1 *
             (k(7) * k(2) + k(7) * k(3) + k(37) * k(2) + k(7) * k(39) + k(37) * k(39) + k(37) * s2) +
         (k(5) + k(36)) * (k(37) * s2 * k(2) + k(7) * k(39) * k(2) + k(37) * k(39) * k(2) + k(37) * s2 * k(38) +
                           k(7) * k(3) * k(38) + k(7) * k(39) * k(38) + k(37) * k(3) * k(38) +
                           k(37) * k(39) * k(38)));
    const double K7 = k(4) * k(6) * k(2) * s2 * k(1) * (k(5) + k(36));

    const double d_an = (k(25) + k(26)) / (k(24) * k(26)) * k(29) * (K3 / K4) * t13;
    const double ratio = (K1 * K3) / (K2 * K4);
    const double c_yd = k(21) / k(20) * (k(29) * k(30)) / (k(24) * k(26)) * (k(25) + k(26)) / (k(31) + k(32)) *
                        ratio * t13;
    Concentrations a;
    a["A1"] = K1 / K2;
    a["A2"] = k(23) / k(22) * (k(28) + k(29)) / k(27) * t13 / t12;
    a["A3"] = K4 / K3;
    a["A4"] = K2 / K6;
    a["A5"] = K3 / K6;
    a["A6"] = d12;
    a["A7"] = k(8) / k(9) * K3 / K6 * d12;
    a["A8"] = K5 / K6;
    a["A9"] = K7 / K6;
    a["A12"] = k(19) / k(18) * k(21) / k(20) * d_an;
    a["A13"] = k(21) / k(20) * d_an;
    a["A14"] = d_an;
    a["A15"] = (k(28) + k(29)) / k(27) * t13 / t12;
    a["A16"] = k(21) / k(20) * k(22) / k(23) * k(29) / k(35) * k(27) / (k(24) * k(26)) * (k(25) + k(26)) /
               (k(28) + k(29)) * (k(30) * k(32)) / k(33) * (k(34) + k(35)) / (k(31) + k(32)) * ratio * t12;
    a["A17"] = t12;
    a["A18"] = c_yd;
    a["A19"] = k(29) / k(26) * t13;
    a["A20"] = k(32) / k(35) * c_yd;
    a["A21"] = t13;
    return a;
}

}  // namespace

const std::vector<ParametrizationFixture>& parametrization_fixtures() {
    static const std::vector<ParametrizationFixture> fixtures{
        {"schmitz", "schmitz", {"sigma1", "tau2"}, schmitz},
        {"fal", "fal", {"sigma2", "a7", "a23"}, fal},
        {"maclean", "maclean", {"sigma1", "sigma2", "d12", "tau12", "tau13"}, maclean},
    };
    return fixtures;
}

const ParametrizationFixture& parametrization_fixture(std::string_view name) {
    for (const auto& f : parametrization_fixtures()) {
        if (f.name == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown parametrization '" + std::string(name) + "'");
}

Concentrations parametrization(std::string_view name, const RateAssignment& k, const FreeParameters& free) {
    return parametrization_fixture(name).evaluate(k, free);
}

double log_uniform(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> exponent(-2.0, 2.0);
    return std::pow(10.0, exponent(rng));
}

RateAssignment random_rates(const Network& net, std::mt19937_64& rng) {
    RateAssignment k;
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
        k[rate_index(net.reactions()[j], j)] = log_uniform(rng);
    }
    return k;
}

FreeParameters random_free_parameters(const ParametrizationFixture& fixture, std::mt19937_64& rng) {
    FreeParameters p;
    for (const auto& name : fixture.freeParameters) {
        p[name] = log_uniform(rng);
    }
    return p;
}

std::vector<AcrVerdict> acr_scan(std::string_view name, const RateAssignment& k, std::size_t sample_count,
                                 std::uint64_t seed) {
    if (sample_count < 2) {
        throw std::invalid_argument("acr_scan needs at least two samples");
    }
    const ParametrizationFixture& fixture = parametrization_fixture(name);
    std::mt19937_64 rng(seed);
    std::map<std::string, std::vector<double>> values;
    for (std::size_t i = 0; i < sample_count; ++i) {
        for (const auto& [species, v] : fixture.evaluate(k, random_free_parameters(fixture, rng))) {
            values[species].push_back(v);
        }
    }
    std::vector<AcrVerdict> out;
    for (const auto& [species, vs] : values) {
        const auto [lo, hi] = std::minmax_element(vs.begin(), vs.end());
        double sum = 0.0;
        for (double v : vs) {
            sum += v;
        }
        AcrVerdict v{species, false, (*hi - *lo) / std::max(std::abs(*lo), std::abs(*hi)),
                     sum / static_cast<double>(vs.size())};
        v.constant = v.spread < acr_tolerance;
        out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](const AcrVerdict& a, const AcrVerdict& b) {
        if (a.species.size() != b.species.size()) {
            return a.species.size() < b.species.size();
        }
        return a.species < b.species;
    });
    return out;
}

}  // namespace crnkit
