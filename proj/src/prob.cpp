// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#include "forecastlab/prob.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace forecastlab {

Probability::Probability(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::domain_error("Probability out of [0, 1]: " + std::to_string(value));
    }
}

void validate(const LogisticParams& params) {
    if (!std::isfinite(params.location) || !std::isfinite(params.spread) ||
        params.spread <= 0.0) {
        throw std::domain_error("invalid logistic parameters");
    }
}

double logistic_scale_from_sd(double sd) {
    return sd * std::numbers::sqrt3 / std::numbers::pi;
}

double logistic_pdf(double x, const LogisticParams& params) {
    validate(params);
    if (!std::isfinite(x)) {
        throw std::domain_error("logistic_pdf: non-finite x");
    }
    // Symmetric form: exp(-|z|) keeps the intermediate in (0, 1].
    const double z = std::fabs((x - params.location) / params.spread);
    const double t = std::exp(-z);
    return t / (params.spread * (1.0 + t) * (1.0 + t));
}

double logistic_log_pdf(double x, const LogisticParams& params) {
    validate(params);
    if (!std::isfinite(x)) {
        throw std::domain_error("logistic_log_pdf: non-finite x");
    }
    const double z = std::fabs((x - params.location) / params.spread);
    return -z - 2.0 * std::log1p(std::exp(-z)) - std::log(params.spread);
}

double logistic_cdf(double x, const LogisticParams& params) {
    validate(params);
    const double z = (x - params.location) / params.spread;
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double logistic_quantile(double u, const LogisticParams& params) {
    validate(params);
    if (!(u > 0.0 && u < 1.0)) {
        throw std::domain_error("logistic_quantile: u must be in (0, 1)");
    }
    return params.location + params.spread * std::log(u / (1.0 - u));
}

double logistic_sample(RandomStream& stream, const LogisticParams& params) {
    return logistic_quantile(stream.unit_open(), params);
}

double logistic_sample_positive(RandomStream& stream, const LogisticParams& params) {
    double draw;
    do {
        draw = logistic_sample(stream, params);
    } while (draw <= 0.0);
    return draw;
}

Probability logodds_shift(Probability p, double bits) {
    const double v = p.value();
    if (v <= 0.0 || v >= 1.0) {
        throw std::domain_error("logodds_shift: probability has infinite log-odds");
    }
    if (!std::isfinite(bits)) {
        throw std::domain_error("logodds_shift: non-finite shift");
    }
    const double shifted = std::log2(v / (1.0 - v)) + bits;
    // Base-2 logistic; the exp2 form is exact for large |shifted| where the
    // result saturates toward 0 or 1.
    return Probability(1.0 / (1.0 + std::exp2(-shifted)));
}

ContinuousQuestion generate_question(RandomStream& stream, double meta_location,
                                     double meta_spread) {
    if (!(meta_spread > 0.0) || !std::isfinite(meta_location)) {
        throw std::domain_error("generate_question: invalid meta parameters");
    }
    const double spread = logistic_sample_positive(stream, {meta_location, meta_spread});
    const LogisticParams truth{0.0, spread};
    return ContinuousQuestion{truth, logistic_sample(stream, truth)};
}

void BinaryQuestion::resolve(bool outcome) {
    if (outcome_.has_value()) {
        throw std::logic_error("BinaryQuestion: outcome already set");
    }
    outcome_ = outcome;
}

bool BinaryQuestion::outcome() const {
    if (!outcome_.has_value()) {
        throw std::logic_error("BinaryQuestion: not resolved");
    }
    return *outcome_;
}

}  // namespace forecastlab
