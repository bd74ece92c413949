// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "forecastlab/rng.hpp"

namespace forecastlab {

// A probability value, checked to lie in [0, 1] on construction.
class Probability {
  public:
    Probability() = default;
    explicit Probability(double value);

    double value() const { return value_; }

    friend bool operator==(Probability a, Probability b) { return a.value_ == b.value_; }

  private:
    double value_ = 0.0;
};

// Location/scale parameters of a logistic distribution. `spread` is the scale
// parameter s of the density exp(-(x-loc)/s) / (s (1+exp(-(x-loc)/s))^2); the
// true standard deviation is s*pi/sqrt(3). Callers working in standard
// deviation units should convert with logistic_scale_from_sd first.
struct LogisticParams {
    double location = 0.0;
    double spread = 1.0;
};

// Throws std::domain_error unless spread > 0 and both fields are finite.
void validate(const LogisticParams& params);

double logistic_scale_from_sd(double sd);

double logistic_pdf(double x, const LogisticParams& params);
double logistic_log_pdf(double x, const LogisticParams& params);
double logistic_cdf(double x, const LogisticParams& params);
// Inverse CDF; u must be in (0, 1).
double logistic_quantile(double u, const LogisticParams& params);
// Inverse-CDF draw: location + spread * ln(u / (1 - u)).
double logistic_sample(RandomStream& stream, const LogisticParams& params);
// Repeats logistic_sample until the draw is positive.
double logistic_sample_positive(RandomStream& stream, const LogisticParams& params);

// Shifts p by `bits` in base-2 log-odds space. p must be strictly inside
// (0, 1); a shift of 0 bits is the identity.
Probability logodds_shift(Probability p, double bits);

// A continuous question: the distribution the resolution value is drawn from,
// plus the resolution itself once resolved.
struct ContinuousQuestion {
    LogisticParams truth;
    std::optional<double> resolution;
};

// Draws a question whose location is 0 and whose spread is itself a logistic
// draw from (meta_location, meta_spread), re-drawn until positive. The
// resolution is drawn from the resulting distribution.
ContinuousQuestion generate_question(RandomStream& stream, double meta_location,
                                     double meta_spread);

// A binary question. The outcome, once resolved, is immutable.
class BinaryQuestion {
  public:
    explicit BinaryQuestion(Probability true_prob) : true_prob_(true_prob) {}

    Probability true_prob() const { return true_prob_; }
    bool resolved() const { return outcome_.has_value(); }
    // Throws std::logic_error if called twice or on an unresolved read.
    void resolve(bool outcome);
    bool outcome() const;

  private:
    Probability true_prob_;
    std::optional<bool> outcome_;
};

}  // namespace forecastlab
