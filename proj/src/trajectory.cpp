// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#include "forecastlab/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace forecastlab {

void validate(const QuestionTimeline& timeline) {
    if (!(timeline.open <= timeline.entry && timeline.entry <= timeline.close &&
          timeline.close <= timeline.planned_close)) {
        throw std::invalid_argument("QuestionTimeline: requires open <= entry <= close <= planned_close");
    }
    if (!std::isfinite(timeline.open) || !std::isfinite(timeline.planned_close)) {
        throw std::invalid_argument("QuestionTimeline: non-finite time mark");
    }
}

ForecastTrajectory::ForecastTrajectory(std::vector<TrajectorySegment> segments)
    : segments_(std::move(segments)) {
    if (segments_.empty()) {
        throw std::invalid_argument("ForecastTrajectory: no segments");
    }
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        if (!(segments_[i - 1].start < segments_[i].start)) {
            throw std::invalid_argument("ForecastTrajectory: segment starts must strictly increase");
        }
    }
}

double trajectory_time_average(const ForecastTrajectory& trajectory,
                               const QuestionTimeline& timeline,
                               const std::function<double(Probability)>& per_instant,
                               AveragingSpan span) {
    validate(timeline);
    if (trajectory.entry_time() > timeline.entry) {
        throw std::invalid_argument("trajectory does not cover [entry, close]");
    }
    const double span_end =
        span == AveragingSpan::ActualClose ? timeline.close : timeline.planned_close;
    const double denominator = span_end - timeline.open;
    if (denominator <= 0.0) {
        throw std::domain_error("trajectory_time_average: degenerate timeline span");
    }

    const auto segments = trajectory.segments();
    double weighted = 0.0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const double seg_start = std::max(segments[i].start, timeline.entry);
        const double seg_end =
            i + 1 < segments.size() ? std::min(segments[i + 1].start, timeline.close)
                                    : timeline.close;
        if (seg_end > seg_start) {
            weighted += per_instant(segments[i].reported) * (seg_end - seg_start);
        }
    }
    return weighted / denominator;
}

}  // namespace forecastlab
