// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "forecastlab/prob.hpp"

namespace forecastlab {

// The four time marks of a question's life, in abstract days:
//   open          -- the question opens (t0)
//   entry         -- the forecaster's first prediction (t1)
//   close         -- the question actually closes or resolves (t2)
//   planned_close -- when it would have closed absent early resolution (t3)
struct QuestionTimeline {
    double open;
    double entry;
    double close;
    double planned_close;
};

// Throws std::invalid_argument unless open <= entry <= close <= planned_close.
void validate(const QuestionTimeline& timeline);

struct TrajectorySegment {
    double start;
    Probability reported;
};

// A piecewise-constant reported probability: segment k holds from its start
// until the next segment's start (the last one until the question closes).
// Segment starts must be strictly increasing; the first one is the
// forecaster's entry time.
class ForecastTrajectory {
  public:
    explicit ForecastTrajectory(std::vector<TrajectorySegment> segments);

    double entry_time() const { return segments_.front().start; }
    std::span<const TrajectorySegment> segments() const { return segments_; }
    // Reported probability at the close of the question (last segment).
    Probability final_report() const { return segments_.back().reported; }

  private:
    std::vector<TrajectorySegment> segments_;
};

// Which close mark the time average is normalized by.
enum class AveragingSpan {
    ActualClose,   // divide by close - open (truncated participation weight)
    PlannedClose,  // divide by planned_close - open (full-span weight)
};

// Time average of a per-instant score over the trajectory:
//   (1 / (span_end - open)) * sum over segments of f(reported) * duration,
// with segments clipped to [entry, close]. Exact for piecewise-constant
// trajectories; no quadrature involved.
//
// The trajectory must start at the timeline's entry mark (it covers
// [entry, close] by construction); a later start is a contract violation.
double trajectory_time_average(const ForecastTrajectory& trajectory,
                               const QuestionTimeline& timeline,
                               const std::function<double(Probability)>& per_instant,
                               AveragingSpan span);

}  // namespace forecastlab
