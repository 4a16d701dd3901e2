/*
 * Copyright 2026 The netcodsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncsim/core.hpp"

namespace ncsim {

enum class InterestOutcome { CsHit, Aggregated, Forwarded, Dropped };

/// Everything a run records. Cache-hit samples follow the measurement
/// convention that satisfying an Interest locally, whether from the content
/// store or by PIT aggregation, counts as a hit.
class MetricsLog {
 public:
  struct RouterSeries {
    std::vector<std::pair<Time, std::uint8_t>> hit_samples;  // (t, h)
    std::uint64_t cs_hits = 0;
    std::uint64_t aggregated = 0;
    std::uint64_t forwarded = 0;
    std::uint64_t dropped = 0;
    std::uint64_t insertions = 0;
    std::uint64_t unsolicited = 0;
    std::uint64_t duplicates_discarded = 0;

    std::uint64_t interests_received() const {
      return cs_hits + aggregated + forwarded + dropped;
    }
  };

  struct ClientStats {
    std::vector<std::pair<Time, double>> goodput_samples;  // bits/s per segment
    std::map<std::string, std::uint64_t> rep_segments;     // per-ladder counts
    std::uint64_t segments_completed = 0;
    std::uint64_t data_received = 0;
    std::uint64_t retransmits = 0;
    bool finished = false;
  };

  std::map<std::string, RouterSeries> routers;
  std::map<std::string, ClientStats> clients;

  std::uint64_t source_sent = 0;
  std::uint64_t clients_received = 0;
  std::uint64_t link_enqueued = 0;
  std::uint64_t link_delivered = 0;

  /// Insertions per reply lineage, and which routers made them. Feeds the
  /// at-most-one-cache-per-path check.
  std::map<std::uint64_t, std::vector<std::string>> insertions_by_trace;

  void record_interest_outcome(const std::string& router, InterestOutcome outcome,
                               Time t);
  void record_insertion(const std::string& router, std::uint64_t trace_id);

  /// Mean of a router's hit samples within [t, t+T]; absent when the window
  /// holds none.
  std::optional<double> cache_hit_rate(const std::string& router, Time t,
                                       Time window) const;

  /// Whole-run per-router rate; absent with no samples.
  std::optional<double> router_hit_rate(const std::string& router) const;

  /// Whole-run rate over all routers' samples pooled together.
  std::optional<double> overall_hit_rate() const;

  /// 1 - source_sent / clients_received; absent when nothing was received.
  std::optional<double> load_reduction() const;

  /// Mean of a client's per-segment goodput samples.
  std::optional<double> client_mean_goodput(const std::string& client) const;

  /// Mean over clients of their mean goodput.
  std::optional<double> mean_goodput() const;

  /// Share of delivered segments per representation, over all clients.
  std::map<std::string, double> representation_shares() const;
};

}  // namespace ncsim
