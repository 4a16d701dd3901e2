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

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "ncsim/catalog.hpp"
#include "ncsim/metrics.hpp"
#include "ncsim/net.hpp"

namespace ncsim {

/// The origin server. Holds every generation as a full-rank matrix of unit
/// coefficient vectors and answers each Interest with a fresh random
/// combination, so successive replies are innovative with high probability.
class SourceServer : public Node {
 public:
  SourceServer(NodeId id, std::string name, const ContentLibrary& lib,
               Emitter& emitter, MetricsLog& metrics, Rng& rng);

  void handle_interest(Face face, const Interest& interest, Time t) override;
  void handle_data(Face face, const DataEnvelope& data, Time t) override;

 private:
  const CodingMatrix& source_matrix(const NamePrefix& prefix);

  const ContentLibrary& lib_;
  Emitter& emitter_;
  MetricsLog& metrics_;
  Rng& rng_;
  // Materialized source generations, bounded FIFO; regeneration is
  // deterministic so eviction never changes behavior.
  std::map<NamePrefix, CodingMatrix> cache_;
  std::deque<NamePrefix> cache_order_;
};

struct ClientParams {
  int window = 16;                    // max Interests in flight per face
  Time interest_timeout = 2 * kSecond;
  double safety_factor = 0.9;         // headroom under the goodput estimate
  int low_buffer_threshold = 2;       // segments; below this, lowest quality
  double ewma_alpha = 0.5;
  Time pump_period = millis(250);
};

/// An adaptive streaming client. Fetches its video segment by segment,
/// generation by generation, keeping a window of Interests in flight per
/// face (round-robin across faces). A segment counts as delivered once every
/// generation decodes; decoded bytes are verified against the catalog's
/// seeded payloads. Measured per-segment goodput feeds an EWMA that drives
/// a throughput-threshold quality choice with a low-buffer safeguard.
class StreamingClient : public Node {
 public:
  StreamingClient(NodeId id, std::string name, const ContentLibrary& lib,
                  int video, Time start_time, ClientParams params,
                  std::vector<Face> faces, Emitter& emitter, MetricsLog& metrics,
                  Rng& rng);

  void start() override;
  void handle_interest(Face face, const Interest& interest, Time t) override;
  void handle_data(Face face, const DataEnvelope& data, Time t) override;

  /// Highest representation whose bitrate fits under safety * goodput; the
  /// lowest for the first segment or when the playback buffer runs low.
  const Representation& choose_representation() const;

  bool finished() const { return done_; }
  int buffered_segments() const { return static_cast<int>(completed_ - consumed_); }
  double goodput_estimate() const { return goodput_; }

  /// Issues Interests up to the per-face window and the generation's
  /// remaining demand; reissues timed-out ones first.
  void pump(Time t);

 private:
  void begin_segment(int segment, Time t);
  void complete_generation(Time t);
  void complete_segment(Time t);
  void try_play(Time t);
  void schedule_pump();
  NamePrefix current_prefix() const;

  const ContentLibrary& lib_;
  int video_;
  Time start_time_;
  ClientParams params_;
  std::vector<Face> faces_;
  Emitter& emitter_;
  MetricsLog& metrics_;
  Rng& rng_;

  int segment_ = 0;
  bool done_ = false;
  bool started_ = false;
  const Representation* rep_ = nullptr;
  const std::vector<GenerationSpec>* gens_ = nullptr;
  std::size_t gen_idx_ = 0;
  CodingMatrix decoder_;
  Time segment_request_time_ = 0;

  std::map<Face, std::deque<Time>> outstanding_;  // expiry per in-flight Interest
  std::size_t rr_ = 0;
  std::uint64_t nonce_ = 0;

  double goodput_ = 0.0;
  bool have_goodput_ = false;

  std::uint64_t completed_ = 0;  // segments decoded
  std::uint64_t consumed_ = 0;   // segments handed to playback
  bool playing_ = false;
};

}  // namespace ncsim
