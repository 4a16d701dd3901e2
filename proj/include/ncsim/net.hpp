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
#include <functional>
#include <string>

#include "ncsim/core.hpp"
#include "ncsim/name.hpp"
#include "ncsim/rlnc.hpp"

namespace ncsim {

/// A request for any innovative coded packet of a name prefix. No packet
/// numbers: receivers judge usefulness by linear independence.
struct Interest {
  NamePrefix prefix;
  std::uint64_t nonce = 0;
  /// Set by the first router on the path that decides to cache the expected
  /// reply; never cleared once set.
  bool caching_down = false;
};

/// A coded Data packet in flight, with a simulator-side lineage tag. The tag
/// follows one reply as it descends (including recoded hops) and is what the
/// at-most-one-cache instrumentation counts; it is not part of the packet.
struct DataEnvelope {
  CodedPacket packet;
  std::uint64_t trace_id = 0;
};

/// What nodes see of the simulation engine: message emission on their own
/// faces, the clock, callbacks, and fresh lineage tags.
class Emitter {
 public:
  virtual ~Emitter() = default;
  virtual void emit_interest(NodeId from, Face face, const Interest& interest) = 0;
  virtual void emit_data(NodeId from, Face face, const DataEnvelope& data) = 0;
  virtual void schedule(Time t, std::function<void()> fn) = 0;
  virtual Time now() const = 0;
  virtual std::uint64_t new_trace_id() = 0;
};

/// A single-threaded actor on the event loop. Handlers run to completion;
/// nodes share nothing and interact only through emitted messages.
class Node {
 public:
  Node(NodeId id, std::string name) : id_(id), name_(std::move(name)) {}
  virtual ~Node() = default;

  NodeId id() const { return id_; }
  const std::string& name() const { return name_; }

  virtual void start() {}
  virtual void handle_interest(Face face, const Interest& interest, Time t) = 0;
  virtual void handle_data(Face face, const DataEnvelope& data, Time t) = 0;

 private:
  NodeId id_;
  std::string name_;
};

}  // namespace ncsim
