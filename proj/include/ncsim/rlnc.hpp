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
#include <span>
#include <vector>

#include "ncsim/core.hpp"
#include "ncsim/name.hpp"

namespace ncsim {

/// A network-coded Data packet. coeffs has one byte per source packet of the
/// generation; payload is the same linear combination applied to the source
/// payloads. Source packets are the special case of a unit coefficient
/// vector, so one type serves sources, routers and clients alike.
struct CodedPacket {
  NamePrefix prefix;
  std::vector<std::uint8_t> coeffs;
  std::vector<std::uint8_t> payload;
  /// Set by the router that inserts this packet into its content store;
  /// tells downstream routers the information is already cached upstream.
  bool cached_up = false;
};

struct CodedRow {
  std::vector<std::uint8_t> coeffs;
  std::vector<std::uint8_t> payload;
};

/// Incrementally maintained row-echelon form over the coefficient space.
/// Rows are normalized to a leading 1 and kept sorted by pivot column, so
/// membership tests and inserts are a single forward reduction.
class EchelonBasis {
 public:
  std::size_t rank() const { return rows_.size(); }

  /// True iff the vector is independent of the rows seen so far.
  bool would_grow(std::span<const std::uint8_t> coeffs) const;

  /// Inserts if independent; returns whether the rank grew.
  bool add(std::span<const std::uint8_t> coeffs);

  void clear();

 private:
  // Returns the pivot of the reduced vector, or npos if it vanished.
  std::size_t reduce(std::vector<std::uint8_t>& v) const;

  std::vector<std::vector<std::uint8_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// A generation's worth of coded rows: the stored form of a content-store
/// entry and of a client's decoder state. Row storage keeps the raw packets
/// (coefficients plus payloads); an echelon basis over the coefficients is
/// maintained alongside so rank and innovativeness checks are cheap.
class CodingMatrix {
 public:
  CodingMatrix() = default;
  explicit CodingMatrix(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t row_count() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// rank of the coefficient rows; 0 for an empty matrix.
  std::size_t rank() const { return basis_.rank(); }

  /// True iff appending p would raise the rank by one. Throws
  /// std::invalid_argument on a coefficient-width mismatch.
  bool is_innovative(const CodedPacket& p) const;

  /// Appends the packet as a row. Returns whether the rank grew (the row is
  /// stored either way; callers that only want innovative rows check first).
  bool append(const CodedPacket& p);

  /// Removes the given row indices and rebuilds the basis.
  void remove_rows(std::vector<std::size_t> indices);

  const CodedRow& row(std::size_t i) const { return rows_[i]; }

  /// Random linear recombination of all rows; coefficients drawn uniformly
  /// from [0, 255], redrawn if the combined coefficient vector comes out
  /// zero. Throws std::logic_error on an empty matrix.
  CodedPacket recode(Rng& rng) const;

  /// Deterministic recombination with caller-chosen per-row multipliers.
  CodedPacket recode_with(std::span<const std::uint8_t> draws) const;

  /// Full Gauss-Jordan decode. Requires rank() == width(); returns the
  /// original source payloads in index order. Throws std::logic_error on a
  /// rank-deficient matrix.
  std::vector<std::vector<std::uint8_t>> decode() const;

 private:
  std::size_t width_ = 0;
  std::vector<CodedRow> rows_;
  EchelonBasis basis_;
};

/// Reference rank by plain Gaussian elimination over copies of the rows.
std::size_t gauss_rank(std::vector<std::vector<std::uint8_t>> rows);

}  // namespace ncsim
