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

#include "ncsim/rlnc.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncsim/gf256.hpp"

namespace ncsim {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

std::size_t first_nonzero(const std::vector<std::uint8_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return kNpos;
}

}  // namespace

std::size_t EchelonBasis::reduce(std::vector<std::uint8_t>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint8_t c = v[pivots_[k]];
    if (c != 0) gf256::axpy(v, rows_[k], c);
  }
  return first_nonzero(v);
}

bool EchelonBasis::would_grow(std::span<const std::uint8_t> coeffs) const {
  std::vector<std::uint8_t> v(coeffs.begin(), coeffs.end());
  return reduce(v) != kNpos;
}

bool EchelonBasis::add(std::span<const std::uint8_t> coeffs) {
  std::vector<std::uint8_t> v(coeffs.begin(), coeffs.end());
  const std::size_t p = reduce(v);
  if (p == kNpos) return false;
  gf256::scale(v, gf256::inv(v[p]));
  // Keep rows ordered by pivot column so reduce() is a single forward pass.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

void EchelonBasis::clear() {
  rows_.clear();
  pivots_.clear();
}

bool CodingMatrix::is_innovative(const CodedPacket& p) const {
  if (width_ != 0 && p.coeffs.size() != width_)
    throw std::invalid_argument("rlnc: coefficient width mismatch");
  return basis_.would_grow(p.coeffs);
}

bool CodingMatrix::append(const CodedPacket& p) {
  if (width_ == 0) width_ = p.coeffs.size();
  if (p.coeffs.size() != width_)
    throw std::invalid_argument("rlnc: coefficient width mismatch");
  rows_.push_back(CodedRow{p.coeffs, p.payload});
  return basis_.add(p.coeffs);
}

void CodingMatrix::remove_rows(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end(), std::greater<>());
  for (std::size_t i : indices)
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
  basis_.clear();
  for (const CodedRow& r : rows_) basis_.add(r.coeffs);
}

CodedPacket CodingMatrix::recode_with(std::span<const std::uint8_t> draws) const {
  if (rows_.empty()) throw std::logic_error("rlnc: recode of an empty matrix");
  if (draws.size() != rows_.size())
    throw std::invalid_argument("rlnc: one multiplier per row required");
  CodedPacket out;
  out.coeffs.assign(width_, 0);
  out.payload.assign(rows_[0].payload.size(), 0);
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    gf256::axpy(out.coeffs, rows_[j].coeffs, draws[j]);
    gf256::axpy(out.payload, rows_[j].payload, draws[j]);
  }
  return out;
}

CodedPacket CodingMatrix::recode(Rng& rng) const {
  if (rows_.empty()) throw std::logic_error("rlnc: recode of an empty matrix");
  std::vector<std::uint8_t> draws(rows_.size());
  for (;;) {
    for (auto& d : draws) d = rng.coeff();
    CodedPacket out = recode_with(draws);
    if (first_nonzero(out.coeffs) != kNpos) return out;
    // All-zero combination (probability 256^-rank): redraw.
  }
}

std::vector<std::vector<std::uint8_t>> CodingMatrix::decode() const {
  if (rank() != width_ || width_ == 0)
    throw std::logic_error("rlnc: decode requires a full-rank matrix");
  const std::size_t payload_len = rows_[0].payload.size();
  const std::size_t stride = width_ + payload_len;

  // Augmented rows [coeffs | payload], reduced to the identity in place.
  std::vector<std::vector<std::uint8_t>> a;
  a.reserve(rows_.size());
  for (const CodedRow& r : rows_) {
    std::vector<std::uint8_t> row(stride);
    std::copy(r.coeffs.begin(), r.coeffs.end(), row.begin());
    std::copy(r.payload.begin(), r.payload.end(), row.begin() + static_cast<std::ptrdiff_t>(width_));
    a.push_back(std::move(row));
  }

  for (std::size_t col = 0; col < width_; ++col) {
    std::size_t pivot = kNpos;
    for (std::size_t r = col; r < a.size(); ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot == kNpos)
      throw std::logic_error("rlnc: decode requires a full-rank matrix");
    std::swap(a[col], a[pivot]);
    gf256::scale(a[col], gf256::inv(a[col][col]));
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == col) continue;
      const std::uint8_t c = a[r][col];
      if (c != 0) gf256::axpy(a[r], a[col], c);
    }
  }

  std::vector<std::vector<std::uint8_t>> out(width_);
  for (std::size_t i = 0; i < width_; ++i)
    out[i].assign(a[i].begin() + static_cast<std::ptrdiff_t>(width_), a[i].end());
  return out;
}

std::size_t gauss_rank(std::vector<std::vector<std::uint8_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t width = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = kNpos;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) { pivot = r; break; }
    if (pivot == kNpos) continue;
    std::swap(rows[rank], rows[pivot]);
    gf256::scale(rows[rank], gf256::inv(rows[rank][col]));
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint8_t c = rows[r][col];
      if (c != 0) gf256::axpy(rows[r], rows[rank], c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace ncsim
