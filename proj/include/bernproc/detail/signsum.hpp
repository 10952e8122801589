#pragma once

// Shared engine for exact sign-pattern enumeration and chunked Monte Carlo.
// Exact means: walk all 2^B sign patterns in Gray-code order, updating the
// |T| running sums in O(|T|) per pattern; work is split into fixed chunks
// whose subtotals are combined in index order, so a future parallel schedule
// would reproduce the serial result bit-for-bit.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "bernproc/errors.hpp"
#include "bernproc/rng.hpp"

namespace bernproc::detail {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Re-centers rows at row 0 (the expected supremum is translation invariant),
// drops columns that become identically zero, and deduplicates rows.  Value
// preserving; used to shrink the enumeration space.
inline void center_and_dedup_rows(std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows[0].empty()) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return;
  }
  const std::vector<double> base = rows[0];
  for (auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) row[c] -= base[c];
  }
  const std::size_t ncols = rows[0].size();
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < ncols; ++c) {
    for (const auto& row : rows) {
      if (row[c] != 0.0) {
        keep.push_back(c);
        break;
      }
    }
  }
  if (keep.size() != ncols) {
    for (auto& row : rows) {
      std::vector<double> nr;
      nr.reserve(keep.size());
      for (std::size_t c : keep) nr.push_back(row[c]);
      row = std::move(nr);
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

/// Mean over all 2^B sign patterns of reduce(max over rows of the signed sum).
inline double enumerate_sign_mean(const std::vector<std::vector<double>>& rows,
                                  const std::function<double(double)>& reduce) {
  constexpr std::uint64_t kChunkBits = 16;
  const std::size_t bits = rows.empty() ? 0 : rows[0].size();
  const std::uint64_t total = std::uint64_t{1} << bits;
  const std::uint64_t chunk = std::min<std::uint64_t>(total, std::uint64_t{1} << kChunkBits);

  KahanSum grand;
  for (std::uint64_t start = 0; start < total; start += chunk) {
    const std::uint64_t stop = std::min(total, start + chunk);
    const std::uint64_t gray = start ^ (start >> 1);
    std::vector<double> running(rows.size(), 0.0);
    for (std::size_t m = 0; m < rows.size(); ++m) {
      double s = 0.0;
      for (std::size_t c = 0; c < bits; ++c) {
        s += ((gray >> c) & 1U) ? -rows[m][c] : rows[m][c];
      }
      running[m] = s;
    }
    std::vector<int> sign(bits, 1);
    for (std::size_t c = 0; c < bits; ++c) {
      if ((gray >> c) & 1U) sign[c] = -1;
    }
    KahanSum local;
    for (std::uint64_t k = start; k < stop; ++k) {
      if (k != start) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(k));
        sign[bit] = -sign[bit];
        const double mult = 2.0 * sign[bit];
        for (std::size_t m = 0; m < rows.size(); ++m) {
          running[m] += mult * rows[m][bit];
        }
      }
      double best = running[0];
      for (std::size_t m = 1; m < rows.size(); ++m) best = std::max(best, running[m]);
      local.add(reduce(best));
    }
    grand.add(local.sum);
  }
  return grand.sum / static_cast<double>(total);
}

/// Chunked Monte Carlo mean/stderr of draw(stream); chunk c consumes the
/// (seed, c) stream.
template <typename Draw>
std::tuple<double, double> run_mc(std::int64_t samples, std::uint64_t seed, Draw&& draw) {
  constexpr std::int64_t kChunk = 4096;
  if (samples < 1) throw DomainError("sample count must be >= 1");
  double sum = 0.0;
  double sumsq = 0.0;
  std::int64_t done = 0;
  std::uint64_t chunk_index = 0;
  while (done < samples) {
    const std::int64_t n = std::min<std::int64_t>(kChunk, samples - done);
    RandomStream rs(seed, chunk_index);
    KahanSum s;
    KahanSum s2;
    for (std::int64_t k = 0; k < n; ++k) {
      const double v = draw(rs);
      s.add(v);
      s2.add(v * v);
    }
    sum += s.sum;
    sumsq += s2.sum;
    done += n;
    ++chunk_index;
  }
  const double mean = sum / static_cast<double>(samples);
  double stderr_est = 0.0;
  if (samples > 1) {
    double var =
        (sumsq - static_cast<double>(samples) * mean * mean) / static_cast<double>(samples - 1);
    stderr_est = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
  }
  return {mean, stderr_est};
}

}  // namespace bernproc::detail
