#pragma once

// Layer-by-layer enumeration of the flats of an arrangement given by
// homogeneous rows over an integral ring. Each flat keeps a kernel basis of
// its defining rows; intersecting with one more hyperplane is a single
// fraction-free elimination step, and flats are identified by their
// closure mask (the set of rows vanishing on the kernel).

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gainarr/error.hpp"

namespace gainarr::detail {

struct FlatList {
  std::vector<std::uint64_t> masks;  // ascending rank
  std::vector<int> ranks;
};

template <class Ring>
class FlatEngine {
 public:
  using Elem = typename Ring::Elem;
  using Vec = std::vector<Elem>;

  /// `affine`: the last column is the homogenizing coordinate and a flat
  /// exists only if some kernel vector has a nonzero last entry.
  FlatEngine(Ring ring, std::vector<Vec> rows, std::size_t width, bool affine)
      : ring_(std::move(ring)), rows_(std::move(rows)), width_(width), affine_(affine) {
    if (rows_.size() > 64) fail(ErrorKind::BoundExceeded, "flat engine handles at most 64 hyperplanes");
    support_.resize(rows_.size());
    for (std::size_t h = 0; h < rows_.size(); ++h) {
      for (std::size_t k = 0; k < width_; ++k) {
        if (!ring_.is_zero(rows_[h][k])) support_[h].push_back(k);
      }
    }
  }

  FlatList run(std::size_t max_flats) {
    FlatList out;
    std::vector<Node> layer(1);
    layer[0].mask = 0;
    layer[0].kdim = width_;
    layer[0].data.assign(width_ * width_, ring_.zero());
    for (std::size_t k = 0; k < width_; ++k) layer[0].data[k * width_ + k] = ring_.one();
    int rank = 0;
    while (!layer.empty()) {
      for (const Node& n : layer) {
        out.masks.push_back(n.mask);
        out.ranks.push_back(rank);
      }
      if (out.masks.size() > max_flats) {
        fail(ErrorKind::BoundExceeded, "more than " + std::to_string(max_flats) + " flats");
      }
      layer = next_layer(layer);
      ++rank;
    }
    return out;
  }

 private:
  // Kernel basis stored row-major: kdim vectors of length width_.
  struct Node {
    std::uint64_t mask = 0;
    std::size_t kdim = 0;
    std::vector<Elem> data;
  };

  Elem dot(std::size_t h, const Elem* v) const {
    Elem acc = ring_.zero();
    for (std::size_t k : support_[h]) {
      if (!ring_.is_zero(v[k])) acc = ring_.add(acc, ring_.mul(rows_[h][k], v[k]));
    }
    return acc;
  }

  bool kills(std::size_t h, const std::vector<Elem>& kernel, std::size_t kdim) const {
    for (std::size_t k = 0; k < kdim; ++k) {
      if (!ring_.is_zero(dot(h, kernel.data() + k * width_))) return false;
    }
    return true;
  }

  std::vector<Node> next_layer(const std::vector<Node>& layer) {
    std::vector<Node> next;
    const std::size_t n = rows_.size();
    for (const Node& f : layer) {
      std::uint64_t done = f.mask;
      const std::size_t kd = f.kdim;
      for (std::size_t h = 0; h < n; ++h) {
        if (done >> h & 1) continue;
        // A known flat of the next rank containing F and H_h equals F cap H_h.
        const std::uint64_t want = f.mask | std::uint64_t{1} << h;
        bool known = false;
        for (const Node& g : next) {
          if ((want & ~g.mask) == 0) {
            done |= g.mask;
            known = true;
            break;
          }
        }
        if (known) continue;
        c_.resize(kd);
        std::size_t k0 = kd;
        for (std::size_t k = 0; k < kd; ++k) {
          c_[k] = dot(h, f.data.data() + k * width_);
          if (k0 == kd && !ring_.is_zero(c_[k])) k0 = k;
        }
        if (k0 == kd) fail(ErrorKind::Verification, "flat mask is not closed");
        const Elem* v0 = f.data.data() + k0 * width_;
        scratch_.resize((kd - 1) * width_);
        std::size_t out_row = 0;
        for (std::size_t k = 0; k < kd; ++k) {
          if (k == k0) continue;
          Elem* w = scratch_.data() + out_row * width_;
          const Elem* v = f.data.data() + k * width_;
          if (ring_.is_zero(c_[k])) {
            std::copy(v, v + width_, w);
          } else {
            for (std::size_t m = 0; m < width_; ++m) w[m] = ring_.sub(ring_.mul(c_[k0], v[m]), ring_.mul(c_[k], v0[m]));
            ring_.normalize(std::span<Elem>(w, width_));
          }
          ++out_row;
        }
        if (affine_) {
          bool nonempty = false;
          for (std::size_t k = 0; k + 1 < kd && !nonempty; ++k) nonempty = !ring_.is_zero(scratch_[k * width_ + width_ - 1]);
          if (!nonempty) {
            done |= std::uint64_t{1} << h;
            continue;
          }
        }
        std::uint64_t mask = f.mask | std::uint64_t{1} << h;
        // A row before h vanishing here would have produced this flat
        // already, and h would be in `done`.
        for (std::size_t h2 = h + 1; h2 < n; ++h2) {
          if (mask >> h2 & 1) continue;
          if (kills(h2, scratch_, kd - 1)) mask |= std::uint64_t{1} << h2;
        }
        done |= mask;
        next.push_back({mask, kd - 1, scratch_});
      }
    }
    return next;
  }

  Ring ring_;
  std::vector<Vec> rows_;
  std::vector<std::vector<std::size_t>> support_;
  std::vector<Elem> c_;
  std::vector<Elem> scratch_;
  std::size_t width_;
  bool affine_;
};

}  // namespace gainarr::detail
