#pragma once

#include <stdexcept>
#include <vector>

#include "nvlab/util.hpp"

namespace nvlab {

struct FrequencyPair {
  i64 xi = 0, eta = 0;
  friend bool operator==(const FrequencyPair&, const FrequencyPair&) = default;
  FrequencyPair operator-() const { return {-xi, -eta}; }
  FrequencyPair operator+(const FrequencyPair& o) const { return {xi + o.xi, eta + o.eta}; }
  FrequencyPair operator-(const FrequencyPair& o) const { return {xi - o.xi, eta - o.eta}; }
  bool is_zero() const { return xi == 0 && eta == 0; }
};

// Square-periodic grid on [0,2pi)^2 with nx * ny modes.
//
// Frequency layout (the one place it is defined): along an axis of n points the
// integer frequencies are -n/2+1 .. n/2, stored in standard FFT order
//   index i  <->  frequency (i <= n/2 ? i : i - n),
// i.e. 0,1,...,n/2 then -n/2+1,...,-1. Index n/2 carries the Nyquist frequency +n/2.
// Coefficients are stored row-major: flat index = ix * ny + iy, where ix follows x/xi
// and iy follows y/eta. Physical samples use the same layout with x_a = 2pi*a/nx.
struct TorusGrid {
  int nx = 0, ny = 0;

  TorusGrid() = default;
  TorusGrid(int nx_, int ny_) : nx(nx_), ny(ny_) {
    if (nx < 8 || ny < 8 || nx % 2 || ny % 2)
      throw std::invalid_argument("TorusGrid: sides must be even and >= 8");
  }

  std::size_t size() const { return std::size_t(nx) * std::size_t(ny); }

  static int index_of(i64 freq, int n) { return int(freq >= 0 ? freq : freq + n); }
  static i64 freq_of(int index, int n) { return index <= n / 2 ? index : index - n; }

  bool contains(FrequencyPair z) const {
    return z.xi >= -nx / 2 + 1 && z.xi <= nx / 2 && z.eta >= -ny / 2 + 1 && z.eta <= ny / 2;
  }

  std::size_t flat(FrequencyPair z) const {
    if (!contains(z)) throw std::out_of_range("TorusGrid::flat: frequency outside grid");
    return std::size_t(index_of(z.xi, nx)) * ny + index_of(z.eta, ny);
  }

  FrequencyPair freq_at(std::size_t flat_index) const {
    int ix = int(flat_index / ny), iy = int(flat_index % ny);
    return {freq_of(ix, nx), freq_of(iy, ny)};
  }

  friend bool operator==(const TorusGrid&, const TorusGrid&) = default;
};

}  // namespace nvlab
