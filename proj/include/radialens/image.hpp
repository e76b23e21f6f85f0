#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace radialens {

// Dense row-major 2D grid of doubles. Value semantics throughout; all pipeline
// math is double precision, conversion to float happens only at the I/O layer.
class Image {
public:
  Image() = default;
  Image(int ny, int nx, double fill = 0.0) : ny_(ny), nx_(nx) {
    if (ny < 0 || nx < 0) throw std::invalid_argument("Image: negative dims");
    data_.assign(static_cast<size_t>(ny) * static_cast<size_t>(nx), fill);
  }

  int ny() const { return ny_; }
  int nx() const { return nx_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(int y, int x) { return data_[static_cast<size_t>(y) * nx_ + x]; }
  double operator()(int y, int x) const { return data_[static_cast<size_t>(y) * nx_ + x]; }
  double& operator[](size_t i) { return data_[i]; }
  double operator[](size_t i) const { return data_[i]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool same_dims(const Image& o) const { return ny_ == o.ny_ && nx_ == o.nx_; }

private:
  int ny_ = 0;
  int nx_ = 0;
  std::vector<double> data_;
};

// Complex-valued grid, used for DFT spectra. Layout compatible with
// fftw_complex so FFT wrappers can copy without re-packing.
class ComplexImage {
public:
  ComplexImage() = default;
  ComplexImage(int ny, int nx) : ny_(ny), nx_(nx) {
    if (ny < 0 || nx < 0) throw std::invalid_argument("ComplexImage: negative dims");
    data_.assign(static_cast<size_t>(ny) * static_cast<size_t>(nx), {0.0, 0.0});
  }

  int ny() const { return ny_; }
  int nx() const { return nx_; }
  size_t size() const { return data_.size(); }

  std::complex<double>& operator()(int y, int x) {
    return data_[static_cast<size_t>(y) * nx_ + x];
  }
  const std::complex<double>& operator()(int y, int x) const {
    return data_[static_cast<size_t>(y) * nx_ + x];
  }
  std::complex<double>& operator[](size_t i) { return data_[i]; }
  const std::complex<double>& operator[](size_t i) const { return data_[i]; }

  std::complex<double>* data() { return data_.data(); }
  const std::complex<double>* data() const { return data_.data(); }

private:
  int ny_ = 0;
  int nx_ = 0;
  std::vector<std::complex<double>> data_;
};

// Multichannel image (grayscale = 1 plane, RGB = 3). All planes share dims.
using Planes = std::vector<Image>;

// Index of the pixel treated as the geometric center of an n-wide axis.
// All crop/embed/kernel alignment in the pipeline uses this convention so
// that convolve-then-crop and the circular solver model agree exactly.
inline int center_index(int n) { return (n - 1) / 2; }

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace radialens
