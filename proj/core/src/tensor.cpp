#include "dclr/tensor.hpp"

#include <cmath>
#include <sstream>

#include "dclr/common.hpp"

namespace dclr {

namespace {
std::int64_t shape_numel(const std::vector<std::int64_t>& shape) {
  std::int64_t n = 1;
  for (auto d : shape) {
    DCLR_CHECK(d >= 0, ShapeError, "negative dimension in shape " << Tensor::shape_str(shape));
    n *= d;
  }
  return n;
}
}  // namespace

Tensor::Tensor(std::vector<std::int64_t> shape)
    : shape_(std::move(shape)), data_(static_cast<std::size_t>(shape_numel(shape_)), 0.0) {}

Tensor::Tensor(std::vector<std::int64_t> shape, std::vector<double> data) : shape_(std::move(shape)) {
  DCLR_CHECK(shape_numel(shape_) == static_cast<std::int64_t>(data.size()), ShapeError,
             "data size " << data.size() << " does not match shape " << shape_str(shape_));
  data_ = std::move(data);
}

Tensor Tensor::zeros(std::vector<std::int64_t> shape) { return Tensor(std::move(shape)); }

Tensor Tensor::full(std::vector<std::int64_t> shape, double value) {
  Tensor t(std::move(shape));
  t.fill(value);
  return t;
}

Tensor Tensor::scalar(double value) { return Tensor({1}, {value}); }

std::int64_t Tensor::dim(int i) const {
  DCLR_CHECK(i >= 0 && i < ndim(), IndexError, "dim index " << i << " out of range for " << shape_str());
  return shape_[static_cast<std::size_t>(i)];
}

std::int64_t Tensor::offset(std::initializer_list<std::int64_t> idx) const {
  DCLR_CHECK(static_cast<int>(idx.size()) == ndim(), IndexError,
             "index rank " << idx.size() << " does not match tensor rank " << ndim());
  std::int64_t off = 0;
  int i = 0;
  for (auto v : idx) {
    DCLR_CHECK(v >= 0 && v < shape_[static_cast<std::size_t>(i)], IndexError,
               "index " << v << " out of range for axis " << i << " of " << shape_str());
    off = off * shape_[static_cast<std::size_t>(i)] + v;
    ++i;
  }
  return off;
}

double& Tensor::at(std::initializer_list<std::int64_t> idx) { return data_[static_cast<std::size_t>(offset(idx))]; }

double Tensor::at(std::initializer_list<std::int64_t> idx) const {
  return data_[static_cast<std::size_t>(offset(idx))];
}

double Tensor::item() const {
  DCLR_CHECK(size() == 1, ShapeError, "item() on non-scalar tensor " << shape_str());
  return data_[0];
}

void Tensor::fill(double v) {
  for (auto& x : data_) x = v;
}

bool Tensor::all_finite() const {
  for (double x : data_)
    if (!std::isfinite(x)) return false;
  return true;
}

std::string Tensor::shape_str(const std::vector<std::int64_t>& shape) {
  std::ostringstream oss;
  oss << "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) oss << ",";
    oss << shape[i];
  }
  oss << "]";
  return oss.str();
}

std::string Tensor::shape_str() const { return shape_str(shape_); }

}  // namespace dclr
