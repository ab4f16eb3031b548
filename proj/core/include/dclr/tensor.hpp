#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dclr {

// Dense row-major double tensor. Value semantics; the autodiff graph and all
// loss math run in double so the finite-difference and oracle tolerances hold.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::int64_t> shape);
  Tensor(std::vector<std::int64_t> shape, std::vector<double> data);

  static Tensor zeros(std::vector<std::int64_t> shape);
  static Tensor full(std::vector<std::int64_t> shape, double value);
  static Tensor scalar(double value);

  const std::vector<std::int64_t>& shape() const { return shape_; }
  std::int64_t dim(int i) const;
  int ndim() const { return static_cast<int>(shape_.size()); }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& vec() { return data_; }
  const std::vector<double>& vec() const { return data_; }

  double& operator[](std::int64_t i) { return data_[i]; }
  double operator[](std::int64_t i) const { return data_[i]; }

  double& at(std::initializer_list<std::int64_t> idx);
  double at(std::initializer_list<std::int64_t> idx) const;

  // Scalar accessor; requires size() == 1.
  double item() const;

  void fill(double v);
  bool all_finite() const;

  std::string shape_str() const;
  static std::string shape_str(const std::vector<std::int64_t>& shape);

 private:
  std::int64_t offset(std::initializer_list<std::int64_t> idx) const;

  std::vector<std::int64_t> shape_;
  std::vector<double> data_;
};

}  // namespace dclr
