#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rgeom {

// Dense row-major tensor with uniform axis length n (the chart dimension).
// Rank 0 holds a single scalar.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int dim, int rank) : dim_(dim), rank_(rank) {
    std::size_t sz = 1;
    for (int r = 0; r < rank; ++r) sz *= static_cast<std::size_t>(dim);
    data_.assign(sz, 0.0);
  }

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::initializer_list<int> idx) {
    return data_[offset(idx)];
  }
  double operator()(std::initializer_list<int> idx) const {
    return data_[offset(idx)];
  }

  template <typename... I>
  double& at(I... idx) {
    return (*this)({static_cast<int>(idx)...});
  }
  template <typename... I>
  double at(I... idx) const {
    return (*this)({static_cast<int>(idx)...});
  }

  double& flat(std::size_t i) { return data_[i]; }
  double flat(std::size_t i) const { return data_[i]; }

  // Multi-index corresponding to flat offset i.
  std::vector<int> unflatten(std::size_t i) const {
    std::vector<int> idx(rank_, 0);
    for (int r = rank_ - 1; r >= 0; --r) {
      idx[r] = static_cast<int>(i % dim_);
      i /= dim_;
    }
    return idx;
  }

  Tensor& operator+=(const Tensor& o) {
    assert(size() == o.size());
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    assert(size() == o.size());
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Tensor& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, double s) { return a *= s; }
  friend Tensor operator*(double s, Tensor a) { return a *= s; }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_)
      if (double a = v < 0 ? -v : v; a > m) m = a;
    return m;
  }

 private:
  std::size_t offset(std::initializer_list<int> idx) const {
    assert(static_cast<int>(idx.size()) == rank_);
    std::size_t off = 0;
    for (int i : idx) {
      assert(i >= 0 && i < dim_);
      off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return off;
  }

  int dim_ = 0;
  int rank_ = 0;
  std::vector<double> data_;
};

// Index variance of one tensor slot.
enum class Slot { Upper, Lower };

// A tensor together with its variance signature, anchored at a point.
struct TensorValue {
  std::vector<Slot> slots;
  Tensor comp;
};

}  // namespace rgeom
