#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace qmdp::detail {

/**
 * Per-thread pool of generation-stamped arrays. A lease reads as all-zero on
 * acquisition without an O(n) clear, so kernels cost only what they touch.
 */
class StampedArray {
 public:
  std::uint32_t get(std::size_t i) const { return stamp_[i] == gen_ ? value_[i] : 0; }
  void set(std::size_t i, std::uint32_t x) {
    stamp_[i] = gen_;
    value_[i] = x;
  }
  bool touched(std::size_t i) const { return stamp_[i] == gen_; }

 private:
  friend class Lease;
  void reset(std::size_t n) {
    if (stamp_.size() < n) {
      stamp_.resize(n, 0);
      value_.resize(n, 0);
    }
    if (++gen_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      gen_ = 1;
    }
  }
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> value_;
  std::uint32_t gen_ = 0;
  bool in_use_ = false;
};

class Lease {
 public:
  explicit Lease(std::size_t n) {
    thread_local std::vector<std::unique_ptr<StampedArray>> pool;
    for (auto& a : pool)
      if (!a->in_use_) {
        arr_ = a.get();
        break;
      }
    if (arr_ == nullptr) {
      pool.push_back(std::make_unique<StampedArray>());
      arr_ = pool.back().get();
    }
    arr_->in_use_ = true;
    arr_->reset(n);
  }
  ~Lease() { arr_->in_use_ = false; }
  Lease(const Lease&) = delete;
  Lease& operator=(const Lease&) = delete;

  StampedArray& operator*() const { return *arr_; }
  StampedArray* operator->() const { return arr_; }

 private:
  StampedArray* arr_ = nullptr;
};

}  // namespace qmdp::detail
