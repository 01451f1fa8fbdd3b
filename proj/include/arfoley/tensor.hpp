#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace arfoley {

// Raised when inputs violate an operation's algebraic or domain contract.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Shape = std::vector<std::size_t>;

std::string shape_str(const Shape& s);

// Dense row-major array. Rank-N tensors are viewed as rows() x cols() where
// cols() is the last extent; every op in this project works on that view.
template <typename T>
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(Shape shape, T fill = T(0)) : shape_(std::move(shape)) {
        check_shape();
        data_.assign(count(shape_), fill);
    }

    Tensor(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
        check_shape();
        if (data_.size() != count(shape_)) {
            throw ContractError("tensor: data length " + std::to_string(data_.size()) +
                                " does not match shape " + shape_str(shape_));
        }
    }

    static std::size_t count(const Shape& s) {
        return std::accumulate(s.begin(), s.end(), std::size_t{1}, std::multiplies<>());
    }

    const Shape& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    std::size_t cols() const { return shape_.empty() ? 1 : shape_.back(); }
    std::size_t rows() const { return shape_.empty() ? 1 : data_.size() / cols(); }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    std::span<T> span() { return data_; }
    std::span<const T> span() const { return data_; }
    std::vector<T>& vec() { return data_; }
    const std::vector<T>& vec() const { return data_; }

    T* row(std::size_t r) { return data_.data() + r * cols(); }
    const T* row(std::size_t r) const { return data_.data() + r * cols(); }

    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

    void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

    // Appends the rows of a matrix with the same column count (amortised growth).
    void append_rows(const Tensor& more) {
        if (empty()) {
            *this = more;
            return;
        }
        if (rank() != 2 || more.rank() != 2 || more.cols() != cols()) {
            throw ContractError("tensor: cannot append " + shape_str(more.shape_) + " to " + shape_str(shape_));
        }
        data_.insert(data_.end(), more.data_.begin(), more.data_.end());
        shape_[0] += more.shape_[0];
    }

    template <typename U>
    Tensor<U> cast() const {
        return Tensor<U>(shape_, std::vector<U>(data_.begin(), data_.end()));
    }

    bool operator==(const Tensor&) const = default;

private:
    void check_shape() const {
        for (std::size_t e : shape_) {
            if (e == 0) throw ContractError("tensor: extents must be positive, got " + shape_str(shape_));
        }
    }

    Shape shape_;
    std::vector<T> data_;
};

using FTensor = Tensor<float>;
using DTensor = Tensor<double>;

}  // namespace arfoley
