#pragma once

#include "contextkit/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace contextkit {

// Dense row-major matrix of rationals.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("RatMatrix: entry count does not match shape");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const {
        return std::vector<Rational>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

    void append_row(const std::vector<Rational>& row) {
        if (cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw std::invalid_argument("RatMatrix: row length mismatch");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    RatMatrix transposed() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    // Rows of `other` appended below; column counts must agree.
    RatMatrix stacked_with(const RatMatrix& other) const {
        if (!other.empty() && !empty() && other.cols() != cols_)
            throw std::invalid_argument("RatMatrix: column mismatch in stack");
        RatMatrix out = *this;
        for (std::size_t r = 0; r < other.rows(); ++r) out.append_row(other.row(r));
        return out;
    }

    // Copy with one extra column holding `pad` in every row.
    RatMatrix with_padding_column(const Rational& pad) const {
        RatMatrix out(rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
            out.at(r, cols_) = pad;
        }
        return out;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace contextkit
