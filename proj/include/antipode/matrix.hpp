#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "antipode/rational.hpp"

namespace antipode {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Builds from row vectors; all rows must share a length.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols = 0);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rat> row_span(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  RatVector row(std::size_t i) const;
  std::vector<RatVector> row_vectors() const;
  void set_row(std::size_t i, const RatVector& v);
  void swap_rows(std::size_t a, std::size_t b);

  RatMatrix transpose() const;
  /// Rows [first, first + count).
  RatMatrix row_block(std::size_t first, std::size_t count) const;
  /// Columns [first, first + count).
  RatMatrix col_block(std::size_t first, std::size_t count) const;

  bool is_integral() const;
  /// Least common multiple of all entry denominators.
  Int common_denominator() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& s, const RatMatrix& m);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
/// Row vector times matrix.
RatVector operator*(const RatVector& v, const RatMatrix& m);
/// Vertical concatenation.
RatMatrix stack(const RatMatrix& top, const RatMatrix& bottom);

/// Text format: `rows cols` on the first line, then one row per line with
/// entries written as `p` or `p/q`, separated by single spaces.
void write_matrix(std::ostream& os, const RatMatrix& m);
RatMatrix read_matrix(std::istream& is);
std::string to_text(const RatMatrix& m);
RatMatrix matrix_from_text(const std::string& text);

/// Writes a vector as space-separated rationals without a trailing newline.
void write_vector(std::ostream& os, const RatVector& v);
/// Parses a line of space-separated rationals.
RatVector parse_vector(const std::string& line);

}  // namespace antipode
