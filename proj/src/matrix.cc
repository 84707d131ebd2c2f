// Copyright 2026 The ratlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ratlearn/matrix.h"

#include <algorithm>
#include <sstream>

namespace ratlearn {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw DimensionError("matrix dimensions must be nonnegative");
  }
  data_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw DimensionError("ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::FromRowMajor(int rows, int cols, std::vector<double> values) {
  if (rows < 0 || cols < 0 ||
      values.size() != static_cast<std::size_t>(rows) * cols) {
    throw DimensionError("expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " values, got " +
                         std::to_string(values.size()));
  }
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(values);
  return m;
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

double Matrix::MinEntry() const {
  return *std::min_element(data_.begin(), data_.end());
}

double Matrix::MaxEntry() const {
  return *std::max_element(data_.begin(), data_.end());
}

std::string Matrix::ToString() const {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (int c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c);
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace ratlearn
