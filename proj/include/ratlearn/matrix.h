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

#ifndef RATLEARN_MATRIX_H_
#define RATLEARN_MATRIX_H_

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratlearn {

// Thrown whenever two objects that must agree on a shape do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Small dense row-major matrix of doubles. Indices are zero-based here;
// the one-based action convention lives in ActionIndex.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);
  // Nested-list construction, e.g. Matrix{{1, 2}, {3, 4}}.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix FromRowMajor(int rows, int cols, std::vector<double> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(int r, int c) { return data_[Index(r, c)]; }
  double operator()(int r, int c) const { return data_[Index(r, c)]; }

  const std::vector<double>& values() const { return data_; }
  Matrix Transposed() const;
  double MinEntry() const;
  double MaxEntry() const;

  bool operator==(const Matrix& other) const = default;

  std::string ToString() const;

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

}  // namespace ratlearn

#endif  // RATLEARN_MATRIX_H_
