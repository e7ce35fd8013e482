// Copyright 2026 The kaoncp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace kaoncp {

// Mirrors kcp_status in kaoncp.h; the C layer maps exceptions through code().
enum class ErrorCode {
  InvalidArgument = 1,
  NotHermitian = 2,
  NotPositive = 3,
  Domain = 4,
  Shape = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::InvalidArgument, what) {}
};

// Carries the measured Hermiticity defect ||M - M^dagger||_F.
class NotHermitian : public Error {
 public:
  NotHermitian(const std::string& what, double defect)
      : Error(ErrorCode::NotHermitian, what), defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

// Raised when an operation needs a positive operator (e.g. Kraus extraction)
// and gets one with negative spectrum.
class NotPositive : public Error {
 public:
  NotPositive(const std::string& what, double min_eigenvalue)
      : Error(ErrorCode::NotPositive, what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::Domain, what) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(ErrorCode::Shape, what) {}
};

}  // namespace kaoncp
