// Copyright 2026 The Authors.
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

#ifndef COOPMAT_ERRORS_HPP_
#define COOPMAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace coopmat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A description that cannot be turned into a matroid.
class MalformedSpec : public Error {
 public:
  using Error::Error;
};

/// Some singleton is dependent. Loops are rejected everywhere.
class LoopDetected : public Error {
 public:
  using Error::Error;
};

/// A restricted oracle was asked about an element outside its support.
class OutOfRestriction : public Error {
 public:
  using Error::Error;
};

class NotIndependent : public Error {
 public:
  using Error::Error;
};

class NotUncovered : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was called above its enumeration bound.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// A game solver was called above its state-space guard.
class StateSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace coopmat

#endif  // COOPMAT_ERRORS_HPP_
