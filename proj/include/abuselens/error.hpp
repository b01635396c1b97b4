// Copyright 2026 The AbuseLens Authors.
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

#ifndef ABUSELENS_ERROR_HPP_
#define ABUSELENS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace abuselens {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input bytes are not valid UTF-8.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// A required column/field is missing or a file has the wrong shape.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A value violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Remote backend could not be reached. Callers may retry.
class TransportError : public Error {
 public:
  using Error::Error;
};

// Backend cannot serve requests in this build or configuration.
class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

// Conflicting state transition (e.g. deciding an already decided task).
class ConflictError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace abuselens

#endif  // ABUSELENS_ERROR_HPP_
