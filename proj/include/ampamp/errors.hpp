// Copyright 2026 The ampamp Authors
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

namespace ampamp {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (length mismatch, bad file, bad flag).
class InputError : public Error {
   public:
    using Error::Error;
};

/// Problem too large for the requested code path (e.g. 2^N enumeration).
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// Parameters outside the domain where a formula is defined.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A searched-for feature (such as a first peak) does not exist.
class NotFoundError : public Error {
   public:
    using Error::Error;
};

}  // namespace ampamp
