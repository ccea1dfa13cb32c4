// Copyright 2026 The cohsv Authors
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

#ifndef COHSV_ERRORS_HPP
#define COHSV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cohsv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A physical parameter is outside its domain (negative photon number, T <= 0, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// The caller combined valid values in an invalid way (bad mode index, size mismatch, unknown key).
class UsageError : public Error {
   public:
    using Error::Error;
};

/// A computation could not be carried out reliably (ill-conditioned covariance, ...).
class NumericalError : public Error {
   public:
    using Error::Error;
};

/// The error-propagation formula has a vanishing denominator at the requested point.
class UndefinedSensitivityError : public Error {
   public:
    using Error::Error;
};

/// A truncated Fock expansion lost more norm than allowed.
class TruncationError : public Error {
   public:
    TruncationError(const std::string& what, double leak) : Error(what), leak_(leak) {}
    double leak() const { return leak_; }

   private:
    double leak_;
};

class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace cohsv

#endif  // COHSV_ERRORS_HPP
