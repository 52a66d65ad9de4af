// Copyright 2026 The cmip Authors
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

#ifndef CMIP_ERRORS_HPP
#define CMIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmip {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible, overlapping or unknown mode-basis factors.
class BasisError : public Error {
public:
    using Error::Error;
};

/// A state or density matrix outside its numerical tolerance window.
class NormalizationError : public Error {
public:
    using Error::Error;
};

/// Angle pair handed to the solver of the other interferometer branch.
class WrongBranchError : public Error {
public:
    using Error::Error;
};

/// Out-of-range parameters or an inconsistent plan/config.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Tomography design matrix without full rank.
class RankDeficientError : public Error {
public:
    using Error::Error;
};

}  // namespace cmip

#endif  // CMIP_ERRORS_HPP
