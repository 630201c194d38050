// Copyright 2026 The nsfind Authors
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

namespace nsfind {

/// Base class of every exception thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- linear-algebra kernel ----

struct ShapeMismatchError : Error {
    using Error::Error;
};

struct NonHermitianError : Error {
    NonHermitianError(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
    double residual;
};

struct NoConvergenceError : Error {
    NoConvergenceError(const std::string& what, long iterations_)
        : Error(what), iterations(iterations_) {}
    long iterations;
};

struct NonlinearMapError : Error {
    NonlinearMapError(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
    double residual;
};

// ---- channel validation ----

struct NotTracePreservingError : Error {
    NotTracePreservingError(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
    double residual;
};

struct NotCompletelyPositiveError : Error {
    NotCompletelyPositiveError(const std::string& what, double min_eigenvalue_)
        : Error(what), min_eigenvalue(min_eigenvalue_) {}
    double min_eigenvalue;
};

struct NotInvariantError : Error {
    NotInvariantError(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
    double residual;
};

// ---- algebra structure ----

struct DegenerateSampleError : Error {
    DegenerateSampleError(const std::string& what, int retries_)
        : Error(what), retries(retries_) {}
    int retries;
};

struct StructureInconsistentError : Error {
    using Error::Error;
};

// ---- subsystem extraction ----

struct ReconstructionFailedError : Error {
    ReconstructionFailedError(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
    double residual;
};

struct NotFactorizableError : Error {
    NotFactorizableError(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
    double residual;
};

struct NotUnitalError : Error {
    NotUnitalError(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
    double residual;
};

// ---- i/o ----

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct UnknownExampleError : Error {
    using Error::Error;
};

struct BadParameterError : Error {
    using Error::Error;
};

/// An internal self-check failed; results cannot be trusted.
/// The CLI maps this to exit code 2.
struct SoundnessError : Error {
    using Error::Error;
};

}  // namespace nsfind
