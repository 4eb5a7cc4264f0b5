// Copyright 2026 The sumsq Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace sumsq
{
    // Invalid argument: wrong ring parameter, non-prime modulus, mismatched d, ...
    class ParameterError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Input outside the mathematical domain of an operation (delta = 0, ...).
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Input the criterion has no formula for (a = 0 in the sqrt(-14) criterion).
    class UnsupportedInput : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // A configured work or depth limit was exceeded.
    class ResourceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class FactorizationError : public ResourceError
    {
    public:
        using ResourceError::ResourceError;
    };
} // namespace sumsq
