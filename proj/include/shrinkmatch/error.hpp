// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License.  You
// may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied.  See the License for the specific language governing
// permissions and limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace shrinkmatch {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise malformed numeric input.
struct InvalidInputError : Error {
    using Error::Error;
};

/// Index outside its valid range.
struct IndexError : Error {
    using Error::Error;
};

/// Tensor/batch dimensions do not line up.
struct ShapeError : Error {
    using Error::Error;
};

/// A documented precondition was violated by the caller.
struct ContractError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct CheckpointError : Error {
    using Error::Error;
};

}  // namespace shrinkmatch
