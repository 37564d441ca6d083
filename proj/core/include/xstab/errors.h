// Copyright 2026 The xstab Authors
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

#ifndef XSTAB_ERRORS_H
#define XSTAB_ERRORS_H

#include <stdexcept>

namespace xstab {

/// A requested computation exceeds a configured size cap or budget.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed numerically (e.g. a density coefficient came out complex).
class ConsistencyError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace xstab

#endif
