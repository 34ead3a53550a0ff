/*
   Copyright 2026 The thuetwist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef THUETWIST_ERRORS_HPP
#define THUETWIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thuetwist {

/// Raised when a certified computation cannot be completed within the
/// configured precision cap (tie proving, interval sign decisions, ...).
class certification_error : public std::runtime_error {
  public:
    explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on structurally invalid inputs (field mismatch, zero inversion,
/// non-integral scaled coefficients, ...).
class domain_error : public std::invalid_argument {
  public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace thuetwist

#endif
