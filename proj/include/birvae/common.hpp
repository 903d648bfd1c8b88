// Copyright (c) the BIR-VAE Authors.
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

#ifndef BIRVAE_COMMON_HPP_
#define BIRVAE_COMMON_HPP_

#include <stdexcept>
#include <string>

namespace birvae {

// Malformed files, bitstreams or on-disk formats. The CLI maps this to
// exit code 2.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite values, diverged training and other numerical failures.
// The CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formats a double with 6 significant digits, C locale, LF-safe. All
// numeric CLI/CSV output goes through this so byte-for-byte golden files
// stay stable.
std::string fmt6(double v);

}  // namespace birvae

#endif  // BIRVAE_COMMON_HPP_
