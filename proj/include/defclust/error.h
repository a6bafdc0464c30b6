// Copyright 2026 The defclust Authors
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

#ifndef DEFCLUST_ERROR_H_
#define DEFCLUST_ERROR_H_

#include <stdexcept>

namespace defclust {

// Raised for malformed, inconsistent or unusable input data: bad corpus
// records, duplicate ids, missing gold labels, unreadable files.
// Precondition violations by the caller surface as std::invalid_argument.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace defclust

#endif  // DEFCLUST_ERROR_H_
