// Copyright 2026 The Apery Authors
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

#ifndef APERY_LCM_HPP
#define APERY_LCM_HPP

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "apery/rational.hpp"

namespace apery {

/// Table of D_n = lcm(1, ..., n) with D_0 = 1, grown on demand.
///
/// Readers of an already computed prefix take a shared lock; extension takes
/// the exclusive lock, so the table may be shared between threads.
class LcmTable {
 public:
  LcmTable();
  Integer at(std::size_t n);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<Integer> entries_;
};

/// D_n from a process-wide LcmTable; throws std::invalid_argument for n < 0.
Integer lcm_upto(long n);

}  // namespace apery

#endif  // APERY_LCM_HPP
