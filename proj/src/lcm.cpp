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

#include "apery/lcm.hpp"

#include <mutex>
#include <stdexcept>

namespace apery {

LcmTable::LcmTable() : entries_{Integer(1)} {}

Integer LcmTable::at(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < entries_.size()) return entries_[n];
  }
  std::unique_lock lock(mutex_);
  while (entries_.size() <= n) {
    Integer next;
    const Integer m(static_cast<unsigned long>(entries_.size()));
    mpz_lcm(next.get_mpz_t(), entries_.back().get_mpz_t(), m.get_mpz_t());
    entries_.push_back(std::move(next));
  }
  return entries_[n];
}

std::size_t LcmTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

Integer lcm_upto(long n) {
  if (n < 0) throw std::invalid_argument("lcm_upto: n must be nonnegative");
  static LcmTable table;
  return table.at(static_cast<std::size_t>(n));
}

}  // namespace apery
