// Copyright 2026 The picodes Authors
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

#ifndef PICODES_PARALLEL_HPP
#define PICODES_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace picodes {

/// Worker count: PICODES_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Overrides default_thread_count() for this process; 0 restores the default.
void set_thread_count(unsigned threads);

/// Runs body(i) for i in [0, count) across worker threads. Each index is
/// visited exactly once; the first exception thrown is rethrown here.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace picodes

#endif  // PICODES_PARALLEL_HPP
