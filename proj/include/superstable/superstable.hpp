// Copyright 2026 The Authors.
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

#ifndef SUPERSTABLE_SUPERSTABLE_HPP
#define SUPERSTABLE_SUPERSTABLE_HPP

#include "superstable/element_set.hpp"
#include "superstable/instance.hpp"
#include "superstable/io.hpp"
#include "superstable/matroid.hpp"
#include "superstable/matroid_kinds.hpp"
#include "superstable/solver.hpp"
#include "superstable/spa.hpp"
#include "superstable/stability.hpp"
#include "superstable/weak_order.hpp"

#endif  // SUPERSTABLE_SUPERSTABLE_HPP
