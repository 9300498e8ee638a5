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

#ifndef PEBBLE_PEBBLE_HPP
#define PEBBLE_PEBBLE_HPP

#include "pebble/error.hpp"
#include "pebble/params.hpp"
#include "pebble/geometry.hpp"
#include "pebble/multigraph.hpp"
#include "pebble/game.hpp"
#include "pebble/recognition.hpp"
#include "pebble/hypergraph.hpp"
#include "pebble/oracle.hpp"
#include "pebble/reductions.hpp"
#include "pebble/generators.hpp"
#include "pebble/io.hpp"

#endif  // PEBBLE_PEBBLE_HPP
