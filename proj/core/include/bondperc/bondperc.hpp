// Copyright 2026 The bondperc Authors
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

#pragma once

#include "bondperc/bounds.hpp"
#include "bondperc/coupling.hpp"
#include "bondperc/error.hpp"
#include "bondperc/graph.hpp"
#include "bondperc/montecarlo.hpp"
#include "bondperc/oracle.hpp"
#include "bondperc/percolation.hpp"
#include "bondperc/random.hpp"
