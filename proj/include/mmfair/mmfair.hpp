// Copyright 2026 The mmfair Authors
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

// Umbrella header.

#ifndef MMFAIR_MMFAIR_HPP
#define MMFAIR_MMFAIR_HPP

#include "mmfair/error.hpp"
#include "mmfair/game.hpp"
#include "mmfair/lpalloc.hpp"
#include "mmfair/mmf.hpp"
#include "mmfair/model.hpp"
#include "mmfair/report.hpp"
#include "mmfair/scenario_io.hpp"
#include "mmfair/stats.hpp"

#endif  // MMFAIR_MMFAIR_HPP
