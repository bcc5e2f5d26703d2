// Copyright 2026 The ccc Authors
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

#pragma once

#include "ccc/baselines.hpp"
#include "ccc/cluster_lp.hpp"
#include "ccc/common.hpp"
#include "ccc/exact.hpp"
#include "ccc/instance.hpp"
#include "ccc/io.hpp"
#include "ccc/pipeline.hpp"
#include "ccc/planted.hpp"
#include "ccc/preclustering.hpp"
#include "ccc/random.hpp"
#include "ccc/rounding.hpp"
#include "ccc/simplex.hpp"
