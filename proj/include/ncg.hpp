// Copyright 2026 The ncg Authors
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

#include "ncg/config.hpp"
#include "ncg/constructions.hpp"
#include "ncg/cost.hpp"
#include "ncg/dynamics.hpp"
#include "ncg/enumerate.hpp"
#include "ncg/equilibrium.hpp"
#include "ncg/error.hpp"
#include "ncg/families.hpp"
#include "ncg/formulas.hpp"
#include "ncg/hash.hpp"
#include "ncg/moves.hpp"
#include "ncg/network.hpp"
#include "ncg/parallel.hpp"
#include "ncg/paths.hpp"
#include "ncg/rational.hpp"
