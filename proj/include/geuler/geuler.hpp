// Copyright 2026 The geuler Authors
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

#pragma once

#include "geuler/binomial.hpp"
#include "geuler/cyclotomic.hpp"
#include "geuler/dirichlet.hpp"
#include "geuler/euler.hpp"
#include "geuler/gen_euler.hpp"
#include "geuler/identities.hpp"
#include "geuler/parallel.hpp"
#include "geuler/polynomial.hpp"
#include "geuler/power_series.hpp"
#include "geuler/rational.hpp"
#include "geuler/sweeps.hpp"
