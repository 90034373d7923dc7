// Copyright 2026 The Symmetra Authors
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

#include "symmetra/action.hpp"
#include "symmetra/automorphism.hpp"
#include "symmetra/coefficient.hpp"
#include "symmetra/decimal.hpp"
#include "symmetra/equivalence.hpp"
#include "symmetra/error.hpp"
#include "symmetra/ham_graph.hpp"
#include "symmetra/models.hpp"
#include "symmetra/oracle.hpp"
#include "symmetra/pauli.hpp"
#include "symmetra/perm_group.hpp"
#include "symmetra/permutation.hpp"
#include "symmetra/refinement.hpp"
