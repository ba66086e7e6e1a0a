// Copyright 2026 The leafdiam Authors
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

#include "leafdiam/error.hpp"
#include "leafdiam/formulas.hpp"
#include "leafdiam/oracle.hpp"
#include "leafdiam/spiderize.hpp"
#include "leafdiam/stem.hpp"
#include "leafdiam/tree.hpp"
#include "leafdiam/tree_io.hpp"
#include "leafdiam/witnesses.hpp"
