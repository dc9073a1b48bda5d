// Copyright 2026 The qwild Authors
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

#include "qwild/analysis.hpp"
#include "qwild/anf.hpp"
#include "qwild/boolexpr.hpp"
#include "qwild/circuit.hpp"
#include "qwild/dimacs.hpp"
#include "qwild/encoding.hpp"
#include "qwild/pipeline.hpp"
#include "qwild/simulator.hpp"
#include "qwild/synthesis.hpp"
#include "qwild/truth_table.hpp"
