/* Copyright 2026 The codedshift Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#pragma once

#include "codedshift/algorithms.hpp"
#include "codedshift/automaton.hpp"
#include "codedshift/codes.hpp"
#include "codedshift/core.hpp"
#include "codedshift/countable.hpp"
#include "codedshift/expression.hpp"
#include "codedshift/graph.hpp"
#include "codedshift/io.hpp"
#include "codedshift/morphisms.hpp"
#include "codedshift/shifts.hpp"
#include "codedshift/sync_recode.hpp"
#include "codedshift/unambiguity.hpp"
#include "codedshift/verdict.hpp"
