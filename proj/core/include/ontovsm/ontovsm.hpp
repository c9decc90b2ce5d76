// Copyright 2026 The ontovsm Authors.
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

#ifndef ONTOVSM_ONTOVSM_HPP_
#define ONTOVSM_ONTOVSM_HPP_

#include "ontovsm/corpus.hpp"
#include "ontovsm/error.hpp"
#include "ontovsm/eval.hpp"
#include "ontovsm/index.hpp"
#include "ontovsm/io.hpp"
#include "ontovsm/ontology.hpp"
#include "ontovsm/retrieval.hpp"
#include "ontovsm/termspace.hpp"
#include "ontovsm/text.hpp"

#endif  // ONTOVSM_ONTOVSM_HPP_
