/*
   Copyright 2026 The qrules Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QRULES_QRULES_HPP
#define QRULES_QRULES_HPP

#include "qrules/errors.hpp"
#include "qrules/linsolve.hpp"
#include "qrules/poly.hpp"
#include "qrules/prove.hpp"
#include "qrules/ratfunc.hpp"
#include "qrules/ring.hpp"
#include "qrules/rules.hpp"
#include "qrules/solve.hpp"
#include "qrules/text.hpp"

#endif // QRULES_QRULES_HPP
