/*
   Copyright 2026 The windcert Authors

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

#ifndef WINDCERT_WINDCERT_HPP
#define WINDCERT_WINDCERT_HPP

#include "windcert/catalog.hpp"
#include "windcert/criteria.hpp"
#include "windcert/decompose.hpp"
#include "windcert/error.hpp"
#include "windcert/extension.hpp"
#include "windcert/io.hpp"
#include "windcert/polynomial.hpp"
#include "windcert/spectral.hpp"
#include "windcert/winding.hpp"
#include "windcert/zero_factors.hpp"

#endif  // WINDCERT_WINDCERT_HPP
