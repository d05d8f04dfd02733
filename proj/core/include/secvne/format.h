// Copyright 2026 The secvne Authors.
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

#ifndef SECVNE_FORMAT_H_
#define SECVNE_FORMAT_H_

#include <string>

namespace secvne {

// Shortest decimal text that parses back to exactly `value` ("2", "0.1",
// "1e+20"). Negative zero prints as "0".
std::string format_number(double value);

}  // namespace secvne

#endif  // SECVNE_FORMAT_H_
