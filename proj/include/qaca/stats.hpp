// Copyright 2026 The QACA Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <span>

namespace qaca {

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;  // population standard deviation
};

/// Two-pass mean and population standard deviation. Empty input gives {0, 0}.
MeanStd mean_std(std::span<const double> values);

/// Centers values to mean 0 and scales to unit population variance, in place.
/// A zero-variance input is only centered.
void standardize_in_place(std::span<double> values);

}  // namespace qaca
