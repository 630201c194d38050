// Copyright 2026 The nsfind Authors
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

namespace nsfind {

/// Two-tier tolerance policy. `decision` governs rank, clustering and
/// accept/reject choices; `strict` governs pure-arithmetic certificates
/// (reconstruction residuals, unitarity). Rank cuts are relative:
/// singular values above `rank_rel * sigma_max` count toward the rank.
struct Tolerances {
    double decision = 1e-8;
    double strict = 1e-10;
    double rank_rel = 1e-8;
};

}  // namespace nsfind
