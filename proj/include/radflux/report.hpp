//
// radflux: computational radiometry on the unit sphere.
//
// Copyright 2026 The radflux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
#pragma once

#include <string>

namespace radflux {

inline constexpr const char* kToolName = "radflux";
inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a 64-bit digest, rendered as 16 hex digits; used to fingerprint
/// scene inputs in reports.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace radflux
