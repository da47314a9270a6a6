// SPDX-License-Identifier: MIT
// Version strings stamped into every machine-readable output.
#pragma once

namespace hivetorus {

inline constexpr const char* kSamplesSchema = "hivetorus.samples/1";
inline constexpr const char* kReportSchema = "hivetorus.report/1";
inline constexpr const char* kConcentrationSchema = "hivetorus.concentration/1";
inline constexpr const char* kSpectrumSchema = "hivetorus.spectrum/1";
inline constexpr const char* kHoneycombSchema = "hivetorus.honeycomb/1";

}  // namespace hivetorus
