// Copyright 2026 The Thiele Authors
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


#ifndef THIELE_INSTANCE_IO_HPP_
#define THIELE_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "thiele/instance.hpp"
#include "thiele/profile_graph.hpp"
#include "thiele/reductions.hpp"
#include "thiele/solvers.hpp"

namespace thiele {

inline constexpr int kFormatVersion = 1;

// Reads an instance document (JSON, "format": 1) and returns the normalized
// instance. Throws Error(kInvalidInput) with a readable message on any
// structural or semantic problem.
Instance ParseInstance(std::string_view text);
Instance LoadInstance(const std::string& path);

// Per-voter weights in internal units plus the unit itself, so that parsing
// the output gives back an equal instance.
std::string SerializeInstance(const Instance& instance);
void SaveInstance(const Instance& instance, const std::string& path);

// Threshold given in document units, converted to internal units.
std::optional<Rational> InternalThreshold(const Instance& instance,
                                          const std::optional<Rational>& original);

std::string TraceJson(const KernelTrace& trace);

std::string AnalyzeReport(const Instance& instance, const DegreeStats& stats);

// Scores are reported in document units. `wall_ms` lands in
// stats.wall_time_ms and is the only field that varies between identical
// runs.
std::string SolveReport(const Instance& instance, const SolveOptions& options,
                        const SolveOutcome& outcome, const DegreeStats& stats,
                        double wall_ms);

std::string KernelReport(const Instance& original, const KernelResult& kernel,
                         const Overrides& overrides, const DegreeStats& stats,
                         double wall_ms);

}  // namespace thiele

#endif  // THIELE_INSTANCE_IO_HPP_
