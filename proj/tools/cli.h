// tools/cli.h

// Copyright 2026  The asp-lab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ASPLAB_TOOLS_CLI_H_
#define ASPLAB_TOOLS_CLI_H_

#include <filesystem>
#include <string>
#include <vector>

#include "asplab/data/splits.h"
#include "asplab/eval/results.h"
#include "asplab/model/checkpoint.h"

namespace asplab {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitAnalysis = 4;

// Runs the asp_lab command line. Errors are reported on stderr and mapped
// to the exit codes above.
int RunCli(int argc, const char *const *argv);
int RunCli(const std::vector<std::string> &args);  // args[0] is the program name

// $ASP_LAB_OUT, or "asp_lab_out" when unset.
std::filesystem::path OutputRoot();

// Predictions of a checkpoint on one split of a manifest.
EvalResult EvaluateCheckpoint(const Checkpoint &checkpoint,
                              const std::filesystem::path &manifest_path,
                              const std::filesystem::path &split_path, Split split);

}  // namespace asplab

#endif  // ASPLAB_TOOLS_CLI_H_
