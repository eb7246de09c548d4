// Copyright 2026 The shutterlab Authors. All rights reserved.
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "shutterlab/config.hpp"
#include "shutterlab/errors.hpp"
#include "shutterlab/run.hpp"

int main(int argc, char** argv) {
  using namespace shutterlab::cli;

  CLI::App app{"Entangled matter-wave pairs released through quantum shutters"};
  std::string mode_name;
  std::string config_path;
  std::string out_path;
  app.add_option("mode", mode_name, "map | trace | scan | activation | verify")
      ->required()
      ->check(CLI::IsMember({"map", "trace", "scan", "activation", "verify"}));
  app.add_option("--config", config_path, "key = value run configuration")->required();
  app.add_option("--out", out_path, "CSV destination (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  std::ifstream file(config_path);
  if (!file) {
    std::cerr << "error: cannot read " << config_path << "\n";
    return kExitInvalid;
  }
  std::ostringstream text;
  text << file.rdbuf();

  RunConfig config;
  try {
    config = parse_config(text.str());
  } catch (const shutterlab::ConfigError& e) {
    std::cerr << config_path << ": " << e.what() << "\n";
    return kExitInvalid;
  }
  config.mode = *parse_mode(mode_name);
  if (!out_path.empty()) config.output_path = out_path;
  return run(config, std::cout, std::cerr);
}
