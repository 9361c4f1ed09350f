// Copyright 2026 The fsc Authors.
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

#include "fsc/log.hpp"

#include <cstdlib>
#include <memory>
#include <mutex>
#include <string_view>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace fsc::log {
namespace {

spdlog::level::level_enum level_from_env() {
  const char* raw = std::getenv("FSC_LOG");
  if (raw == nullptr) return spdlog::level::warn;
  const std::string_view value(raw);
  if (value == "error") return spdlog::level::err;
  if (value == "warn") return spdlog::level::warn;
  if (value == "info") return spdlog::level::info;
  if (value == "debug") return spdlog::level::debug;
  return spdlog::level::warn;
}

spdlog::logger& logger() {
  static std::once_flag once;
  static std::shared_ptr<spdlog::logger> instance;
  std::call_once(once, [] {
    instance = std::make_shared<spdlog::logger>(
        "fsc", std::make_shared<spdlog::sinks::stderr_sink_mt>());
    instance->set_pattern("[%l] %v");
    instance->set_level(level_from_env());
  });
  return *instance;
}

}  // namespace

void init_from_env() { logger().set_level(level_from_env()); }

void error(const std::string& message) { logger().error(message); }
void warn(const std::string& message) { logger().warn(message); }
void info(const std::string& message) { logger().info(message); }
void debug(const std::string& message) { logger().debug(message); }

}  // namespace fsc::log
