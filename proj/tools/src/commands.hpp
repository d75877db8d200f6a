#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmdp/vertex_set.hpp"

namespace qmdp::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitInternal = 3;

/** 64-bit FNV-1a over the ids as little-endian 32-bit words, 16 hex digits. */
inline std::string result_hash(const VertexSet& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : s)
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Each register_* adds a subcommand whose callback stores its exit code in `status`.
void register_solve(CLI::App& app, int& status);
void register_mec(CLI::App& app, int& status);
void register_generate(CLI::App& app, int& status);
void register_check(CLI::App& app, int& status);
void register_bench(CLI::App& app, int& status);

/** Runs `body`, mapping library exceptions to exit codes and messages on stderr. */
int guarded(const std::function<int()>& body);

}  // namespace qmdp::cli
