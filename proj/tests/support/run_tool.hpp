#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

#ifndef RULEDMMP_TOOL
#error "RULEDMMP_TOOL must point at the ruledmmp binary"
#endif

namespace testsupport {

struct ToolResult {
  std::string out;
  int exit_code = 0;
};

// Runs the CLI with stderr folded away, capturing stdout and the exit code.
inline ToolResult run_tool(const std::string& args) {
  std::string cmd = std::string(RULEDMMP_TOOL) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  ToolResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testsupport
