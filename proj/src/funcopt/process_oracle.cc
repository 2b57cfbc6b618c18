// Copyright 2026 The Authors.
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

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <sstream>

#include "bandits/errors.h"
#include "bandits/funcopt.h"

namespace bandits {

ProcessOracle::ProcessOracle(const std::string& command) {
  if (command.empty()) throw ConfigError("ProcessOracle: empty command");
  int in[2];
  int out[2];
  if (pipe(in) != 0) throw ConfigError("ProcessOracle: pipe failed");
  if (pipe(out) != 0) {
    close(in[0]);
    close(in[1]);
    throw ConfigError("ProcessOracle: pipe failed");
  }
  pid_ = fork();
  if (pid_ < 0) {
    close(in[0]);
    close(in[1]);
    close(out[0]);
    close(out[1]);
    throw ConfigError("ProcessOracle: fork failed");
  }
  if (pid_ == 0) {
    dup2(in[0], STDIN_FILENO);
    dup2(out[1], STDOUT_FILENO);
    close(in[0]);
    close(in[1]);
    close(out[0]);
    close(out[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in[0]);
  close(out[1]);
  to_child_ = in[1];
  from_child_ = out[0];
  // A dead child must surface as an error, not a signal.
  signal(SIGPIPE, SIG_IGN);
}

ProcessOracle::~ProcessOracle() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  if (pid_ > 0) {
    int status = 0;
    if (waitpid(pid_, &status, WNOHANG) == 0) {
      kill(pid_, SIGTERM);
      waitpid(pid_, &status, 0);
    }
  }
}

double ProcessOracle::operator()(const Point& x) {
  std::ostringstream line;
  line.precision(17);
  for (size_t d = 0; d < x.size(); ++d) {
    if (d > 0) line << ' ';
    line << x[d];
  }
  line << '\n';
  const std::string msg = line.str();
  size_t sent = 0;
  while (sent < msg.size()) {
    const ssize_t n = write(to_child_, msg.data() + sent, msg.size() - sent);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw NumericalError("ProcessOracle: write failed");
    sent += static_cast<size_t>(n);
  }
  size_t eol;
  while ((eol = buffer_.find('\n')) == std::string::npos) {
    char chunk[256];
    const ssize_t n = read(from_child_, chunk, sizeof(chunk));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw NumericalError("ProcessOracle: oracle closed its output");
    buffer_.append(chunk, static_cast<size_t>(n));
  }
  const std::string reply = buffer_.substr(0, eol);
  buffer_.erase(0, eol + 1);
  char* end = nullptr;
  const double value = std::strtod(reply.c_str(), &end);
  while (end != nullptr && (*end == ' ' || *end == '\r' || *end == '\t')) {
    ++end;
  }
  if (end == reply.c_str() || end == nullptr || *end != '\0') {
    throw NumericalError("ProcessOracle: unparsable reply '" + reply + "'");
  }
  return value;
}

}  // namespace bandits
