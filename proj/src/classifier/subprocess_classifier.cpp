// Copyright 2026 The procnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "procnoise/classifier/subprocess_classifier.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

#include "procnoise/classifier/protocol.hpp"
#include "procnoise/error.hpp"

extern char** environ;

namespace procnoise::classifier {
namespace {

using Clock = std::chrono::steady_clock;

int remaining_ms(Clock::time_point deadline) {
  const auto left =
      std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
  return left.count() <= 0 ? 0 : static_cast<int>(std::min<long long>(left.count(), 1 << 30));
}

std::string errno_text() { return std::strerror(errno); }

}  // namespace

std::vector<std::string> split_command(std::string_view command) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false;
  char quote = 0;
  for (std::size_t i = 0; i < command.size(); ++i) {
    const char ch = command[i];
    if (quote) {
      if (ch == quote) {
        quote = 0;
      } else if (ch == '\\' && quote == '"' && i + 1 < command.size()) {
        cur += command[++i];
      } else {
        cur += ch;
      }
    } else if (ch == '\'' || ch == '"') {
      quote = ch;
      in_token = true;
    } else if (ch == '\\' && i + 1 < command.size()) {
      cur += command[++i];
      in_token = true;
    } else if (ch == ' ' || ch == '\t' || ch == '\n') {
      if (in_token) out.push_back(std::move(cur));
      cur.clear();
      in_token = false;
    } else {
      cur += ch;
      in_token = true;
    }
  }
  if (quote) throw ParameterError("unterminated quote in command line");
  if (in_token) out.push_back(std::move(cur));
  return out;
}

std::unique_ptr<SubprocessClassifier> SubprocessClassifier::open(
    const SubprocessConfig& config) {
  if (config.argv.empty()) throw SpawnError("empty classifier command");
  ::signal(SIGPIPE, SIG_IGN);

  int in_pipe[2];   // parent writes in_pipe[1], child reads in_pipe[0]
  int out_pipe[2];  // child writes out_pipe[1], parent reads out_pipe[0]
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) throw SpawnError("pipe: " + errno_text());
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw SpawnError("pipe: " + errno_text());
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);

  std::vector<char*> argv;
  for (const auto& a : config.argv) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);

  pid_t pid = -1;
  const int rc = ::posix_spawnp(&pid, argv[0], &actions, nullptr, argv.data(),
                                environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  if (rc != 0) {
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    throw SpawnError("cannot spawn '" + config.argv[0] + "': " +
                     std::strerror(rc));
  }
  ::fcntl(in_pipe[1], F_SETFL, ::fcntl(in_pipe[1], F_GETFL) | O_NONBLOCK);

  std::unique_ptr<SubprocessClassifier> handle(
      new SubprocessClassifier(config, pid, in_pipe[1], out_pipe[0]));
  const auto deadline = Clock::now() + config.handshake_timeout;
  const auto line = handle->read_line(deadline, "handshake");
  if (!line) {
    throw SpawnError("classifier '" + config.argv[0] +
                     "' closed its output before the handshake (" +
                     handle->exit_status_text() + ")");
  }
  handle->class_count_ = parse_handshake(*line);
  return handle;
}

SubprocessClassifier::SubprocessClassifier(SubprocessConfig config, pid_t pid,
                                           int to_child, int from_child)
    : config_(std::move(config)),
      pid_(pid),
      to_child_(to_child),
      from_child_(from_child) {}

SubprocessClassifier::~SubprocessClassifier() { shutdown(); }

void SubprocessClassifier::shutdown() {
  if (to_child_ >= 0) {
    ::close(to_child_);
    to_child_ = -1;
  }
  if (pid_ > 0) {
    int status = 0;
    const auto give_up = Clock::now() + std::chrono::seconds(2);
    while (::waitpid(pid_, &status, WNOHANG) == 0) {
      if (Clock::now() >= give_up) {
        ::kill(pid_, SIGKILL);
        ::waitpid(pid_, &status, 0);
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    pid_ = -1;
  }
  if (from_child_ >= 0) {
    ::close(from_child_);
    from_child_ = -1;
  }
}

std::string SubprocessClassifier::exit_status_text() {
  if (pid_ <= 0) return "exit status unavailable";
  int status = 0;
  pid_t r = 0;
  const auto give_up = Clock::now() + std::chrono::milliseconds(500);
  while ((r = ::waitpid(pid_, &status, WNOHANG)) == 0 && Clock::now() < give_up) {
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  if (r != pid_) return "still running";
  pid_ = -1;
  if (WIFEXITED(status)) return "exit status " + std::to_string(WEXITSTATUS(status));
  if (WIFSIGNALED(status)) return "killed by signal " + std::to_string(WTERMSIG(status));
  return "abnormal termination";
}

bool SubprocessClassifier::fill_buffer(Clock::time_point deadline,
                                       const char* phase) {
  pollfd pfd{from_child_, POLLIN, 0};
  for (;;) {
    const int rc = ::poll(&pfd, 1, remaining_ms(deadline));
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw ClassifierError(std::string("poll: ") + errno_text());
    }
    if (rc == 0) {
      throw TimeoutError(std::string("classifier timed out during ") + phase);
    }
    char chunk[65536];
    const ssize_t n = ::read(from_child_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      throw ClassifierError(std::string("read: ") + errno_text());
    }
    if (n == 0) return false;
    read_buffer_.append(chunk, static_cast<std::size_t>(n));
    return true;
  }
}

std::optional<std::string> SubprocessClassifier::read_line(
    Clock::time_point deadline, const char* phase) {
  for (;;) {
    const auto nl = read_buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = read_buffer_.substr(0, nl);
      read_buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    if (!fill_buffer(deadline, phase)) return std::nullopt;
  }
}

std::vector<Prediction> SubprocessClassifier::classify(
    std::span<const ImageRef> images) {
  if (broken_) {
    throw ClassifierError("classifier handle is unusable after an earlier error");
  }
  std::vector<Prediction> results;
  if (images.empty()) return results;
  results.reserve(images.size());

  // Any exception below leaves the stream in an unknown state.
  broken_ = true;
  const auto deadline = Clock::now() + config_.batch_timeout;
  std::string out;
  std::size_t out_pos = 0;
  std::size_t next_request = 0;
  // Set once the child stops accepting input; its remaining output is still
  // read so the crash report names the last answered request.
  bool input_closed = false;

  auto crash = [&](const std::string& why) {
    const std::string last = results.empty() ? std::string() : results.back().id;
    return ChildCrashError(
        "classifier " + why + " after " + std::to_string(results.size()) +
            " of " + std::to_string(images.size()) +
            " predictions (last successful id '" + last + "', " +
            exit_status_text() + ")",
        last);
  };

  while (results.size() < images.size()) {
    if (!input_closed && out_pos == out.size() && next_request < images.size()) {
      const auto& ref = images[next_request++];
      out = encode_request(ref.id, *ref.image);
      out += '\n';
      out_pos = 0;
    }

    // Drain complete lines already buffered before blocking.
    const auto nl = read_buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = read_buffer_.substr(0, nl);
      read_buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto p = parse_response(line, class_count_);
      const auto& expected = images[results.size()].id;
      if (p.id != expected) {
        throw ProtocolError("response id '" + p.id + "' does not match request '" +
                            expected + "'");
      }
      results.push_back(std::move(p));
      continue;
    }

    pollfd fds[2];
    nfds_t count = 0;
    fds[count++] = {from_child_, POLLIN, 0};
    const bool writing = !input_closed && out_pos < out.size();
    if (writing) fds[count++] = {to_child_, POLLOUT, 0};
    const int rc = ::poll(fds, count, remaining_ms(deadline));
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw ClassifierError(std::string("poll: ") + errno_text());
    }
    if (rc == 0) {
      throw TimeoutError("classifier batch timed out after " +
                         std::to_string(results.size()) + " of " +
                         std::to_string(images.size()) + " predictions");
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char chunk[65536];
      const ssize_t n = ::read(from_child_, chunk, sizeof chunk);
      if (n == 0) throw crash("closed its output");
      if (n < 0 && errno != EINTR && errno != EAGAIN) {
        throw crash(std::string("read failed: ") + errno_text());
      }
      if (n > 0) read_buffer_.append(chunk, static_cast<std::size_t>(n));
    }
    if (writing && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t n =
          ::write(to_child_, out.data() + out_pos, out.size() - out_pos);
      if (n < 0) {
        if (errno == EPIPE) {
          input_closed = true;
        } else if (errno != EINTR && errno != EAGAIN) {
          throw crash(std::string("write failed: ") + errno_text());
        }
      } else {
        out_pos += static_cast<std::size_t>(n);
      }
    }
  }
  broken_ = false;
  return results;
}

std::string SubprocessClassifier::describe() const {
  std::string cmd;
  for (const auto& a : config_.argv) {
    if (!cmd.empty()) cmd += ' ';
    cmd += a;
  }
  return "subprocess(" + cmd + "; class_count=" + std::to_string(class_count_) +
         "; preprocessing declared by the classifier)";
}

std::unique_ptr<Classifier> open_subprocess(const SubprocessConfig& config) {
  return SubprocessClassifier::open(config);
}

}  // namespace procnoise::classifier
