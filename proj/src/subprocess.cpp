#include "relacheck/subprocess.hpp"

#include <algorithm>
#include <cerrno>
#include <csignal>
#include <mutex>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "relacheck/errors.hpp"

namespace relacheck {

namespace {

// A dead reader must surface as EPIPE on write, not kill this process.
void ignore_sigpipe_once() {
  static std::once_flag flag;
  std::call_once(flag, [] { ::signal(SIGPIPE, SIG_IGN); });
}

}  // namespace

LineProcess::LineProcess(const std::string& command) {
  ignore_sigpipe_once();

  int to_child[2];
  int from_child[2];
  if (::pipe(to_child) != 0) throw LaunchError("pipe() failed");
  if (::pipe(from_child) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw LaunchError("pipe() failed");
  }

  pid_ = ::fork();
  if (pid_ < 0) {
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) {
      ::close(fd);
    }
    throw LaunchError("fork() failed");
  }

  if (pid_ == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) {
      ::close(fd);
    }
    ::execl("/bin/sh", "sh", "-c", command.c_str(), nullptr);
    _exit(127);
  }

  ::close(to_child[0]);
  ::close(from_child[1]);
  to_child_ = to_child[1];
  from_child_ = from_child[0];
}

LineProcess::~LineProcess() {
  terminate();
  wait_status();
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
}

bool LineProcess::send_line(const std::string& line) {
  std::string payload = line;
  payload.push_back('\n');
  std::size_t written = 0;
  while (written < payload.size()) {
    const ssize_t n =
        ::write(to_child_, payload.data() + written, payload.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    written += static_cast<std::size_t>(n);
  }
  return true;
}

LineProcess::ReadStatus LineProcess::read_line(
    std::string& out, std::chrono::milliseconds timeout) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  while (true) {
    const std::size_t newline = buffer_.find('\n');
    if (newline != std::string::npos) {
      out = buffer_.substr(0, newline);
      buffer_.erase(0, newline + 1);
      return ReadStatus::kLine;
    }

    const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remaining.count() <= 0) return ReadStatus::kTimeout;
    // poll takes an int; wait in bounded slices for huge timeouts
    const int wait_ms =
        static_cast<int>(std::min<long long>(remaining.count(), 60'000));

    struct pollfd pfd = {from_child_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, wait_ms);
    if (ready < 0) {
      if (errno == EINTR) continue;
      return ReadStatus::kEof;
    }
    if (ready == 0) continue;  // slice elapsed; deadline check is at the top

    char chunk[4096];
    const ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      return ReadStatus::kEof;
    }
    if (n == 0) {
      // Child closed stdout; a buffered trailing line without a newline
      // still counts.
      if (!buffer_.empty()) {
        out = std::move(buffer_);
        buffer_.clear();
        return ReadStatus::kLine;
      }
      return ReadStatus::kEof;
    }
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void LineProcess::terminate() {
  if (pid_ > 0 && !reaped_) {
    ::kill(pid_, SIGKILL);
  }
}

int LineProcess::wait_status() {
  if (pid_ > 0 && !reaped_) {
    ::waitpid(pid_, &status_, 0);
    reaped_ = true;
  }
  return status_;
}

bool LineProcess::looks_unlaunchable() {
  const int status = wait_status();
  return WIFEXITED(status) &&
         (WEXITSTATUS(status) == 127 || WEXITSTATUS(status) == 126);
}

}  // namespace relacheck
