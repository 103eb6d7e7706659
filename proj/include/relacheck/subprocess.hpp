#pragma once

#include <chrono>
#include <string>

#include <sys/types.h>

namespace relacheck {

// A child process spoken to over line-delimited stdin/stdout. Commands run
// through /bin/sh -c. The destructor kills and reaps whatever is left.
class LineProcess {
 public:
  explicit LineProcess(const std::string& command);
  ~LineProcess();

  LineProcess(const LineProcess&) = delete;
  LineProcess& operator=(const LineProcess&) = delete;

  enum class ReadStatus { kLine, kEof, kTimeout };

  // Writes one line (newline appended). Returns false if the pipe is
  // already closed on the child's side.
  bool send_line(const std::string& line);

  // Blocks until a full line, EOF, or the deadline. On kLine the newline
  // is stripped.
  ReadStatus read_line(std::string& out, std::chrono::milliseconds timeout);

  // SIGKILLs the child if still running.
  void terminate();

  // Reaps and reports the raw wait() status; only meaningful after the
  // child exited (EOF seen or terminate() called).
  int wait_status();

  // True when the child exited on its own with sh's "command not found" /
  // "not executable" statuses (127 / 126).
  bool looks_unlaunchable();

 private:
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  bool reaped_ = false;
  int status_ = 0;
};

}  // namespace relacheck
