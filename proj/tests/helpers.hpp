#pragma once

// Bits shared between the test binaries.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <flip/errors.hpp>
#include <flip/nielsen.hpp>

namespace testutil {

// Runs f expecting it to throw Error with the given code; returns the message.
template <typename F>
std::string expect_errc(F&& f, flip::errc want) {
  try {
    std::forward<F>(f)();
  } catch (const flip::Error& e) {
    if (e.code() != want)
      throw std::runtime_error(std::string("wrong error code: got ") + flip::errc_name(e.code()) +
                               " (" + e.what() + "), want " + flip::errc_name(want));
    return e.what();
  }
  throw std::runtime_error(std::string("expected error ") + flip::errc_name(want) +
                           " but nothing was thrown");
}

// S3 as permutations of {0,1,2}: 0=id, 1=(01), 2=(02), 3=(12), 4=(012), 5=(021),
// composed right-to-left. An independent hand check lives in the table below.
inline std::vector<std::vector<int>> s3_multiplication() {
  return {{0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 4, 0, 5, 1, 3},
          {3, 5, 4, 0, 2, 1}, {4, 2, 3, 1, 5, 0}, {5, 3, 1, 2, 0, 4}};
}

struct CmdResult {
  int status = -1;
  std::string out;
};

// Runs a shell command, capturing stdout; stderr passes through.
inline CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int rc = pclose(pipe);
  r.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  return r;
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

}  // namespace testutil
