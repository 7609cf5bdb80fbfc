#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace smallsupport::cli {

// Exit codes: 0 success, 1 input error, 2 hypothesis or limit error,
// 3 property violation (a proven bound failed, i.e. a bug).

// alpha_override <= 0 means: use the maximal exponent the order supports.
int analyze_perm(const std::string& path, double alpha_override,
                 const std::string& format, std::ostream& out, std::ostream& err);

int verify_lemma(std::size_t n, std::uint64_t trials, std::uint64_t seed, unsigned threads,
                 const std::string& format, std::ostream& out, std::ostream& err);

int latin_command(const std::string& path, const std::string& action,
                  const std::string& format, std::size_t limit, std::ostream& out,
                  std::ostream& err);

int fmax_command(std::size_t n_max, std::size_t limit, const std::string& format,
                 std::ostream& out, std::ostream& err);

int design_command(const std::string& path, const std::string& action,
                   const std::string& format, std::ostream& out, std::ostream& err);

int sts_convert(const std::string& path, const std::string& output_path, std::ostream& out,
                std::ostream& err);

// Full argv-level entry point; reads SMALLSUPPORT_LIMIT_N for the
// enumeration ceiling (default 6).
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace smallsupport::cli
