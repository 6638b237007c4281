#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symhecke::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidInput = 2 };

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::uint32_t prime = 3;
  std::uint64_t seed = 1;
  int precision = 0;  // 0: policy precision
  int threads = 0;
  Format format = Format::Text;
  std::string out;
  std::uint64_t budget = 10'000'000;
  bool force = false;
  bool certified = false;
};

int cmd_rho(const RunConfig& cfg, const std::string& matrix_file, std::ostream& out);
int cmd_sigma(const RunConfig& cfg, const std::string& matrix_file, std::ostream& out);
int cmd_reduce(const RunConfig& cfg, const std::string& matrix_file, std::ostream& out);

int cmd_cosets_enum(const RunConfig& cfg, int dim, const std::string& mu, std::uint64_t limit, std::ostream& out);
int cmd_cosets_count(const RunConfig& cfg, int dim, const std::string& mu, std::optional<std::int64_t> at,
                     std::ostream& out);

int cmd_brute(const RunConfig& cfg, const std::string& mu, const std::string& nu, const std::string& lambda,
              std::ostream& out);
int cmd_formula(const RunConfig& cfg, const std::string& rule, const std::vector<std::string>& params,
                std::optional<std::int64_t> at, bool dump_witnesses, std::ostream& out);
int cmd_verify(const RunConfig& cfg, const std::string& suite, int trials, std::ostream& out);

}  // namespace symhecke::cli
