#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace quandlink::cli {

enum class Format { Table, Csv, Json };

std::optional<Format> parse_format(const std::string& name);

struct Common {
    Format format = Format::Table;
    bool quiet = false; // suppress the stdout report; exit codes unchanged
};

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;    // checked input is semantically invalid
inline constexpr int kExitNoFile = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitComponents = 5; // wrong component count for a 2-component operation

struct InvariantsOptions {
    int min_n = 2;
    int max_n = 7;
    std::string method = "oracle"; // closed | oracle | propagate
    double budget = 1e8;
};

// Each command reads inputs named by path ("-" = stdin), writes its report
// to out and diagnostics to err, and returns a process exit code.
int cmd_check(const std::string& quandle_spec, const Common& common, std::ostream& out,
              std::ostream& err);
int cmd_present(const std::string& link_path, const Common& common, std::ostream& out,
                std::ostream& err);
int cmd_linking(const std::string& link_path, const Common& common, std::ostream& out,
                std::ostream& err);
int cmd_hom_count(const std::string& link_path, const std::string& quandle_spec,
                  const std::string& method, bool list_colorings, double budget,
                  const Common& common, std::ostream& out, std::ostream& err);
int cmd_invariants(const std::string& link_path, const InvariantsOptions& options,
                   const Common& common, std::ostream& out, std::ostream& err);
int cmd_recover(const std::string& link_path, std::optional<int> max_n, const std::string& method,
                double budget, const Common& common, std::ostream& out, std::ostream& err);
int cmd_perturb(const std::string& link_path, std::uint64_t seed, int budget, const Common& common,
                std::ostream& out, std::ostream& err);

} // namespace quandlink::cli
