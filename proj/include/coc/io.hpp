#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "coc/kernel.hpp"

namespace coc {

/// Instance file contents. Files number vertices from 1; the graph here
/// numbers them from 0.
///
///   c <comment>
///   p coc <n> <m>
///   l <ell>            (optional)
///   k <k>              (optional)
///   e <u> <v>          (m lines)
struct InstanceFile {
  Graph graph;
  std::optional<int> ell;
  std::optional<int> k;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

InstanceFile parse_instance(std::istream& in);
InstanceFile read_instance_file(const std::string& path);

/// Writes the instance with vertices renumbered 1..n in id order. When the
/// ids are not already 0..n-1, a "c vertex <new> <old>" line (both 1-based)
/// records each renaming.
void write_instance(std::ostream& out, const COCInstance& inst);
std::string format_instance(const COCInstance& inst);

inline constexpr const char* kReportSchema = "coc-kernel-report/1";

/// Machine-readable kernelization report; vertex ids are 1-based.
nlohmann::json kernel_report(const COCInstance& original,
                             const KernelResult& result);

}  // namespace coc
