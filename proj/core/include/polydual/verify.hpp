#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace polydual {

enum class RowStatus { pass, fail, observed };

const char* to_string(RowStatus s);

struct RowReport {
  std::string label;
  std::string weights;
  RowStatus status = RowStatus::pass;
  std::vector<std::string> computed;  // values found, printed for every row
  std::vector<std::string> failures;  // empty unless status is fail
};

struct TableReport {
  std::string table_id;
  std::vector<RowReport> rows;

  std::size_t count(RowStatus s) const;
  bool passed() const { return count(RowStatus::fail) == 0; }
  /// One line per row and a summary line; byte-identical across runs.
  std::string to_text() const;
};

/// Recomputes every row of an embedded table and diffs it against the stored
/// expectations. Rows flagged `observed` are reported but never fail.
/// Throws InputError for an unknown table id.
TableReport verify_table(const std::string& table_id);

}  // namespace polydual
