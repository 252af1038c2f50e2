#pragma once

/// Reference-table generators. Every table is regenerated from first
/// principles on request, never from stored rows; the only constants
/// are the row ranges the tables cover.

#include <string>
#include <vector>

namespace collatz {

struct Table {
  int id = 0;
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footnotes;
};

/// Known ids: 1, 3, 4, 8, 9, 10, 11, 17, 18, 20, 21, 22.
Table make_table(int id);  // throws std::out_of_range for other ids

const std::vector<int>& known_table_ids();

std::string render_text(const Table& t);
std::string render_csv(const Table& t);

}  // namespace collatz
