#ifndef TN3_TABLES_HPP
#define TN3_TABLES_HPP

#include <string>
#include <vector>

namespace tn3 {

struct TableData {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Regenerates the three classification tables (spherical classes,
/// manifold/type admission matrix, real-projective classes) by running
/// the classifier over representative descriptor families.
std::vector<TableData> emit_tables();

std::string render_tables_markdown(const std::vector<TableData>& tables);
std::string render_tables_csv(const std::vector<TableData>& tables);

} // namespace tn3

#endif
