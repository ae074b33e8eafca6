// Deterministic tree-structured text reports plus a schema checker.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace br {

struct ReportNode {
  std::string key;
  std::string value;  // empty for section nodes
  std::vector<ReportNode> children;

  ReportNode() = default;
  ReportNode(std::string key, std::string value)
      : key(std::move(key)), value(std::move(value)) {}
  explicit ReportNode(std::string key) : key(std::move(key)) {}

  ReportNode& add(std::string k, std::string v) {
    children.emplace_back(std::move(k), std::move(v));
    return children.back();
  }
  ReportNode& add(ReportNode node) {
    children.push_back(std::move(node));
    return children.back();
  }
};

struct Report {
  std::string command;
  std::string input;        // file name or "-"
  std::string fingerprint;  // datum content hash
  std::string status;       // ok | inconclusive | error
  std::vector<ReportNode> result;
  std::vector<ReportNode> trail;
  std::optional<double> seconds;  // rendered only when set
};

// Renders:
//   report:
//     command: ...
//     input: ...
//     fingerprint: ...
//     status: ...
//     result:
//       ...
//     trail:
//       ...
std::string render_report(const Report& report);

// Structural validation: returns problems, empty when the text conforms.
std::vector<std::string> check_report_schema(const std::string& text);

}  // namespace br
