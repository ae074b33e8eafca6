#include "br/report.hpp"

#include <sstream>

namespace br {

namespace {

void render_node(std::ostringstream& os, const ReportNode& node, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << node.key << ":";
  if (!node.value.empty()) os << " " << node.value;
  os << "\n";
  for (const auto& child : node.children) render_node(os, child, depth + 1);
}

}  // namespace

std::string render_report(const Report& report) {
  std::ostringstream os;
  os << "report:\n";
  os << "  command: " << report.command << "\n";
  os << "  input: " << (report.input.empty() ? "-" : report.input) << "\n";
  os << "  fingerprint: "
     << (report.fingerprint.empty() ? "-" : report.fingerprint) << "\n";
  os << "  status: " << report.status << "\n";
  os << "  result:\n";
  for (const auto& node : report.result) render_node(os, node, 2);
  if (!report.trail.empty()) {
    os << "  trail:\n";
    for (const auto& node : report.trail) render_node(os, node, 2);
  }
  if (report.seconds) {
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(3);
    t << *report.seconds;
    os << "  timing: " << t.str() << "s\n";
  }
  return os.str();
}

std::vector<std::string> check_report_schema(const std::string& text) {
  std::vector<std::string> problems;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  int prev_depth = -1;
  bool saw_root = false;
  std::vector<std::string> top_keys;
  while (std::getline(in, line)) {
    ++no;
    if (line.empty()) continue;
    std::size_t indent = 0;
    while (indent < line.size() && line[indent] == ' ') ++indent;
    if (indent % 2 != 0) {
      problems.push_back("line " + std::to_string(no) + ": odd indentation");
      continue;
    }
    int depth = static_cast<int>(indent / 2);
    std::string body = line.substr(indent);
    auto colon = body.find(':');
    if (colon == std::string::npos || colon == 0) {
      problems.push_back("line " + std::to_string(no) + ": expected 'key: value'");
      continue;
    }
    std::string key = body.substr(0, colon);
    std::string value = colon + 1 < body.size() ? body.substr(colon + 1) : "";
    if (!value.empty() && value[0] != ' ') {
      problems.push_back("line " + std::to_string(no) +
                         ": missing space after ':'");
      continue;
    }
    if (depth == 0) {
      if (saw_root)
        problems.push_back("line " + std::to_string(no) + ": multiple roots");
      if (key != "report")
        problems.push_back("line " + std::to_string(no) + ": root must be 'report'");
      saw_root = true;
    } else if (!saw_root) {
      problems.push_back("line " + std::to_string(no) + ": content before root");
    }
    if (depth > prev_depth + 1)
      problems.push_back("line " + std::to_string(no) + ": indentation jump");
    if (depth == 1) top_keys.push_back(key);
    prev_depth = depth;
  }
  if (!saw_root) {
    problems.push_back("missing 'report:' root");
    return problems;
  }
  for (const char* required : {"command", "input", "fingerprint", "status"}) {
    bool found = false;
    for (const auto& k : top_keys)
      if (k == required) found = true;
    if (!found) problems.push_back(std::string("missing required key '") +
                                   required + "'");
  }
  return problems;
}

}  // namespace br
