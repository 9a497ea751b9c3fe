#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitkit/json_io.hpp"

namespace orbitkit {

enum class Status { kPass, kFail, kInconclusive };

inline std::string status_str(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

// A structured command report: the command that ran, an echo of its parsed
// inputs, structured findings, and a list of named check verdicts.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  io::ojson& inputs() { return inputs_; }
  io::ojson& results() { return results_; }

  void add_verdict(std::string check, Status status,
                   io::ojson detail = io::ojson::object()) {
    verdicts_.push_back({std::move(check), status, std::move(detail)});
  }

  bool any_fail() const {
    for (const auto& v : verdicts_)
      if (v.status == Status::kFail) return true;
    return false;
  }

  struct Entry {
    std::string check;
    Status status;
    io::ojson detail;
  };
  const std::vector<Entry>& verdicts() const { return verdicts_; }

  io::ojson to_json() const {
    io::ojson verdicts = io::ojson::array();
    for (const auto& v : verdicts_) {
      io::ojson e{{"check", v.check}, {"status", status_str(v.status)}};
      if (!v.detail.empty()) e["detail"] = v.detail;
      verdicts.push_back(std::move(e));
    }
    return io::ojson{{"command", command_},
                     {"inputs", inputs_},
                     {"results", results_},
                     {"verdicts", std::move(verdicts)}};
  }

  std::string serialize(bool pretty = false) const {
    return pretty ? to_json().dump(2) : to_json().dump();
  }

 private:
  std::string command_;
  io::ojson inputs_ = io::ojson::object();
  io::ojson results_ = io::ojson::object();
  std::vector<Entry> verdicts_;
};

}  // namespace orbitkit
