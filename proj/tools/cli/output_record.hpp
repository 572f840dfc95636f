#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tripow::cli {

enum class RecordKind {
  Classification,
  Tilde,
  Thresholds,
  VerifySummary,
  Trajectory,
  SweepRow,
};

std::string_view to_string(RecordKind kind) noexcept;
std::optional<RecordKind> parse_kind(std::string_view name) noexcept;

using Value = std::variant<std::monostate, bool, std::int64_t, double,
                           std::string, std::vector<double>>;

/// One result line: a kind tag plus ordered key/value pairs.
struct OutputRecord {
  RecordKind kind;
  std::vector<std::pair<std::string, Value>> payload;

  OutputRecord& add(std::string key, Value value) {
    payload.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  const Value* find(std::string_view key) const;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Single-line JSON object, "kind" first. Doubles use the shortest
/// representation that parses back to the same bits; non-finite doubles
/// become null.
std::string to_json_line(const OutputRecord& record);

/// Inverse of to_json_line. Throws std::invalid_argument on malformed input.
OutputRecord from_json_line(std::string_view line);

/// Aligned "key  value" block headed by the kind; doubles with 17
/// significant digits.
std::string to_text(const OutputRecord& record);

std::string format_double(double x);

/// Writes records as text or as JSON lines.
class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void emit(const OutputRecord& record);
  bool json() const noexcept { return json_; }

 private:
  std::ostream& out_;
  bool json_;
  bool first_ = true;
};

}  // namespace tripow::cli
