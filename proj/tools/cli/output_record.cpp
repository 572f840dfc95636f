#include "cli/output_record.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "json.hpp"

namespace tripow::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<std::pair<RecordKind, std::string_view>, 6> kKindNames{{
    {RecordKind::Classification, "classification"},
    {RecordKind::Tilde, "tilde"},
    {RecordKind::Thresholds, "thresholds"},
    {RecordKind::VerifySummary, "verify-summary"},
    {RecordKind::Trajectory, "trajectory"},
    {RecordKind::SweepRow, "sweep-row"},
}};

json to_json_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return nullptr;
        else
          return x;
      },
      v);
}

Value from_json_value(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return std::monostate{};
    case json::value_t::boolean: return j.get<bool>();
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: return j.get<std::int64_t>();
    case json::value_t::number_float: return j.get<double>();
    case json::value_t::string: return j.get<std::string>();
    case json::value_t::array: return j.get<std::vector<double>>();
    default: throw std::invalid_argument("unsupported value in record");
  }
}

std::string text_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "-";
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(x);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          std::string out;
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) out += ", ";
            out += format_double(x[i]);
          }
          return out.empty() ? "(none)" : out;
        }
      },
      v);
}

}  // namespace

std::string_view to_string(RecordKind kind) noexcept {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

std::optional<RecordKind> parse_kind(std::string_view name) noexcept {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

const Value* OutputRecord::find(std::string_view key) const {
  const auto it = std::find_if(payload.begin(), payload.end(),
                               [&](const auto& kv) { return kv.first == key; });
  return it == payload.end() ? nullptr : &it->second;
}

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::string to_json_line(const OutputRecord& record) {
  json j;
  j["kind"] = std::string(to_string(record.kind));
  for (const auto& [key, value] : record.payload) j[key] = to_json_value(value);
  return j.dump();
}

OutputRecord from_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("record without a kind");
  const auto kind = parse_kind(j["kind"].get<std::string>());
  if (!kind) throw std::invalid_argument("unknown record kind");
  OutputRecord record{*kind, {}};
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    record.add(key, from_json_value(value));
  }
  return record;
}

std::string to_text(const OutputRecord& record) {
  std::size_t width = 0;
  for (const auto& kv : record.payload) width = std::max(width, kv.first.size());
  std::string out = fmt::format("[{}]\n", to_string(record.kind));
  for (const auto& [key, value] : record.payload)
    out += fmt::format("  {:<{}}  {}\n", key, width, text_value(value));
  return out;
}

void Emitter::emit(const OutputRecord& record) {
  if (json_) {
    out_ << to_json_line(record) << '\n';
  } else {
    if (!first_) out_ << '\n';
    out_ << to_text(record);
  }
  first_ = false;
}

}  // namespace tripow::cli
