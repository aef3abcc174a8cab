#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gsym/exactnum.hpp"
#include "gsym/table.hpp"

namespace gsym::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum class Format { text, csv, json };

/// Everything a command prints. Tables fill rows/cols/orders/values;
/// verification reports additionally fill suite, passed, checks and failures.
struct OutputDocument {
    std::string schema_version = kSchemaVersion;
    int k = 1;
    int n = 0;
    std::string kind;
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::vector<BigInt> orders;
    std::vector<std::vector<std::string>> values;

    bool is_report = false;
    std::string suite;
    bool passed = true;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;

    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

OutputDocument table_document(const CharacterTable& table, const std::string& kind);

std::string render(const OutputDocument& doc, Format format);
std::string to_json(const OutputDocument& doc);
/// Inverse of to_json(); throws std::invalid_argument on schema violations.
OutputDocument from_json(const std::string& text);

/// Entry point of the gsym executable. Exit codes: 0 success, 1 failed check
/// or internal inconsistency, 2 bad arguments.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsym::cli
