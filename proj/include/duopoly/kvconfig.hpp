#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace duopoly {

/// Error raised by config parsing; carries the offending line and key when known.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg, int line = 0, std::string key = "")
      : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line),
        key_(std::move(key)) {}

  int line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  int line_;
  std::string key_;
};

/// Flat key=value file: one assignment per line, '#' starts a comment,
/// blank lines ignored. Keys are [A-Za-z0-9_.]+; later assignments to the
/// same key override earlier ones.
class KvFile {
 public:
  struct Entry {
    std::string key;
    std::string value;
    int line = 0;
  };

  static KvFile parse(std::string_view text);
  static KvFile load(const std::string& path);

  /// Insert or overwrite a key (used for command-line overrides).
  void set(const std::string& key, const std::string& value, int line = 0);

  bool has(std::string_view key) const;
  const Entry* find(std::string_view key) const;

  /// Typed getters; throw config_error naming the key on absence or bad syntax.
  std::string get_string(std::string_view key) const;
  double get_double(std::string_view key) const;
  long long get_int(std::string_view key) const;

  std::string get_string_or(std::string_view key, std::string fallback) const;
  double get_double_or(std::string_view key, double fallback) const;
  long long get_int_or(std::string_view key, long long fallback) const;

  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Canonical "key=value\n" serialization, sorted by key. Used for hashing.
  std::string canonical() const;

 private:
  std::vector<Entry> entries_;
};

double parse_double_strict(const std::string& text, std::string_view key, int line);
long long parse_int_strict(const std::string& text, std::string_view key, int line);

}  // namespace duopoly
