#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace rod {

// Shortest round-trip decimal form; deterministic, so repeated runs emit
// byte-identical files.
inline std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  if (res.ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

inline std::string format_percent(double fraction, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, fraction * 100.0);
  return std::string(buf);
}

inline std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return std::string(buf);
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // fixed newlines everywhere
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return data;
}

// CSV fields are written unquoted; reject separators early instead of
// growing a quoting dialect.
inline void check_csv_safe(const std::string& field, const char* what) {
  if (field.find_first_of(",\n\r\"") != std::string::npos) {
    throw std::invalid_argument(std::string(what) +
                                " may not contain commas, quotes or newlines: '" +
                                field + "'");
  }
}

}  // namespace rod
