#include "json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fpj::cli {
namespace {

void write_string(std::string& out, const std::string& s) {
  out += '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
}

void newline(std::string& out, int indent) {
  out += '\n';
  out.append(static_cast<std::size_t>(indent), ' ');
}

}  // namespace

std::string format_double(double d) {
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  if (d == 0.0) d = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

Json& Json::set(std::string key, Json v) {
  auto* obj = std::get_if<Object>(&value_);
  if (!obj) throw std::logic_error("Json::set on a non-object");
  obj->emplace_back(std::move(key), std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  auto* arr = std::get_if<Array>(&value_);
  if (!arr) throw std::logic_error("Json::push on a non-array");
  arr->push_back(std::move(v));
  return *this;
}

bool Json::is_scalar() const {
  return !std::holds_alternative<Array>(value_) && !std::holds_alternative<Object>(value_);
}

bool Json::is_flat_array() const {
  const auto* arr = std::get_if<Array>(&value_);
  if (!arr) return false;
  for (const auto& v : *arr) {
    if (!v.is_scalar()) return false;
  }
  return true;
}

std::string Json::dump() const {
  std::string out;
  write(out, 0);
  out += '\n';
  return out;
}

void Json::write(std::string& out, int indent) const {
  if (std::holds_alternative<std::nullptr_t>(value_)) {
    out += "null";
  } else if (const auto* b = std::get_if<bool>(&value_)) {
    out += *b ? "true" : "false";
  } else if (const auto* d = std::get_if<double>(&value_)) {
    const std::string text = format_double(*d);
    if (std::isfinite(*d)) {
      out += text;
    } else {
      write_string(out, text);
    }
  } else if (const auto* i = std::get_if<std::int64_t>(&value_)) {
    out += std::to_string(*i);
  } else if (const auto* s = std::get_if<std::string>(&value_)) {
    write_string(out, *s);
  } else if (const auto* arr = std::get_if<Array>(&value_)) {
    if (arr->empty()) {
      out += "[]";
    } else if (is_flat_array()) {
      out += '[';
      for (std::size_t k = 0; k < arr->size(); ++k) {
        if (k) out += ", ";
        (*arr)[k].write(out, indent);
      }
      out += ']';
    } else {
      out += '[';
      for (std::size_t k = 0; k < arr->size(); ++k) {
        if (k) out += ',';
        newline(out, indent + 2);
        (*arr)[k].write(out, indent + 2);
      }
      newline(out, indent);
      out += ']';
    }
  } else if (const auto* obj = std::get_if<Object>(&value_)) {
    if (obj->empty()) {
      out += "{}";
      return;
    }
    out += '{';
    for (std::size_t k = 0; k < obj->size(); ++k) {
      if (k) out += ',';
      newline(out, indent + 2);
      write_string(out, (*obj)[k].first);
      out += ": ";
      (*obj)[k].second.write(out, indent + 2);
    }
    newline(out, indent);
    out += '}';
  }
}

}  // namespace fpj::cli
