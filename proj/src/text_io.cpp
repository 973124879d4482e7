//------------------------------------------------------------------------------
//
//   Copyright 2026 the lockup authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "lockup/text_io.hpp"

#include <cstdio>

namespace lockup {

std::string fmt9(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

void JsonWriter::separate() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ << ",";
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::obj_open() {
  separate();
  out_ << "{";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::obj_close() {
  out_ << "}";
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::arr_open() {
  separate();
  out_ << "[";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::arr_close() {
  out_ << "]";
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  separate();
  out_ << '"' << k << "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::num(double v) {
  separate();
  out_ << fmt9(v);
  return *this;
}

JsonWriter& JsonWriter::integer(std::int64_t v) {
  separate();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::boolean(bool v) {
  separate();
  out_ << (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::str(std::string_view v) {
  separate();
  out_ << '"';
  for (char ch : v) {
    if (ch == '"' || ch == '\\') out_ << '\\';
    out_ << ch;
  }
  out_ << '"';
  return *this;
}

std::string JsonWriter::take() { return out_.str(); }

}  // namespace lockup
