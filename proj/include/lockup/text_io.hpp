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

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace lockup {

/// Every float the tool emits goes through this: 9 significant digits,
/// locale-independent, so identical runs produce identical bytes.
std::string fmt9(double x);

/// Minimal ordered JSON emitter. Numbers are written with fmt9 so output is
/// deterministic and diff-friendly.
class JsonWriter {
public:
  JsonWriter& obj_open();
  JsonWriter& obj_close();
  JsonWriter& arr_open();
  JsonWriter& arr_close();
  JsonWriter& key(std::string_view k);
  JsonWriter& num(double v);
  JsonWriter& integer(std::int64_t v);
  JsonWriter& boolean(bool v);
  JsonWriter& str(std::string_view v);

  JsonWriter& kv(std::string_view k, double v) { return key(k).num(v); }
  JsonWriter& kv(std::string_view k, std::int64_t v) { return key(k).integer(v); }
  JsonWriter& kv(std::string_view k, bool v) { return key(k).boolean(v); }
  JsonWriter& kv(std::string_view k, std::string_view v) { return key(k).str(v); }

  std::string take();

private:
  void separate();
  std::ostringstream out_;
  std::vector<bool> first_;
  bool pending_key_ = false;
};

}  // namespace lockup
