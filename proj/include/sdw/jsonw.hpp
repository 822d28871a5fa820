#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sdw {

// Minimal JSON emitter with a fixed float format (12 significant digits).
// nlohmann::json prints shortest-round-trip floats, which is not the stable
// 12-digit contract the reports promise, so serialization goes through this
// writer instead. Keys must be appended in sorted order by the caller.
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();

    JsonWriter& key(std::string_view k);
    JsonWriter& value(double v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(std::string_view v);
    JsonWriter& value_bool(bool v);

    // The serialized document with a trailing newline.
    std::string str() const { return out_ + "\n"; }

    static std::string format_double(double v);
    static std::string escape(std::string_view s);

  private:
    void comma();

    std::string out_;
    std::vector<bool> first_;  // per nesting level
    bool pending_key_ = false;
};

}  // namespace sdw
