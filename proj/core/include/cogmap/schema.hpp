#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cogmap {

// Societal scale an indicator set describes.
enum class Level { family, region, country, world };

std::string to_string(Level level);
Level parse_level(std::string_view text);

struct Indicator {
    std::string name;
    std::string unit;
    Level level = Level::region;
};

// Ordered indicator list; the order defines column indices everywhere
// downstream. Names are unique, non-empty, and free of control characters.
class IndicatorSchema {
  public:
    IndicatorSchema() = default;
    explicit IndicatorSchema(std::vector<Indicator> indicators);

    std::size_t size() const { return indicators_.size(); }
    const Indicator& at(std::size_t i) const { return indicators_[i]; }
    const std::vector<Indicator>& indicators() const { return indicators_; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    std::vector<std::string> names() const;

  private:
    std::vector<Indicator> indicators_;
};

// name,unit,level rows; level one of family|region|country|world.
IndicatorSchema load_schema(std::istream& in, char delimiter = ',');
void save_schema(const IndicatorSchema& schema, std::ostream& out, char delimiter = ',');

// Builds a schema from bare names (empty units, uniform level).
IndicatorSchema schema_from_names(const std::vector<std::string>& names, Level level = Level::region);

// Typology correspondence between indicator sets at two scales. A to_name of
// "-" means the source indicator has no counterpart and is dropped.
struct LevelMapping {
    struct Pair {
        std::string from_name;
        std::string to_name; // empty = no target
    };
    std::vector<Pair> pairs;
    Level from_level = Level::family;
    Level to_level = Level::region;
};

// Validates that each from_name appears at most once.
LevelMapping make_mapping(std::vector<LevelMapping::Pair> pairs, Level from_level, Level to_level);

// from_name,to_name rows; literal "-" target marks "no counterpart".
LevelMapping load_mapping(std::istream& in, Level from_level, Level to_level, char delimiter = ',');

} // namespace cogmap
