#include "cogmap/schema.hpp"

#include <istream>
#include <ostream>
#include <unordered_set>

#include "cogmap/csv.hpp"
#include "cogmap/errors.hpp"

namespace cogmap {

std::string to_string(Level level) {
    switch (level) {
        case Level::family: return "family";
        case Level::region: return "region";
        case Level::country: return "country";
        case Level::world: return "world";
    }
    return "region";
}

Level parse_level(std::string_view text) {
    if (text == "family") return Level::family;
    if (text == "region") return Level::region;
    if (text == "country") return Level::country;
    if (text == "world") return Level::world;
    throw SchemaError("unknown level '" + std::string(text) + "', expected family|region|country|world");
}

namespace {

void check_name(const std::string& name) {
    if (name.empty()) throw SchemaError("indicator name must be non-empty");
    for (char c : name) {
        if (c == '\t' || c == '\n' || c == '\r')
            throw SchemaError("indicator name '" + name + "' contains control characters");
    }
}

} // namespace

IndicatorSchema::IndicatorSchema(std::vector<Indicator> indicators) : indicators_(std::move(indicators)) {
    std::unordered_set<std::string> seen;
    for (const auto& ind : indicators_) {
        check_name(ind.name);
        if (!seen.insert(ind.name).second)
            throw SchemaError("duplicate indicator name '" + ind.name + "'");
    }
}

std::optional<std::size_t> IndicatorSchema::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < indicators_.size(); ++i)
        if (indicators_[i].name == name) return i;
    return std::nullopt;
}

std::vector<std::string> IndicatorSchema::names() const {
    std::vector<std::string> out;
    out.reserve(indicators_.size());
    for (const auto& ind : indicators_) out.push_back(ind.name);
    return out;
}

IndicatorSchema load_schema(std::istream& in, char delimiter) {
    const csv::Table raw = csv::read(in, delimiter);
    if (raw.header.size() < 3 || raw.header[0] != "name" || raw.header[1] != "unit" ||
        raw.header[2] != "level")
        throw SchemaError("schema file must have header 'name,unit,level'");
    std::vector<Indicator> indicators;
    indicators.reserve(raw.rows.size());
    for (const auto& row : raw.rows)
        indicators.push_back({row[0], row[1], parse_level(std::string(csv::trim(row[2])))});
    return IndicatorSchema(std::move(indicators));
}

void save_schema(const IndicatorSchema& schema, std::ostream& out, char delimiter) {
    csv::write_row(out, {"name", "unit", "level"}, delimiter);
    for (const auto& ind : schema.indicators())
        csv::write_row(out, {ind.name, ind.unit, to_string(ind.level)}, delimiter);
}

IndicatorSchema schema_from_names(const std::vector<std::string>& names, Level level) {
    std::vector<Indicator> indicators;
    indicators.reserve(names.size());
    for (const auto& name : names) indicators.push_back({name, "", level});
    return IndicatorSchema(std::move(indicators));
}

LevelMapping make_mapping(std::vector<LevelMapping::Pair> pairs, Level from_level, Level to_level) {
    std::unordered_set<std::string> seen;
    for (const auto& pair : pairs) {
        if (pair.from_name.empty()) throw MappingError("mapping entry with empty from_name");
        if (!seen.insert(pair.from_name).second)
            throw MappingError("from_name '" + pair.from_name + "' appears more than once");
    }
    return LevelMapping{std::move(pairs), from_level, to_level};
}

LevelMapping load_mapping(std::istream& in, Level from_level, Level to_level, char delimiter) {
    const csv::Table raw = csv::read(in, delimiter);
    if (raw.header.size() < 2 || raw.header[0] != "from_name" || raw.header[1] != "to_name")
        throw MappingError("mapping file must have header 'from_name,to_name'");
    std::vector<LevelMapping::Pair> pairs;
    pairs.reserve(raw.rows.size());
    for (const auto& row : raw.rows) {
        std::string to = row[1];
        if (to == "-") to.clear(); // "Not found": no counterpart at the target level
        pairs.push_back({row[0], std::move(to)});
    }
    return make_mapping(std::move(pairs), from_level, to_level);
}

} // namespace cogmap
