#include "crnkit/fixtures.hpp"

#include <algorithm>

namespace crnkit {

namespace detail {
struct FixtureEntry {
    std::string_view name;
    std::string_view text;
};
extern const FixtureEntry fixture_table[];
extern const std::size_t fixture_table_size;
}  // namespace detail

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < detail::fixture_table_size; ++i) {
        out.emplace_back(detail::fixture_table[i].name);
    }
    return out;
}

std::string_view fixture_text(std::string_view name) {
    for (std::size_t i = 0; i < detail::fixture_table_size; ++i) {
        if (detail::fixture_table[i].name == name) {
            return detail::fixture_table[i].text;
        }
    }
    throw NetworkError("unknown fixture '" + std::string(name) + "'");
}

Network fixture(std::string_view name) {
    return parse_network(fixture_text(name));
}

}  // namespace crnkit
