#include <doctest.h>

#include <regex>
#include <sstream>

#include "fibpascal/errors.hpp"
#include "fibpascal/render.hpp"

using namespace fibpascal;

namespace {

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

// Glyphs of one ASCII row, in column order.
std::string glyphs(const std::string& line) {
    std::string g;
    for (char c : line) {
        if (c != ' ') g += c;
    }
    return g;
}

}  // namespace

TEST_CASE("novel ascii k=4") {
    const auto out = lines(render_ascii({RenderMode::novel, 4, 6, RenderFormat::ascii, false}));
    REQUIRE(out.size() == 6);
    CHECK(glyphs(out[4]) == "..#..");
    CHECK(glyphs(out[5]) == "-....-");
    CHECK(glyphs(out[0]) == ".");
    CHECK(out[5] == "- . . . . -");
    CHECK(out[0] == "     .");
}

TEST_CASE("novel ascii k=0 is the apex") {
    const auto out = lines(render_ascii({RenderMode::novel, 0, 2, RenderFormat::ascii, false}));
    REQUIRE(out.size() == 2);
    CHECK(glyphs(out[0]) == "#");
    CHECK(glyphs(out[1]) == "..");
}

TEST_CASE("novel ascii uses every glyph of the alphabet") {
    const auto out = lines(render_ascii({RenderMode::novel, 9, 11, RenderFormat::ascii, false}));
    CHECK(glyphs(out[9]) == "..=....=..");
    CHECK(glyphs(out[10]) == "+....+....+");
    const auto even = lines(render_ascii({RenderMode::novel, 10, 12, RenderFormat::ascii, false}));
    CHECK(glyphs(even[10]) == "#....#....#");
    CHECK(glyphs(even[11]) == "...-....-...");
}

TEST_CASE("classical ascii labels shallow diagonals") {
    const auto out = lines(render_ascii({RenderMode::classical, 0, 4, RenderFormat::ascii, false}));
    CHECK(glyphs(out[0]) == "0");
    CHECK(glyphs(out[1]) == "12");
    CHECK(glyphs(out[3]) == "3456");
}

TEST_CASE("ascii with cell numbers") {
    const auto out = lines(render_ascii({RenderMode::novel, 2, 4, RenderFormat::ascii, true}));
    CHECK(out[2] == "   .1    #2    .1");
    CHECK(out[3] == ".1    .3    .3    .1");
}

TEST_CASE("classical svg has one group per row and one rect per entry") {
    const std::string svg = render_svg({RenderMode::classical, 0, 6, RenderFormat::svg, false});
    CHECK(count(svg, "<g class=\"row\"") == 6);
    CHECK(count(svg, "<rect class=\"cell") == 21);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>\n") == svg.size() - 7);
}

TEST_CASE("novel svg classes") {
    const std::string svg = render_svg({RenderMode::novel, 4, 6, RenderFormat::svg, true});
    CHECK(count(svg, "w_pos1\"") == 1);
    CHECK(count(svg, "w_neghalf\"") == 2);
    CHECK(count(svg, "<rect class=\"cell") == 21);
    CHECK(count(svg, "<text") == 21);
    const std::regex apex(R"(<rect class="cell w_zero" x="72" y="12" width="24" height="24"/>)");
    CHECK(std::regex_search(svg, apex));
}

TEST_CASE("render spec validation") {
    CHECK_THROWS_AS(render({RenderMode::novel, 4, 5, RenderFormat::ascii, false}), DomainError);
    CHECK_THROWS_AS(render({RenderMode::classical, 0, 0, RenderFormat::svg, false}), DomainError);
    CHECK(parse_render_mode("novel") == RenderMode::novel);
    CHECK_FALSE(parse_render_format("png").has_value());
}

TEST_CASE("rendering is deterministic") {
    const RenderSpec spec{RenderMode::novel, 14, 20, RenderFormat::svg, true};
    CHECK(render(spec) == render(spec));
}
