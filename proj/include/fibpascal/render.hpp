#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fibpascal/pascal.hpp"

namespace fibpascal {

enum class RenderMode { classical, novel };
enum class RenderFormat { ascii, svg };

std::optional<RenderMode> parse_render_mode(std::string_view s);
std::optional<RenderFormat> parse_render_format(std::string_view s);

struct RenderSpec {
    RenderMode mode = RenderMode::novel;
    std::uint64_t k = 0;     // pattern index (novel mode)
    std::uint64_t rows = 1;  // triangle rows drawn
    RenderFormat format = RenderFormat::ascii;
    bool cell_numbers = false;

    // Throws DomainError unless rows >= 1 and, in novel mode, rows >= k + 2.
    void validate() const;
};

// Novel-mode glyphs: '#' +1, '+' +1/2, '-' -1/2, '=' -1, '.' 0.
// Classical mode labels cell (r, c) with the last digit of its shallow
// diagonal r + c (the diagonal whose sum is F_{r+c+1}).
std::string render_ascii(const RenderSpec& spec, const PascalTable& table = default_pascal_table());

// SVG 1.1: one <g class="row"> per row, one <rect class="cell ..."> per
// entry; 24-unit cells, 24-unit row pitch, rows centered.
std::string render_svg(const RenderSpec& spec, const PascalTable& table = default_pascal_table());

std::string render(const RenderSpec& spec, const PascalTable& table = default_pascal_table());

}  // namespace fibpascal
