#include "fibpascal/render.hpp"

#include <sstream>
#include <vector>

#include "fibpascal/errors.hpp"
#include "fibpascal/weight_pattern.hpp"

namespace fibpascal {

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 12;
// ASCII field width when binomial values are printed: glyph + up to 5 digits.
constexpr std::size_t kNumberField = 6;
constexpr std::size_t kMaxAsciiDigits = kNumberField - 1;
constexpr std::size_t kMaxSvgDigits = 4;

// Twice the weight, or 0 outside the pattern rows.
int twice_weight(const RenderSpec& spec, std::uint64_t r, std::uint64_t c) {
    if (spec.mode != RenderMode::novel || (r != spec.k && r != spec.k + 1)) return 0;
    return static_cast<int>(classify_weight(spec.k, r, c).twice_value().to_int64());
}

char glyph(const RenderSpec& spec, std::uint64_t r, std::uint64_t c) {
    if (spec.mode == RenderMode::classical) return static_cast<char>('0' + (r + c) % 10);
    switch (twice_weight(spec, r, c)) {
        case 2: return '#';
        case 1: return '+';
        case -1: return '-';
        case -2: return '=';
        default: return '.';
    }
}

std::string fill_class(const RenderSpec& spec, std::uint64_t r, std::uint64_t c) {
    if (spec.mode == RenderMode::classical) return "diag" + std::to_string((r + c) % 10);
    switch (twice_weight(spec, r, c)) {
        case 2: return "w_pos1";
        case 1: return "w_poshalf";
        case -1: return "w_neghalf";
        case -2: return "w_neg1";
        default: return "w_zero";
    }
}

void rstrip(std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
}

}  // namespace

std::optional<RenderMode> parse_render_mode(std::string_view s) {
    if (s == "classical") return RenderMode::classical;
    if (s == "novel") return RenderMode::novel;
    return std::nullopt;
}

std::optional<RenderFormat> parse_render_format(std::string_view s) {
    if (s == "ascii") return RenderFormat::ascii;
    if (s == "svg") return RenderFormat::svg;
    return std::nullopt;
}

void RenderSpec::validate() const {
    if (rows < 1) throw DomainError("render: rows must be >= 1");
    if (mode == RenderMode::novel && rows < k + 2) {
        throw DomainError("render: novel mode needs rows >= k + 2 (k=" + std::to_string(k) + ", rows=" +
                          std::to_string(rows) + ")");
    }
}

std::string render_ascii(const RenderSpec& spec, const PascalTable& table) {
    spec.validate();
    std::ostringstream os;
    const std::size_t width = spec.cell_numbers ? kNumberField : 2;
    for (std::uint64_t r = 0; r < spec.rows; ++r) {
        std::string line(static_cast<std::size_t>(spec.rows - 1 - r) * width / 2, ' ');
        std::shared_ptr<const PascalRow> values;
        if (spec.cell_numbers) values = table.row(r);
        for (std::uint64_t c = 0; c <= r; ++c) {
            std::string field(1, glyph(spec, r, c));
            if (spec.cell_numbers) {
                const std::string digits = values->entries[c].to_string();
                if (digits.size() <= kMaxAsciiDigits) field += digits;
            }
            field.resize(width, ' ');
            line += field;
        }
        rstrip(line);
        os << line << '\n';
    }
    return os.str();
}

std::string render_svg(const RenderSpec& spec, const PascalTable& table) {
    spec.validate();
    const auto rows = static_cast<long long>(spec.rows);
    const long long size = rows * kCell + 2 * kMargin;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
       << "<style>\n"
       << ".cell{stroke:#444444;stroke-width:1}\n"
       << ".w_pos1{fill:#1f5fbf}\n.w_poshalf{fill:#8fb3e8}\n.w_neghalf{fill:#f0a58f}\n"
       << ".w_neg1{fill:#c0392b}\n.w_zero{fill:#ffffff}\n";
    static constexpr const char* kDiagFills[10] = {"#fde0dd", "#e5f5e0", "#deebf7", "#fff7bc", "#efedf5",
                                                   "#fee6ce", "#e0f3f8", "#f7fcb9", "#fbe6f0", "#edf8e9"};
    for (int d = 0; d < 10; ++d) os << ".diag" << d << "{fill:" << kDiagFills[d] << "}\n";
    os << ".num{font-family:monospace;font-size:8px;text-anchor:middle;dominant-baseline:central}\n"
       << "</style>\n";

    for (long long r = 0; r < rows; ++r) {
        std::shared_ptr<const PascalRow> values;
        if (spec.cell_numbers) values = table.row(static_cast<std::uint64_t>(r));
        os << "<g class=\"row\" id=\"row-" << r << "\">\n";
        const long long y = kMargin + r * kCell;
        for (long long c = 0; c <= r; ++c) {
            const long long x = kMargin + (rows - 1 - r) * (kCell / 2) + c * kCell;
            const auto ur = static_cast<std::uint64_t>(r);
            const auto uc = static_cast<std::uint64_t>(c);
            os << "<rect class=\"cell " << fill_class(spec, ur, uc) << "\" x=\"" << x << "\" y=\"" << y
               << "\" width=\"" << kCell << "\" height=\"" << kCell << "\"/>\n";
            if (spec.cell_numbers) {
                const std::string digits = values->entries[uc].to_string();
                if (digits.size() <= kMaxSvgDigits) {
                    os << "<text class=\"num\" x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 << "\">" << digits
                       << "</text>\n";
                }
            }
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render(const RenderSpec& spec, const PascalTable& table) {
    return spec.format == RenderFormat::ascii ? render_ascii(spec, table) : render_svg(spec, table);
}

}  // namespace fibpascal
