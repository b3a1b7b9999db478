#include "dars/render.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace dars {

const std::vector<std::string>& default_palette() {
    static const std::vector<std::string> palette = {
        "#0072B2", "#D55E00", "#009E73", "#CC79A7", "#E69F00", "#56B4E9",
        "#F0E442", "#000000", "#999999", "#882255", "#44AA99", "#AA4499"};
    return palette;
}

namespace {

struct RenderFrame {
    int first = 1;
    int last = 1;
    int r0 = 0;  // north row line of the slice
    int r1 = 0;  // south row line of the slice
    int columns = 0;
};

RenderFrame make_frame(const GrowthRegion& region, const RenderOptions& options) {
    RenderFrame f;
    f.first = options.first_window;
    f.last = options.last_window == 0 ? region.window_count() : options.last_window;
    if (f.first < 1 || f.last < f.first || f.last > region.window_count())
        throw std::invalid_argument("window range outside the region");
    f.r0 = (f.first - 1) * region.n();
    f.r1 = f.last * region.n();
    f.columns = region.east_column_line();
    return f;
}

std::string tile_char(TileClass tile) {
    switch (tile) {
        case TileClass::Marked:
            return "@";
        case TileClass::Bump:
            return "b";
        case TileClass::Cross:
            return "x";
        default:
            return ".";
    }
}

const char* tile_name(TileClass tile) {
    switch (tile) {
        case TileClass::Marked:
            return "marked";
        case TileClass::Bump:
            return "bump";
        case TileClass::Cross:
            return "cross";
        default:
            return "empty";
    }
}

std::string pad(const std::string& token, std::size_t width) {
    std::string out = token;
    while (out.size() < width) out.insert(out.begin(), ' ');
    return out;
}

std::string render_ascii(GrowthRegion& region, const RenderOptions& options,
                         const RenderFrame& f, const GrowthLimits& limits) {
    const int n = region.n();
    std::vector<std::vector<std::string>> h_tokens(f.r1 - f.r0 + 1,
                                                   std::vector<std::string>(f.columns));
    std::vector<std::vector<std::string>> v_tokens(f.r1 - f.r0,
                                                   std::vector<std::string>(f.columns + 1));
    std::vector<std::vector<std::string>> tiles(f.r1 - f.r0,
                                                std::vector<std::string>(f.columns));
    std::size_t width = 1;
    for (int r = f.r0; r <= f.r1; ++r)
        for (int c = 1; c <= f.columns; ++c) {
            const int label = region.horizontal_label(r, c);
            std::string token = label == 0 ? "." : std::to_string(label);
            width = std::max(width, token.size());
            h_tokens[r - f.r0][c - 1] = std::move(token);
        }
    for (int i = f.r0 + 1; i <= f.r1; ++i)
        for (int c = 0; c <= f.columns; ++c) {
            const int label = region.vertical_label(i, c);
            std::string token = ".";
            if (label != 0) {
                token = std::to_string(label);
                if (options.show_colors)
                    token += ":" + std::to_string(region.vertical_color(i, c));
            }
            width = std::max(width, token.size());
            v_tokens[i - f.r0 - 1][c] = std::move(token);
        }
    for (int i = f.r0 + 1; i <= f.r1; ++i)
        for (int c = 1; c <= f.columns; ++c)
            tiles[i - f.r0 - 1][c - 1] = tile_char(region.tile_class(i, c));

    std::ostringstream out;
    const std::string gap(width, ' ');
    for (int r = f.r0; r <= f.r1; ++r) {
        out << gap;
        for (int c = 1; c <= f.columns; ++c)
            out << ' ' << pad(options.show_labels ? h_tokens[r - f.r0][c - 1] : ".", width);
        if (options.show_partitions && r % n == 0)
            out << "   shape(" << (r / n) << ") = (" << region.vertex_partition(r, n).to_string()
                << ")";
        out << '\n';
        if (r == f.r1) break;
        const int i = r + 1;
        out << pad(options.show_labels ? v_tokens[i - f.r0 - 1][0] : ".", width);
        for (int c = 1; c <= f.columns; ++c)
            out << ' ' << pad(tiles[i - f.r0 - 1][c - 1], width) << ' '
                << pad(options.show_labels ? v_tokens[i - f.r0 - 1][c] : ".", width);
        out << '\n';
    }
    (void)limits;
    return out.str();
}

// Colour of the pipe pieces of one tile; 0 where no pipe or no colour.
struct TilePipes {
    int upper = 0;       // bump north-east elbow
    int lower = 0;       // bump or mark west-south elbow
    int north_south = 0;  // crossing, vertical pipe
    int east_west = 0;    // crossing, horizontal pipe
};

TilePipes pipe_colors(GrowthRegion& region, int i, int j, const GrowthLimits& limits) {
    TilePipes p;
    switch (region.tile_class(i, j)) {
        case TileClass::Marked:
            p.lower = region.vertical_color(i, j - 1);
            break;
        case TileClass::Bump:
            p.upper = region.vertical_color(i, j);
            p.lower = region.vertical_color(i, j - 1);
            break;
        case TileClass::Cross:
            if (region.vertical_label(i, j) != 0) p.east_west = region.vertical_color(i, j);
            if (region.horizontal_label(i - 1, j) != 0)
                p.north_south = horizontal_edge_color(region, i - 1, j, limits);
            break;
        default:
            break;
    }
    return p;
}

std::string render_svg(GrowthRegion& region, const RenderOptions& options, const RenderFrame& f,
                       const GrowthLimits& limits) {
    const int n = region.n();
    const std::vector<std::string>& palette =
        options.palette.empty() ? default_palette() : options.palette;
    const int cell = 36;
    const int margin = 30;
    const int width = 2 * margin + f.columns * cell;
    const int height = 2 * margin + (f.r1 - f.r0) * cell;
    const double half = cell / 2.0;

    const auto x_of = [&](double col_line) { return margin + col_line * cell; };
    const auto y_of = [&](double row_line) { return margin + (row_line - f.r0) * cell; };
    const auto stroke = [&](int color) -> std::string {
        if (!options.show_colors || color <= 0) return "#555555";
        return palette[static_cast<std::size_t>(color - 1) % palette.size()];
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    // Grid.
    out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int r = f.r0; r <= f.r1; ++r)
        out << "<line x1=\"" << x_of(0) << "\" y1=\"" << y_of(r) << "\" x2=\"" << x_of(f.columns)
            << "\" y2=\"" << y_of(r) << "\"/>\n";
    for (int c = 0; c <= f.columns; ++c)
        out << "<line x1=\"" << x_of(c) << "\" y1=\"" << y_of(f.r0) << "\" x2=\"" << x_of(c)
            << "\" y2=\"" << y_of(f.r1) << "\"/>\n";
    out << "</g>\n";
    // Pipes.
    out << "<g fill=\"none\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
    for (int i = f.r0 + 1; i <= f.r1; ++i)
        for (int j = 1; j <= f.columns; ++j) {
            const TilePipes pipes = pipe_colors(region, i, j, limits);
            const double xl = x_of(j - 1), xr = x_of(j), xc = xl + half;
            const double yt = y_of(i - 1), yb = y_of(i), yc = yt + half;
            const TileClass tile = region.tile_class(i, j);
            if (tile == TileClass::Marked || tile == TileClass::Bump) {
                // West-south elbow: a quarter arc around the south-west
                // corner.
                out << "<path d=\"M " << xl << ' ' << yc << " A " << half << ' ' << half
                    << " 0 0 1 " << xc << ' ' << yb << "\" stroke=\"" << stroke(pipes.lower)
                    << "\"/>\n";
            }
            if (tile == TileClass::Bump) {
                // North-east elbow: a quarter arc around the north-east
                // corner.
                out << "<path d=\"M " << xc << ' ' << yt << " A " << half << ' ' << half
                    << " 0 0 0 " << xr << ' ' << yc << "\" stroke=\"" << stroke(pipes.upper)
                    << "\"/>\n";
            }
            if (tile == TileClass::Cross) {
                if (region.horizontal_label(i - 1, j) != 0)
                    out << "<line x1=\"" << xc << "\" y1=\"" << yt << "\" x2=\"" << xc
                        << "\" y2=\"" << yb << "\" stroke=\"" << stroke(pipes.north_south)
                        << "\"/>\n";
                if (region.vertical_label(i, j) != 0)
                    out << "<line x1=\"" << xl << "\" y1=\"" << yc << "\" x2=\"" << xr
                        << "\" y2=\"" << yc << "\" stroke=\"" << stroke(pipes.east_west)
                        << "\"/>\n";
            }
            if (tile == TileClass::Marked)
                out << "<circle cx=\"" << xc << "\" cy=\"" << yc << "\" r=\"" << cell / 6.0
                    << "\" fill=\"" << stroke(pipes.lower) << "\" stroke=\"none\"/>\n";
        }
    out << "</g>\n";
    // Labels.
    if (options.show_labels) {
        out << "<g font-family=\"monospace\" font-size=\"9\" fill=\"#333333\">\n";
        for (int r = f.r0; r <= f.r1; ++r)
            for (int c = 1; c <= f.columns; ++c) {
                const int label = region.horizontal_label(r, c);
                if (label == 0) continue;
                out << "<text x=\"" << x_of(c - 0.5) - 3 << "\" y=\"" << y_of(r) - 3 << "\">"
                    << label << "</text>\n";
            }
        for (int i = f.r0 + 1; i <= f.r1; ++i)
            for (int c = 0; c <= f.columns; ++c) {
                const int label = region.vertical_label(i, c);
                if (label == 0) continue;
                out << "<text x=\"" << x_of(c) + 3 << "\" y=\"" << y_of(i - 0.5) + 3 << "\">"
                    << label;
                if (options.show_colors) out << ":" << region.vertical_color(i, c);
                out << "</text>\n";
            }
        out << "</g>\n";
    }
    if (options.show_partitions) {
        out << "<g font-family=\"monospace\" font-size=\"10\" fill=\"#0050a0\">\n";
        for (int m = f.first - 1; m <= f.last; ++m) {
            const int r = m * n;
            if (r < f.r0 || r > f.r1) continue;
            out << "<text x=\"" << x_of(n) + 6 << "\" y=\"" << y_of(r) + 4 << "\">("
                << region.vertex_partition(r, n).to_string() << ")</text>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_json(GrowthRegion& region, const RenderOptions& options, const RenderFrame& f,
                        const GrowthLimits& limits) {
    nlohmann::ordered_json j;
    j["n"] = region.n();
    j["window_range"] = {f.first, f.last};
    j["row_lines"] = {f.r0, f.r1};
    j["columns"] = f.columns;
    auto horizontal = nlohmann::ordered_json::array();
    for (int r = f.r0; r <= f.r1; ++r)
        for (int c = 1; c <= f.columns; ++c) {
            const int label = region.horizontal_label(r, c);
            if (label == 0) continue;
            horizontal.push_back({{"r", r}, {"c", c}, {"label", label}});
        }
    j["horizontal"] = std::move(horizontal);
    auto vertical = nlohmann::ordered_json::array();
    for (int i = f.r0 + 1; i <= f.r1; ++i)
        for (int c = 0; c <= f.columns; ++c) {
            const int label = region.vertical_label(i, c);
            if (label == 0) continue;
            nlohmann::ordered_json edge = {{"r", i}, {"c", c}, {"label", label}};
            if (options.show_colors) edge["color"] = region.vertical_color(i, c);
            vertical.push_back(std::move(edge));
        }
    j["vertical"] = std::move(vertical);
    auto tiles = nlohmann::ordered_json::array();
    auto marks = nlohmann::ordered_json::array();
    for (int i = f.r0 + 1; i <= f.r1; ++i)
        for (int c = 1; c <= f.columns; ++c) {
            const TileClass tile = region.tile_class(i, c);
            if (tile == TileClass::Empty) continue;
            tiles.push_back({{"r", i}, {"c", c}, {"class", tile_name(tile)}});
            if (tile == TileClass::Marked) marks.push_back({{"row", i}, {"column", c}});
        }
    j["tiles"] = std::move(tiles);
    j["marks"] = std::move(marks);
    if (options.show_partitions) {
        auto partitions = nlohmann::ordered_json::array();
        const int n = region.n();
        for (int m = f.first - 1; m <= f.last; ++m) {
            const int r = m * n;
            if (r < f.r0 || r > f.r1) continue;
            partitions.push_back({{"window", m}, {"shape", region.vertex_partition(r, n).parts()}});
        }
        j["partitions"] = std::move(partitions);
    }
    (void)limits;
    return j.dump();
}

}  // namespace

std::string render_region(GrowthRegion& region, const RenderOptions& options,
                          const GrowthLimits& limits) {
    const RenderFrame frame = make_frame(region, options);
    switch (options.format) {
        case RenderOptions::Format::Svg:
            return render_svg(region, options, frame, limits);
        case RenderOptions::Format::Json:
            return render_json(region, options, frame, limits);
        default:
            return render_ascii(region, options, frame, limits);
    }
}

}  // namespace dars
