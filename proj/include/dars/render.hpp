#pragma once

#include <string>
#include <vector>

#include "dars/growth_region.hpp"

namespace dars {

// What to draw and how.  The window range selects tile rows
// ((first_window-1)*n, last_window*n]; last_window 0 means the region's
// final window.  The palette colours shadow lines by their colour index,
// cycling when lines outnumber palette entries.
struct RenderOptions {
    enum class Format { Ascii, Svg, Json };
    Format format = Format::Ascii;
    int first_window = 1;
    int last_window = 0;
    bool show_labels = true;
    bool show_colors = true;
    bool show_partitions = false;
    std::vector<std::string> palette;  // empty selects the default palette
};

// The default 12-colour palette (colour-blind friendly; the first four
// colours are blue #0072B2, vermillion #D55E00, green #009E73 and pink
// #CC79A7).
const std::vector<std::string>& default_palette();

// Draws the selected rows of the region in the chosen format.  All three
// formats encode the same data: edge labels, edge colours, tile classes and
// marks.  Tracing colours may deepen the region in place.
std::string render_region(GrowthRegion& region, const RenderOptions& options = RenderOptions{},
                          const GrowthLimits& limits = GrowthLimits{});

}  // namespace dars
