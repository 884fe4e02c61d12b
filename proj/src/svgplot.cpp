#include "siegel/svgplot.hpp"

#include <sstream>
#include <stdexcept>

namespace siegel {

namespace {

const char* const kFill[3] = {"#1b6ca8", "#d1495b", "#3a7d44"};

} // namespace

std::string render_scatter_svg(const VanishingLedger& ledger) {
    if (ledger.ctx.g != 2)
        throw std::invalid_argument(
            "scatter plots are drawn for g = 2 only; use the row export for higher genus");

    const i64 kmin = ledger.box.kmin, kmax = ledger.box.kmax;
    const i64 n = kmax - kmin + 1;
    i64 cell = 560 / n;
    if (cell < 4) cell = 4;
    if (cell > 24) cell = 24;
    const i64 ox = 56, oy = 24;                 // top-left corner of the grid
    const i64 w = ox + n * cell + 170;          // room for the legend column
    const i64 h = oy + n * cell + 44;

    // data -> pixel centers: x carries k2, y carries k1 (k1 grows upward)
    auto px = [&](i64 k2) { return ox + (k2 - kmin) * cell + cell / 2; };
    auto py = [&](i64 k1) { return oy + (kmax - k1) * cell + cell / 2; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
        << "\" fill=\"white\"/>\n";

    // frame
    out << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << n * cell << "\" height=\""
        << n * cell << "\" fill=\"none\" stroke=\"#444444\"/>\n";

    // diagonal guide k1 = k2 (bottom-left to top-right of the grid)
    out << "<line x1=\"" << px(kmin) << "\" y1=\"" << py(kmin) << "\" x2=\"" << px(kmax)
        << "\" y2=\"" << py(kmax) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
    out << "<text x=\"" << px(kmax) + 4 << "\" y=\"" << py(kmax) - 4
        << "\" font-size=\"11\" fill=\"#888888\">k1 = k2</text>\n";

    // axis labels and corner ticks
    out << "<text x=\"" << ox + n * cell / 2 << "\" y=\"" << h - 8
        << "\" font-size=\"12\" text-anchor=\"middle\">k2</text>\n";
    out << "<text x=\"14\" y=\"" << oy + n * cell / 2
        << "\" font-size=\"12\" text-anchor=\"middle\">k1</text>\n";
    out << "<text x=\"" << px(kmin) << "\" y=\"" << oy + n * cell + 16
        << "\" font-size=\"10\" text-anchor=\"middle\">" << kmin << "</text>\n";
    out << "<text x=\"" << px(kmax) << "\" y=\"" << oy + n * cell + 16
        << "\" font-size=\"10\" text-anchor=\"middle\">" << kmax << "</text>\n";
    out << "<text x=\"" << ox - 6 << "\" y=\"" << py(kmax) + 4
        << "\" font-size=\"10\" text-anchor=\"end\">" << kmax << "</text>\n";
    out << "<text x=\"" << ox - 6 << "\" y=\"" << py(kmin) + 4
        << "\" font-size=\"10\" text-anchor=\"end\">" << kmin << "</text>\n";

    // one marker class per degree: circle / square / diamond
    i64 r = cell / 3;
    if (r < 2) r = 2;
    for (int e = 0; e < ledger.ctx.d; ++e) {
        const char* fill = kFill[e % 3];
        for (const Character& lam : ledger.display_set(e)) {
            i64 x = px(lam[1]), y = py(lam[0]);
            switch (e % 3) {
                case 0:
                    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
                        << "\" fill=\"" << fill << "\"/>\n";
                    break;
                case 1:
                    out << "<rect x=\"" << x - r << "\" y=\"" << y - r << "\" width=\"" << 2 * r
                        << "\" height=\"" << 2 * r << "\" fill=\"" << fill << "\"/>\n";
                    break;
                default:
                    out << "<polygon points=\"" << x << "," << y - r << " " << x + r << "," << y
                        << " " << x << "," << y + r << " " << x - r << "," << y
                        << "\" fill=\"" << fill << "\"/>\n";
                    break;
            }
        }
    }

    // legend with per-degree counts, plus the run header
    i64 lx = ox + n * cell + 16, ly = oy + 8;
    out << "<text x=\"" << lx << "\" y=\"" << ly << "\" font-size=\"11\">g=" << ledger.ctx.g
        << " p=" << ledger.ctx.p << " "
        << (ledger.mode == AmpMode::HasseCone ? "hasse" : "orbital") << "</text>\n";
    for (int e = 0; e < ledger.ctx.d; ++e) {
        i64 y = ly + 18 * (e + 1);
        const char* fill = kFill[e % 3];
        switch (e % 3) {
            case 0:
                out << "<circle cx=\"" << lx + 5 << "\" cy=\"" << y - 4 << "\" r=\"4\" fill=\""
                    << fill << "\"/>\n";
                break;
            case 1:
                out << "<rect x=\"" << lx + 1 << "\" y=\"" << y - 8
                    << "\" width=\"8\" height=\"8\" fill=\"" << fill << "\"/>\n";
                break;
            default:
                out << "<polygon points=\"" << lx + 5 << "," << y - 9 << " " << lx + 10 << ","
                    << y - 4 << " " << lx + 5 << "," << y + 1 << " " << lx << "," << y - 4
                    << "\" fill=\"" << fill << "\"/>\n";
                break;
        }
        out << "<text x=\"" << lx + 16 << "\" y=\"" << y << "\" font-size=\"11\">degree " << e
            << " (" << ledger.display_set(e).size() << ")</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace siegel
