#include "jc/io_util.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace jc {

namespace fs = std::filesystem;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const fs::path& path, const std::string& content) {
    const fs::path dir = path.parent_path();
    if (!dir.empty())
        fs::create_directories(dir);
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("atomic_write: cannot open " + tmp.string());
        out << content;
        if (!out)
            throw std::runtime_error("atomic_write: write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::string ramp_color(double x) {
    // white -> dark blue, linear in probability
    if (x < 0.0) x = 0.0;
    if (x > 1.0) x = 1.0;
    const int r = static_cast<int>(255.0 * (1.0 - x) + 8.0 * x);
    const int g = static_cast<int>(255.0 * (1.0 - x) + 48.0 * x);
    const int b = static_cast<int>(255.0 * (1.0 - x) + 107.0 * x);
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

std::string svg_heatmap(const MatrixXd& values, const VectorXd& omega_t,
                        const std::string& title) {
    const int n_samples = static_cast<int>(values.rows());
    const int n_sites = static_cast<int>(values.cols());
    if (n_samples != omega_t.size())
        throw std::invalid_argument("svg_heatmap: time axis length mismatch");

    const double vmin = values.minCoeff();
    const double vmax = values.maxCoeff();
    const double vspan = (vmax > vmin) ? (vmax - vmin) : 1.0;

    const int plot_w = 640, plot_h = 420;
    const int margin_l = 60, margin_b = 50, margin_t = 40, margin_r = 20;
    const double cell_w = static_cast<double>(plot_w) / n_samples;
    const double cell_h = static_cast<double>(plot_h) / n_sites;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << (margin_l + plot_w + margin_r) << "\" height=\""
        << (margin_t + plot_h + margin_b) << "\">\n";
    svg << "<text x=\"" << margin_l << "\" y=\"24\" font-size=\"15\">" << title
        << "</text>\n";
    for (int s = 0; s < n_samples; ++s) {
        for (int n = 0; n < n_sites; ++n) {
            const double x = margin_l + s * cell_w;
            // site 0 at the bottom
            const double y = margin_t + plot_h - (n + 1) * cell_h;
            const double v = (values(s, n) - vmin) / vspan;
            svg << "<rect x=\"" << format_double(x) << "\" y=\"" << format_double(y)
                << "\" width=\"" << format_double(cell_w + 0.5) << "\" height=\""
                << format_double(cell_h + 0.5) << "\" fill=\"" << ramp_color(v)
                << "\"/>\n";
        }
    }
    svg << "<text x=\"" << margin_l << "\" y=\"" << (margin_t + plot_h + 34)
        << "\" font-size=\"12\">omega*t: " << format_double(omega_t[0]) << " .. "
        << format_double(omega_t[n_samples - 1]) << "</text>\n";
    svg << "<text x=\"6\" y=\"" << (margin_t + plot_h / 2)
        << "\" font-size=\"12\" transform=\"rotate(-90 14 " << (margin_t + plot_h / 2)
        << ")\">site n (0.." << (n_sites - 1) << ")</text>\n";
    svg << "<text x=\"" << (margin_l + 200) << "\" y=\"" << (margin_t + plot_h + 34)
        << "\" font-size=\"12\">scale linear, min " << format_double(vmin) << ", max "
        << format_double(vmax) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace jc
