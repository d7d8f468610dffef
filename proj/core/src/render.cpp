#include "majring/render.hpp"

#include <sstream>

#include "majring/errors.hpp"

namespace majring {

namespace {

std::string render_text(const Trajectory& traj, const std::vector<StabilityMap>& maps,
                        bool overlay) {
    std::string out;
    for (std::size_t t = 0; t < traj.states.size(); ++t) {
        const Configuration& cfg = traj.states[t];
        for (int i = 0; i < cfg.size(); ++i) out += cfg.get(i) ? '#' : '.';
        if (overlay) {
            out += "  ";
            for (int i = 0; i < cfg.size(); ++i)
                out += stability_letter(maps[t].labels[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const Trajectory& traj, const std::vector<StabilityMap>& maps,
                       const RenderSpec& spec) {
    const int n = traj.states.front().size();
    const int cs = spec.cell_size;
    const int width = n * cs;
    const int height = static_cast<int>(traj.states.size()) * cs;

    std::ostringstream out;
    out << "<svg width=\"" << width << "\" height=\"" << height
        << "\" version=\"1.1\" xmlns=\"http://www.w3.org/2000/svg\">\n";
    for (std::size_t t = 0; t < traj.states.size(); ++t) {
        const Configuration& cfg = traj.states[t];
        for (int i = 0; i < n; ++i) {
            const bool v = cfg.get(i);
            out << " <rect x=\"" << i * cs << "\" y=\"" << t * cs << "\" width=\"" << cs
                << "\" height=\"" << cs << "\" fill=\"" << (v ? "#333333" : "#bbbbbb")
                << "\"/>\n";
            if (spec.overlay) {
                out << " <text x=\"" << i * cs + cs / 2 << "\" y=\"" << t * cs + cs / 2
                    << "\" font-family=\"monospace\" font-size=\"" << (2 * cs) / 3
                    << "px\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\""
                    << (v ? "#ffffff" : "#000000") << "\">"
                    << stability_letter(maps[t].labels[i]) << "</text>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_pgm(const Trajectory& traj, int cs) {
    const int n = traj.states.front().size();
    const int width = n * cs;
    const int height = static_cast<int>(traj.states.size()) * cs;

    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(width) * height);
    for (const Configuration& cfg : traj.states)
        for (int row = 0; row < cs; ++row)
            for (int i = 0; i < n; ++i)
                out.append(cs, cfg.get(i) ? char(40) : char(200));
    return out;
}

} // namespace

std::string render_spacetime(const Trajectory& traj, const std::vector<StabilityMap>& maps,
                             const RenderSpec& spec) {
    if (spec.cell_size < 1) throw PreconditionViolated("cell_size must be >= 1");
    if (spec.overlay) {
        if (spec.format == RenderFormat::Pgm) throw OverlayUnavailable();
        if (maps.size() != traj.states.size())
            throw PreconditionViolated("overlay requires one stability map per state");
    }
    switch (spec.format) {
        case RenderFormat::Text: return render_text(traj, maps, spec.overlay);
        case RenderFormat::Svg: return render_svg(traj, maps, spec);
        default: return render_pgm(traj, spec.cell_size);
    }
}

} // namespace majring
