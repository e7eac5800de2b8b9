#include "starkres_cli/writers.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace stark::cli {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

const char* status_name(TrajectoryStatus s) {
    switch (s) {
        case TrajectoryStatus::stabilized: return "stabilized";
        case TrajectoryStatus::divergent: return "divergent";
        case TrajectoryStatus::lost: return "lost";
    }
    return "unknown";
}

json versions_block() {
    return json{{"starkres", kToolVersion}, {"format", kFormatVersion}};
}

// Fixed palette; trajectory id indexes into it cyclically.
const char* palette(int id) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    return colors[id % 8];
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_spectrum_csv(const std::string& path, const RunConfig& cfg,
                        const SpectrumResult& spectrum) {
    std::ofstream out = open_out(path);
    out << "# config_hash=" << cfg.hash << "\n";
    out << "re,im,residual\n";
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
        out << format_double(spectrum.eigenvalues[i].real()) << ','
            << format_double(spectrum.eigenvalues[i].imag()) << ','
            << (i < spectrum.residuals.size() ? format_double(spectrum.residuals[i]) : "")
            << "\n";
    }
}

void write_spectrum_json(const std::string& path, const RunConfig& cfg,
                         const SpectrumResult& spectrum) {
    json results = json::array();
    for (const Complex& z : spectrum.eigenvalues)
        results.push_back(json{{"re", z.real()}, {"im", z.imag()}});
    json doc{{"config", cfg.raw},
             {"config_hash", cfg.hash},
             {"results", {{"eigenvalues", results},
                          {"method", spectrum.method == EigMethod::dense_qr
                                         ? "dense_qr"
                                         : "shift_invert_arnoldi"},
                          {"converged", spectrum.converged}}},
             {"residuals", spectrum.residuals},
             {"versions", versions_block()}};
    open_out(path) << doc.dump(2) << "\n";
}

void write_trajectories_csv(const std::string& path, const RunConfig& cfg,
                            const std::vector<Trajectory>& trajectories) {
    std::ofstream out = open_out(path);
    out << "# config_hash=" << cfg.hash << "\n";
    out << "trajectory_id,eps,re,im,speed,status\n";
    for (const Trajectory& t : trajectories) {
        for (std::size_t i = 0; i < t.points.size(); ++i) {
            out << t.id << ',' << format_double(t.points[i].first) << ','
                << format_double(t.points[i].second.real()) << ','
                << format_double(t.points[i].second.imag()) << ',';
            // speed[j] belongs to the interior point j+1
            if (i >= 1 && i - 1 < t.speed.size()) out << format_double(t.speed[i - 1]);
            out << ',' << status_name(t.status) << "\n";
        }
    }
}

void write_estimates_json(const std::string& path, const RunConfig& cfg,
                          const std::vector<Trajectory>& trajectories,
                          const std::vector<ResonanceEstimate>& estimates) {
    json est = json::array();
    for (const ResonanceEstimate& e : estimates)
        est.push_back(json{{"re", e.z.real()},
                           {"im", e.z.imag()},
                           {"eps_star", e.eps_star},
                           {"uncertainty", e.uncertainty},
                           {"trajectory_id", e.trajectory_id}});
    json trajs = json::array();
    for (const Trajectory& t : trajectories)
        trajs.push_back(json{{"id", t.id},
                             {"start_step", t.start_step},
                             {"points", t.points.size()},
                             {"status", status_name(t.status)}});
    json doc{{"config", cfg.raw},
             {"config_hash", cfg.hash},
             {"results", {{"estimates", est}, {"trajectories", trajs}}},
             {"residuals", json::array()},
             {"versions", versions_block()}};
    open_out(path) << doc.dump(2) << "\n";
}

void write_sweep_svg(const std::string& path, const RunConfig& cfg, const Window& window,
                     const std::vector<Trajectory>& trajectories,
                     const std::vector<ResonanceEstimate>& estimates) {
    const double width = 640.0, height = 480.0, margin = 50.0;
    // Pad the view box slightly beyond the window so exits are visible.
    const double pad_re = 0.08 * (window.re_max - window.re_min);
    const double pad_im = 0.08 * (window.im_max - window.im_min);
    const double re0 = window.re_min - pad_re, re1 = window.re_max + pad_re;
    const double im0 = window.im_min - pad_im, im1 = window.im_max + pad_im;
    auto px = [&](double re) {
        return margin + (re - re0) / (re1 - re0) * (width - 2 * margin);
    };
    auto py = [&](double im) {
        return height - margin - (im - im0) / (im1 - im0) * (height - 2 * margin);
    };

    std::ofstream out = open_out(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\">\n"
        << "<!-- config_hash=" << cfg.hash << " -->\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Window rectangle.
    out << "<rect x=\"" << px(window.re_min) << "\" y=\"" << py(window.im_max)
        << "\" width=\"" << px(window.re_max) - px(window.re_min) << "\" height=\""
        << py(window.im_min) - py(window.im_max)
        << "\" fill=\"none\" stroke=\"#444444\" stroke-dasharray=\"4 3\"/>\n";
    // Axes through the origin when visible.
    if (re0 < 0.0 && re1 > 0.0)
        out << "<line x1=\"" << px(0.0) << "\" y1=\"" << py(im0) << "\" x2=\"" << px(0.0)
            << "\" y2=\"" << py(im1) << "\" stroke=\"#bbbbbb\"/>\n";
    if (im0 < 0.0 && im1 > 0.0)
        out << "<line x1=\"" << px(re0) << "\" y1=\"" << py(0.0) << "\" x2=\"" << px(re1)
            << "\" y2=\"" << py(0.0) << "\" stroke=\"#bbbbbb\"/>\n";
    // Ray arg z = -pi/4 for orientation.
    {
        const double t_max = std::min(re1, -im0);
        if (t_max > 0.0)
            out << "<line x1=\"" << px(0.0) << "\" y1=\"" << py(0.0) << "\" x2=\""
                << px(t_max) << "\" y2=\"" << py(-t_max)
                << "\" stroke=\"#cccc66\" stroke-dasharray=\"2 4\"/>\n";
    }
    for (const Trajectory& t : trajectories) {
        out << "<g id=\"trajectory-" << t.id << "\" stroke=\"" << palette(t.id)
            << "\" fill=\"" << palette(t.id) << "\">\n";
        out << "<polyline fill=\"none\" points=\"";
        for (const auto& [eps, z] : t.points) {
            (void)eps;
            out << px(z.real()) << ',' << py(z.imag()) << ' ';
        }
        out << "\"/>\n";
        for (const auto& [eps, z] : t.points) {
            (void)eps;
            out << "<circle cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag())
                << "\" r=\"2\"/>\n";
        }
        out << "</g>\n";
    }
    for (const ResonanceEstimate& e : estimates) {
        out << "<g id=\"estimate-" << e.trajectory_id << "\" stroke=\"black\">\n"
            << "<circle cx=\"" << px(e.z.real()) << "\" cy=\"" << py(e.z.imag())
            << "\" r=\"6\" fill=\"none\" stroke-width=\"2\"/>\n</g>\n";
    }
    out << "</svg>\n";
}

}  // namespace stark::cli
