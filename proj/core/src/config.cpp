#include "latomo/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace latomo {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

WeightSpec parse_weight(const std::string& kind, double c) {
    if (kind == "constant")
        return WeightSpec::constant(c);
    if (kind == "exponential")
        return WeightSpec::exponential(c);
    throw std::invalid_argument("unknown weight kind: " + kind);
}

std::string weight_kind(const WeightSpec& w) {
    return w.kind == WeightSpec::Kind::Constant ? "constant" : "exponential";
}

std::string cutoff_kind(const CutoffSpec& c) {
    switch (c.kind) {
    case CutoffSpec::Kind::None:
        return "none";
    case CutoffSpec::Kind::Hard:
        return "hard";
    case CutoffSpec::Kind::Smooth:
        return "smooth";
    }
    return "?";
}

} // namespace

ExperimentConfig ExperimentConfig::defaults() {
    ExperimentConfig cfg;
    cfg.phantom = default_phantom();
    return cfg;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    cfg.phantom.components.clear();

    std::string section;
    std::string cutoff_kind_s = "none";
    double cut_a = 0.0, cut_b = 2.0 * std::numbers::pi, cut_a1 = 0.0, cut_b1 = 0.0;
    int cut_order = 5;
    std::string mu_kind = "constant", nu_kind = "constant";
    double mu_c = 1.0, nu_c = 1.0;
    std::string filter_kind = "fbp";
    double apodize = 0.0;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (t.front() == '[' && t.back() == ']') {
            section = t.substr(1, t.size() - 2);
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        auto bad_key = [&]() {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "' in section [" + section + "]");
        };

        if (section == "grid") {
            if (key == "n_phi")
                cfg.grid.n_phi = std::stoi(val);
            else if (key == "n_s")
                cfg.grid.n_s = std::stoi(val);
            else if (key == "s_max")
                cfg.grid.s_max = std::stod(val);
            else
                bad_key();
        } else if (section == "image") {
            if (key == "n")
                cfg.image_n = std::stoi(val);
            else
                bad_key();
        } else if (section == "weights") {
            if (key == "mu_kind")
                mu_kind = val;
            else if (key == "mu_c")
                mu_c = std::stod(val);
            else if (key == "nu_kind")
                nu_kind = val;
            else if (key == "nu_c")
                nu_c = std::stod(val);
            else
                bad_key();
        } else if (section == "filter") {
            if (key == "kind")
                filter_kind = val;
            else if (key == "apodize")
                apodize = std::stod(val);
            else
                bad_key();
        } else if (section == "cutoff") {
            if (key == "kind")
                cutoff_kind_s = val;
            else if (key == "a")
                cut_a = std::stod(val);
            else if (key == "b")
                cut_b = std::stod(val);
            else if (key == "a1")
                cut_a1 = std::stod(val);
            else if (key == "b1")
                cut_b1 = std::stod(val);
            else if (key == "order")
                cut_order = std::stoi(val);
            else
                bad_key();
        } else if (section == "predict") {
            if (key == "oracle_samples")
                cfg.oracle_samples = std::stoi(val);
            else if (key == "seed")
                cfg.seed = std::stoull(val);
            else
                bad_key();
        } else if (section == "phantom") {
            if (key == "ellipse") {
                std::istringstream es(val);
                Ellipse e;
                if (!(es >> e.center.x >> e.center.y >> e.semi_a >> e.semi_b >> e.tilt >>
                      e.density))
                    throw std::invalid_argument(
                        "config line " + std::to_string(lineno) +
                        ": ellipse needs 'center_x center_y a b tilt density'");
                cfg.phantom.components.push_back(e);
            } else
                bad_key();
        } else if (section == "verify") {
            auto& th = cfg.thresholds;
            if (key == "line_ratio_min")
                th.line_ratio_min = std::stod(val);
            else if (key == "full_data_ratio_lo")
                th.full_data_ratio_lo = std::stod(val);
            else if (key == "full_data_ratio_hi")
                th.full_data_ratio_hi = std::stod(val);
            else if (key == "smooth_reduction_min")
                th.smooth_reduction_min = std::stod(val);
            else if (key == "visible_contrast_min")
                th.visible_contrast_min = std::stod(val);
            else if (key == "visible_drop_max")
                th.visible_drop_max = std::stod(val);
            else
                bad_key();
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown section [" + section + "]");
        }
    }

    if (cfg.phantom.empty())
        cfg.phantom = default_phantom();

    cfg.mu = parse_weight(mu_kind, mu_c);
    cfg.nu = parse_weight(nu_kind, nu_c);
    cfg.filter.kind = filter_kind_from_string(filter_kind);
    cfg.filter.apodize = apodize;

    if (cutoff_kind_s == "none")
        cfg.cutoff = CutoffSpec::none();
    else if (cutoff_kind_s == "hard")
        cfg.cutoff = CutoffSpec::hard(cut_a, cut_b);
    else if (cutoff_kind_s == "smooth")
        cfg.cutoff = CutoffSpec::smooth_inner(cut_a, cut_b, cut_a1, cut_b1, cut_order);
    else
        throw std::invalid_argument("unknown cutoff kind: " + cutoff_kind_s);

    if (cfg.grid.n_s % 2 == 0)
        throw std::invalid_argument("grid.n_s must be odd");
    if (cfg.grid.s_max < std::numbers::sqrt2)
        throw std::invalid_argument("grid.s_max must be >= sqrt(2)");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "[grid]\n";
    out << "n_phi = " << cfg.grid.n_phi << "\n";
    out << "n_s = " << cfg.grid.n_s << "\n";
    out << "s_max = " << cfg.grid.s_max << "\n\n";

    out << "[image]\n";
    out << "n = " << cfg.image_n << "\n\n";

    out << "[weights]\n";
    out << "mu_kind = " << weight_kind(cfg.mu) << "\n";
    out << "mu_c = " << cfg.mu.c << "\n";
    out << "nu_kind = " << weight_kind(cfg.nu) << "\n";
    out << "nu_c = " << cfg.nu.c << "\n\n";

    out << "[filter]\n";
    out << "kind = " << to_string(cfg.filter.kind) << "\n";
    out << "apodize = " << cfg.filter.apodize << "\n\n";

    out << "[cutoff]\n";
    out << "kind = " << cutoff_kind(cfg.cutoff) << "\n";
    if (cfg.cutoff.kind != CutoffSpec::Kind::None) {
        out << "a = " << cfg.cutoff.a << "\n";
        out << "b = " << cfg.cutoff.b << "\n";
        if (cfg.cutoff.kind == CutoffSpec::Kind::Smooth) {
            out << "a1 = " << cfg.cutoff.a1 << "\n";
            out << "b1 = " << cfg.cutoff.b1 << "\n";
            out << "order = " << cfg.cutoff.order << "\n";
        }
    }
    out << "\n[predict]\n";
    out << "oracle_samples = " << cfg.oracle_samples << "\n";
    out << "seed = " << cfg.seed << "\n\n";

    out << "[phantom]\n";
    for (const auto& e : cfg.phantom.components)
        out << "ellipse = " << e.center.x << " " << e.center.y << " " << e.semi_a << " "
            << e.semi_b << " " << e.tilt << " " << e.density << "\n";
    out << "\n[verify]\n";
    const auto& th = cfg.thresholds;
    out << "line_ratio_min = " << th.line_ratio_min << "\n";
    out << "full_data_ratio_lo = " << th.full_data_ratio_lo << "\n";
    out << "full_data_ratio_hi = " << th.full_data_ratio_hi << "\n";
    out << "smooth_reduction_min = " << th.smooth_reduction_min << "\n";
    out << "visible_contrast_min = " << th.visible_contrast_min << "\n";
    out << "visible_drop_max = " << th.visible_drop_max << "\n";
    return out.str();
}

} // namespace latomo
