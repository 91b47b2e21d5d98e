#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypcap/bounds.hpp"
#include "hypcap/capacity.hpp"
#include "hypcap/conformal.hpp"
#include "hypcap/io.hpp"
#include "hypcap/shapes.hpp"
#include "hypcap/tables.hpp"
#include "hypcap/version.hpp"

using hypcap::Point;
using json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

std::string fmt(Point p) { return fmt(p.real()) + "," + fmt(p.imag()); }

std::string csv_escape(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Tabular output with reproducibility metadata: CSV renders the metadata as
// leading '#' comment lines, JSON as a "meta" object.  Output depends only on
// the run configuration, so repeated runs are byte-identical.
class Table {
  public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void meta(const std::string& k, const std::string& v) { meta_.emplace_back(k, v); }
    void meta(const std::string& k, double v) { meta_.emplace_back(k, fmt(v)); }
    void meta(const std::string& k, int v) { meta_.emplace_back(k, std::to_string(v)); }

    // cells follow the column order
    void row(std::vector<json> cells) { rows_.push_back(std::move(cells)); }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "json")
            write_json(os);
        else
            write_csv(os);
    }

  private:
    void write_csv(std::ostream& os) const {
        os << "# hypcap " << hypcap::version_string << "\n";
        for (const auto& [k, v] : meta_) os << "# " << k << ": " << v << "\n";
        for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
        os << "\n";
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_escape(cell(r[i]));
            os << "\n";
        }
    }

    void write_json(std::ostream& os) const {
        json out;
        out["meta"]["version"] = hypcap::version_string;
        for (const auto& [k, v] : meta_) out["meta"][k] = v;
        out["rows"] = json::array();
        for (const auto& r : rows_) {
            json obj;
            for (std::size_t i = 0; i < r.size() && i < columns_.size(); ++i)
                obj[columns_[i]] = r[i];
            out["rows"].push_back(std::move(obj));
        }
        os << out.dump(2) << "\n";
    }

    static std::string cell(const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_float()) return fmt(v.get<double>());
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
        if (v.is_null()) return "";
        return v.dump();
    }

    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::vector<json>> rows_;
};

int write_out(const Table& t, const std::string& out_path, const std::string& format,
              bool partial) {
    if (out_path.empty()) {
        t.write(std::cout, format);
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot open output file: " << out_path << "\n";
            return 1;
        }
        t.write(f, format);
    }
    return partial ? 2 : 0;
}

Point parse_point(const std::string& s) {
    double x = 0.0, y = 0.0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &x, &y) != 2)
        throw std::invalid_argument("expected a point as x,y; got: " + s);
    return Point{x, y};
}

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stod(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

// Shape specifications: "circle:cx,cy,r", "square:cx,cy,h", "hyp-reuleaux:r",
// "euc-reuleaux:r", "euc-reuleaux-diam:t", "hyp-disk:t", "notched-polygon",
// "polygon:x1,y1;x2,y2;...", "csv:path".
hypcap::JordanBoundary parse_shape(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string type = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? std::string{} : spec.substr(colon + 1);
    const auto need = [&](std::size_t k) {
        const auto v = parse_reals(args);
        if (v.size() != k)
            throw std::invalid_argument("shape " + type + " needs " + std::to_string(k) +
                                        " numeric arguments");
        return v;
    };
    if (type == "circle") {
        const auto v = need(3);
        return hypcap::circle_boundary(Point{v[0], v[1]}, v[2]);
    }
    if (type == "square") {
        const auto v = need(3);
        return hypcap::centered_square(Point{v[0], v[1]}, v[2]);
    }
    if (type == "hyp-reuleaux") return hypcap::hyp_reuleaux(need(1)[0]).boundary;
    if (type == "euc-reuleaux") return hypcap::euc_reuleaux(need(1)[0]).boundary;
    if (type == "euc-reuleaux-diam")
        return hypcap::euc_reuleaux_with_hyp_diameter(need(1)[0]).boundary;
    if (type == "hyp-disk") return hypcap::hyp_disk_shape(need(1)[0]);
    if (type == "notched-polygon") return hypcap::notched_polygon();
    if (type == "polygon") {
        std::vector<Point> vs;
        std::size_t pos = 0;
        while (pos <= args.size()) {
            std::size_t next = args.find(';', pos);
            if (next == std::string::npos) next = args.size();
            vs.push_back(parse_point(args.substr(pos, next - pos)));
            pos = next + 1;
        }
        return hypcap::polygon(vs);
    }
    if (type == "csv") {
        std::ifstream f(args);
        if (!f) throw std::invalid_argument("cannot open boundary csv: " + args);
        return hypcap::read_boundary_csv(f);
    }
    throw std::invalid_argument("unknown shape type: " + type);
}

// hyperbolic diameter of a built-in shape in the unit disk, when it is known
std::optional<double> shape_diameter(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string type = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? std::string{} : spec.substr(colon + 1);
    if (type == "hyp-reuleaux") return hypcap::hyp_reuleaux(parse_reals(args)[0]).M;
    if (type == "euc-reuleaux") return hypcap::euc_reuleaux(parse_reals(args)[0]).hyp_diameter;
    if (type == "euc-reuleaux-diam" || type == "hyp-disk") return parse_reals(args)[0];
    return std::nullopt;
}

bool mu_below_range(double t) { return std::tanh(t / 2.0) < hypcap::mu_stable_min; }

int run_table2(const std::vector<double>& rs, int n, const std::string& out,
               const std::string& format) {
    for (double r : rs)
        if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("table2: each r must lie in (0,1)");
    Table t({"r", "h-diam", "capSeg", "capERtri", "capDisk", "capHRtri", "capJung",
             "err_capERtri", "err_capHRtri", "n_nodes", "error"});
    t.meta("command", "table2");
    t.meta("n", n);
    t.meta("alpha", "0.4+0.6r,0");
    t.meta("z2", fmt(Point{0.0, 0.0}));
    bool partial = false;
    bool warn = false;
    for (double r : rs) {
        const auto row = hypcap::table2_row(r, n);
        if (!row.error.empty()) partial = true;
        warn = warn || mu_below_range(row.t);
        t.row({row.r, row.t, row.cap_seg, row.cap_euc_tri, row.cap_disk, row.cap_hyp_tri,
               row.cap_jung, row.euc_tri_err_est, row.hyp_tri_err_est, row.n_nodes, row.error});
    }
    if (warn) t.meta("warning", "capSeg evaluated below the calibrated range of mu");
    return write_out(t, out, format, partial);
}

int run_table1(const std::vector<double>& hs, int n, int map_n, const std::string& out,
               const std::string& format) {
    for (double h : hs)
        if (!(h > 0.0 && h < 0.5))
            throw std::invalid_argument("table1: each h must lie in (0, 0.5)");
    Table t({"h", "rho_G", "cap", "err_est", "n_nodes", "error"});
    t.meta("command", "table1");
    t.meta("n", n);
    t.meta("map_n", map_n);
    t.meta("map_alpha", fmt(Point{0.5, 0.5}));
    t.meta("cap_alpha", fmt(Point{1.5, 0.1}));
    t.meta("cap_z2", fmt(Point{0.5, 0.5}));
    const auto m = hypcap::riemann_map(hypcap::notched_polygon(), Point{0.5, 0.5}, map_n);
    bool partial = false;
    for (double h : hs) {
        const auto row = hypcap::table1_row(m, h, n);
        if (!row.error.empty()) partial = true;
        t.row({row.h, row.hyp_diam, row.cap, row.cap_err_est, row.n_nodes, row.error});
    }
    return write_out(t, out, format, partial);
}

int run_quotients(double t_min, double t_max, int steps, int n, const std::string& out,
                  const std::string& format) {
    if (!(t_min > 0.0) || !(t_max >= t_min))
        throw std::invalid_argument("quotients: need 0 < t-min <= t-max");
    if (steps < 1) throw std::invalid_argument("quotients: need steps >= 1");
    Table t({"t", "b2_over_b1", "capHRtri_over_b1", "one", "capERtri_over_b1", "two_over_sqrt3",
             "error"});
    t.meta("command", "quotients");
    t.meta("t_min", t_min);
    t.meta("t_max", t_max);
    t.meta("steps", steps);
    t.meta("n", n);
    bool partial = false;
    for (int i = 0; i < steps; ++i) {
        const double tv = steps == 1 ? t_min : t_min + (t_max - t_min) * i / (steps - 1);
        const auto row = hypcap::quotient_row(tv, n);
        if (!row.error.empty()) partial = true;
        t.row({row.t, row.b2_over_b1, row.hyp_tri_over_b1, row.one, row.euc_tri_over_b1,
               row.limit, row.error});
    }
    return write_out(t, out, format, partial);
}

int run_bounds(const std::vector<double>& ts, const std::vector<int>& dims,
               const std::string& out, const std::string& format) {
    for (double tv : ts)
        if (!(tv > 0.0)) throw std::invalid_argument("bounds: each t must be positive");
    for (int d : dims)
        if (d < 2) throw std::invalid_argument("bounds: each dim must be >= 2");
    std::vector<std::string> cols{"t", "capSeg", "b1", "b2", "jung_h2"};
    for (int d : dims) {
        cols.push_back("jung_h" + std::to_string(d));
        cols.push_back("capUpper" + std::to_string(d));
    }
    Table t(cols);
    t.meta("command", "bounds");
    bool warn = false;
    for (double tv : ts) {
        const auto rep = hypcap::make_bounds_report(tv, dims);
        warn = warn || mu_below_range(tv);
        std::vector<json> cells{rep.t, rep.cap_seg, rep.b1, rep.b2, rep.jung_radius_2d};
        for (const auto& d : rep.dims) {
            cells.push_back(d.h);
            cells.push_back(d.cap_upper);
        }
        t.row(std::move(cells));
    }
    if (warn) t.meta("warning", "capSeg evaluated below the calibrated range of mu");
    return write_out(t, out, format, false);
}

int run_cap(const std::string& outer_spec, const std::string& inner_spec,
            const std::string& alpha_str, const std::string& z2_str, int n, double tol, int n_max,
            const std::string& out, const std::string& format) {
    const auto outer = parse_shape(outer_spec);
    const auto inner = parse_shape(inner_spec);
    if (alpha_str.empty() != z2_str.empty())
        throw std::invalid_argument("cap: give both --alpha and --z2, or neither");
    const hypcap::Condenser c =
        alpha_str.empty()
            ? hypcap::make_condenser(outer, inner)
            : hypcap::make_condenser(outer, inner, parse_point(alpha_str), parse_point(z2_str));

    Table t({"shape", "params", "t", "cap", "err_est", "n_nodes", "error"});
    t.meta("command", "cap");
    t.meta("outer", outer_spec);
    t.meta("inner", inner_spec);
    t.meta("alpha", fmt(c.alpha));
    t.meta("z2", fmt(c.z2));
    t.meta("n", n);
    if (tol > 0.0) {
        t.meta("tol", tol);
        t.meta("n_max", n_max);
    }

    const auto colon = inner_spec.find(':');
    const std::string shape_name = inner_spec.substr(0, colon);
    const std::string shape_params =
        colon == std::string::npos ? std::string{} : inner_spec.substr(colon + 1);
    const auto diam = shape_diameter(inner_spec);
    const json tcell = diam ? json(*diam) : json(nullptr);

    bool partial = false;
    try {
        const hypcap::CapacityResult res =
            tol > 0.0 ? hypcap::capacity_refined(c, tol, n, n_max) : hypcap::capacity(c, n);
        t.row({shape_name, shape_params, tcell, res.value, res.error_estimate, res.n_nodes, ""});
    } catch (const hypcap::resolution_error& e) {
        partial = true;
        t.row({shape_name, shape_params, tcell, nullptr, nullptr, nullptr, e.what()});
    }
    return write_out(t, out, format, partial);
}

int run_hypdiam(const std::string& domain_spec, const std::string& set_spec,
                const std::string& alpha_str, int n, int k, const std::string& out,
                const std::string& format) {
    const Point alpha = parse_point(alpha_str);
    const auto m = hypcap::riemann_map(parse_shape(domain_spec), alpha, n);
    const double d = hypcap::hyp_diameter(m, parse_shape(set_spec), k);
    Table t({"domain", "set", "alpha", "n", "k", "diam"});
    t.meta("command", "hypdiam");
    t.meta("boundary_error", m.boundary_error());
    t.row({domain_spec, set_spec, fmt(alpha), n, k, d});
    return write_out(t, out, format, false);
}

int run_shape(const std::string& spec, int points, const std::string& out,
              const std::string& format) {
    const auto b = parse_shape(spec);
    Table t({"arc_index", "t_param", "x", "y"});
    t.meta("command", "shape");
    t.meta("shape", spec);
    t.meta("points", points);
    t.meta("arcs", b.arc_count());
    for (const auto& r : hypcap::sample_boundary(b, points))
        t.row({r.arc_index, r.t_param, r.p.real(), r.p.imag()});
    return write_out(t, out, format, false);
}

int run_hypfield(const std::string& domain_spec, const std::string& alpha_str, int n, int grid,
                 const std::string& box_str, const std::string& out, const std::string& format) {
    if (grid < 2) throw std::invalid_argument("hypfield: need --grid >= 2");
    const Point alpha = parse_point(alpha_str);
    const auto b = parse_shape(domain_spec);
    double x0, y0, x1, y1;
    if (box_str.empty()) {
        x0 = y0 = std::numeric_limits<double>::infinity();
        x1 = y1 = -std::numeric_limits<double>::infinity();
        for (const auto& p : b.sample_with_corners(256)) {
            x0 = std::min(x0, p.real());
            x1 = std::max(x1, p.real());
            y0 = std::min(y0, p.imag());
            y1 = std::max(y1, p.imag());
        }
    } else {
        const auto v = parse_reals(box_str);
        if (v.size() != 4) throw std::invalid_argument("hypfield: --box needs x0,y0,x1,y1");
        x0 = v[0];
        y0 = v[1];
        x1 = v[2];
        y1 = v[3];
    }
    const auto m = hypcap::riemann_map(b, alpha, n);
    Table t({"x", "y", "rho"});
    t.meta("command", "hypfield");
    t.meta("domain", domain_spec);
    t.meta("alpha", fmt(alpha));
    t.meta("n", n);
    t.meta("grid", grid);
    t.meta("box", fmt(x0) + "," + fmt(y0) + "," + fmt(x1) + "," + fmt(y1));
    for (int iy = 0; iy < grid; ++iy)
        for (int ix = 0; ix < grid; ++ix) {
            const Point z{x0 + (x1 - x0) * (ix + 0.5) / grid, y0 + (y1 - y0) * (iy + 0.5) / grid};
            double rho = std::numeric_limits<double>::quiet_NaN();
            if (m.contains(z)) rho = hypcap::rho_G(m, alpha, z);
            t.row({z.real(), z.imag(), rho});
        }
    return write_out(t, out, format, false);
}

int run_qc(double K, double tv, const std::string& out, const std::string& format) {
    const auto q = hypcap::qc_diameter_bound(K, tv);
    Table t({"K", "t", "value", "vacuous"});
    t.meta("command", "qc-bound");
    t.row({K, tv, q.value, q.vacuous});
    return write_out(t, out, format, false);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic geometry and condenser capacities in plane domains"};
    app.require_subcommand(1);
    app.set_version_flag("--version", hypcap::version_string);

    std::string out_path;
    std::string format = "csv";
    const auto add_common = [&](CLI::App* sc) {
        sc->add_option("--out", out_path, "output file (default: stdout)");
        sc->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* t2 = app.add_subcommand("table2",
                                  "capacities and bounds for Reuleaux triangles in the unit disk");
    std::vector<double> t2_r{0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95};
    int t2_n = 768;
    t2->add_option("--r", t2_r, "vertex circumradius list, each in (0,1)");
    t2->add_option("--n", t2_n, "quadrature nodes per boundary");
    add_common(t2);

    auto* t1 = app.add_subcommand("table1",
                                  "diameters and capacities of squares in the notched polygon");
    std::vector<double> t1_h{0.1, 0.2, 0.3, 0.4, 0.45};
    int t1_n = 2048, t1_map_n = 2048;
    t1->add_option("--half-side", t1_h, "square half-side list, each in (0, 0.5)");
    t1->add_option("--n", t1_n, "quadrature nodes per boundary for the capacity solve");
    t1->add_option("--map-n", t1_map_n, "quadrature nodes for the domain map");
    add_common(t1);

    auto* qt = app.add_subcommand("quotients", "capacity bounds normalized by the disk bound b1");
    double qt_min = 0.5, qt_max = 8.0;
    int qt_steps = 16, qt_n = 256;
    qt->add_option("--t-min", qt_min, "first diameter");
    qt->add_option("--t-max", qt_max, "last diameter");
    qt->add_option("--steps", qt_steps, "grid points");
    qt->add_option("--n", qt_n, "quadrature nodes per boundary");
    add_common(qt);

    auto* bo = app.add_subcommand("bounds", "closed-form capacity bounds for given diameters");
    std::vector<double> bo_t;
    std::vector<int> bo_dims;
    bo->add_option("--t", bo_t, "hyperbolic diameter list")->required();
    bo->add_option("--dim", bo_dims, "extra dimensions for the Jung-ball bound");
    add_common(bo);

    auto* cp = app.add_subcommand("cap", "condenser capacity for a pair of boundaries");
    std::string cp_outer = "circle:0,0,1", cp_inner, cp_alpha, cp_z2;
    int cp_n = 512, cp_n_max = 4096;
    double cp_tol = 0.0;
    cp->add_option("--outer", cp_outer, "outer boundary shape");
    cp->add_option("--inner", cp_inner, "inner boundary shape")->required();
    cp->add_option("--alpha", cp_alpha, "reference point in the ring, as x,y");
    cp->add_option("--z2", cp_z2, "reference point inside the inner set, as x,y");
    cp->add_option("--n", cp_n, "quadrature nodes per boundary");
    cp->add_option("--tol", cp_tol, "relative tolerance; doubles n until met");
    cp->add_option("--n-max", cp_n_max, "node cap for --tol refinement");
    add_common(cp);

    auto* hd = app.add_subcommand("hypdiam", "hyperbolic diameter of a set inside a domain");
    std::string hd_domain = "circle:0,0,1", hd_set, hd_alpha = "0,0";
    int hd_n = 1024, hd_k = 1024;
    hd->add_option("--domain", hd_domain, "domain boundary shape");
    hd->add_option("--set", hd_set, "inner boundary shape")->required();
    hd->add_option("--alpha", hd_alpha, "map base point, as x,y");
    hd->add_option("--n", hd_n, "quadrature nodes for the domain map");
    hd->add_option("--k", hd_k, "boundary samples of the set");
    add_common(hd);

    auto* sh = app.add_subcommand("shape", "sample a boundary curve as CSV rows");
    std::string sh_type = "circle", sh_vertices;
    double sh_r = 0.5, sh_t = 1.0, sh_cx = 0.0, sh_cy = 0.0, sh_radius = 1.0, sh_h = 0.25;
    int sh_points = 256;
    sh->add_option("--type", sh_type,
                   "circle | square | hyp-reuleaux | euc-reuleaux | euc-reuleaux-diam | "
                   "hyp-disk | notched-polygon | polygon");
    sh->add_option("--r", sh_r, "circumradius for the Reuleaux families");
    sh->add_option("--t", sh_t, "hyperbolic diameter for hyp-disk / euc-reuleaux-diam");
    sh->add_option("--cx", sh_cx, "center x for circle / square");
    sh->add_option("--cy", sh_cy, "center y for circle / square");
    sh->add_option("--radius", sh_radius, "radius for circle");
    sh->add_option("--half-side", sh_h, "half side for square");
    sh->add_option("--vertices", sh_vertices, "polygon vertices as x1,y1;x2,y2;...");
    sh->add_option("--points", sh_points, "total boundary samples");
    add_common(sh);

    auto* hf = app.add_subcommand("hypfield", "grid of hyperbolic distances from the base point");
    std::string hf_domain = "notched-polygon", hf_alpha = "0.5,0.5", hf_box;
    int hf_n = 2048, hf_grid = 120;
    hf->add_option("--domain", hf_domain, "domain boundary shape");
    hf->add_option("--alpha", hf_alpha, "map base point, as x,y");
    hf->add_option("--n", hf_n, "quadrature nodes for the domain map");
    hf->add_option("--grid", hf_grid, "grid resolution per axis");
    hf->add_option("--box", hf_box, "evaluation box x0,y0,x1,y1 (default: boundary box)");
    add_common(hf);

    auto* qc = app.add_subcommand("qc-bound",
                                  "diameter bound for quasiconformal images of the unit disk");
    double qc_K = 1.0, qc_t = 1.0;
    qc->add_option("--K", qc_K, "maximal dilatation, >= 1")->required();
    qc->add_option("--t", qc_t, "hyperbolic diameter of the preimage")->required();
    add_common(qc);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*t2) return run_table2(t2_r, t2_n, out_path, format);
        if (*t1) return run_table1(t1_h, t1_n, t1_map_n, out_path, format);
        if (*qt) return run_quotients(qt_min, qt_max, qt_steps, qt_n, out_path, format);
        if (*bo) return run_bounds(bo_t, bo_dims, out_path, format);
        if (*cp) return run_cap(cp_outer, cp_inner, cp_alpha, cp_z2, cp_n, cp_tol, cp_n_max,
                                out_path, format);
        if (*hd) return run_hypdiam(hd_domain, hd_set, hd_alpha, hd_n, hd_k, out_path, format);
        if (*sh) {
            std::string spec = sh_type;
            if (sh_type == "hyp-reuleaux" || sh_type == "euc-reuleaux") spec += ":" + fmt(sh_r);
            if (sh_type == "hyp-disk" || sh_type == "euc-reuleaux-diam") spec += ":" + fmt(sh_t);
            if (sh_type == "circle")
                spec += ":" + fmt(sh_cx) + "," + fmt(sh_cy) + "," + fmt(sh_radius);
            if (sh_type == "square") spec += ":" + fmt(sh_cx) + "," + fmt(sh_cy) + "," + fmt(sh_h);
            if (sh_type == "polygon") spec += ":" + sh_vertices;
            return run_shape(spec, sh_points, out_path, format);
        }
        if (*hf) return run_hypfield(hf_domain, hf_alpha, hf_n, hf_grid, hf_box, out_path, format);
        if (*qc) return run_qc(qc_K, qc_t, out_path, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
